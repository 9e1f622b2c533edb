// welded: command-line front end.
//
//   welded parse       [FILE | --code CODE]
//   welded multiplex   [FILE | --code CODE] --weights "m1 m2 ..."
//   welded invariants  [FILE | --code CODE] [--weights W] [--k N] [--mode single|multi]
//                      [--targets S3,S4] [--single-deletion]
//   welded fuzz        [FILE | --code CODE] [--steps N] [--trials N] [--seed N] [--jobs N]
//                      [--no-weight-grid]
//   welded verify-examples [--fixtures DIR] [--no-weight-grid]
//
// Exit status: 0 success, 1 invariant mismatch or failed check, 2 usage or
// validation error.

#include <welded/fuzz.hpp>
#include <welded/gauss.hpp>
#include <welded/invariants.hpp>
#include <welded/multiplex.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#ifndef WELDED_DEFAULT_FIXTURES
#define WELDED_DEFAULT_FIXTURES "fixtures"
#endif

using namespace welded;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string file;
  std::string code;
  bool has_code = false;

  GaussDiagram load() const {
    if (has_code && !file.empty()) throw UsageError("give either a file or --code, not both");
    if (has_code) return parse_gauss_code(code);
    if (file.empty()) throw UsageError("no input: give a file or --code");
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    return load_gauss_file(file);
  }
};

MultiplexWeights parse_weights(const std::string& text) {
  std::istringstream is(text);
  std::vector<int> v;
  std::string tok;
  while (is >> tok) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::SyntaxError, "bad weight '" + tok + "'");
    }
  }
  return MultiplexWeights(v);
}

std::vector<FiniteTarget> parse_targets(const std::string& text) {
  std::vector<FiniteTarget> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(parse_target(item));
  }
  return out;
}

std::string matrix_text(const IntSquare& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.size(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? " " : "") + std::to_string(m[i][j]);
    s += "]";
  }
  return s + "]";
}

void print_diagram(const GaussDiagram& d, bool as_json) {
  if (as_json) {
    json j;
    j["code"] = serialize_gauss_code(d);
    j["components"] = d.component_count();
    j["crossings"] = d.crossing_count();
    std::cout << j.dump() << "\n";
  } else {
    std::cout << serialize_gauss_code(d) << "\n"
              << "components: " << d.component_count() << "\n"
              << "crossings: " << d.crossing_count() << "\n";
  }
}

// ---------------------------------------------------------------- verify

struct CheckRow {
  std::string status;  // PASS, FAIL or SKIP
  std::string name;
  std::string expected;
  std::string computed;
};

class Checker {
 public:
  void check(const std::string& name, const std::string& expected, const std::string& computed) {
    rows_.push_back({expected == computed ? "PASS" : "FAIL", name, expected, computed});
  }
  void check(const std::string& name, const UnitNormalForm& expected, const UnitNormalForm& computed) {
    rows_.push_back(
        {expected == computed ? "PASS" : "FAIL", name, expected.to_string(), computed.to_string()});
  }
  void skip(const std::string& name) { rows_.push_back({"SKIP", name, "", ""}); }
  void error(const std::string& name, const std::string& what) {
    rows_.push_back({"FAIL", name, "", "error: " + what});
  }

  std::size_t count(const std::string& status) const {
    return static_cast<std::size_t>(std::count_if(
        rows_.begin(), rows_.end(), [&](const CheckRow& r) { return r.status == status; }));
  }
  const std::vector<CheckRow>& rows() const { return rows_; }

 private:
  std::vector<CheckRow> rows_;
};

LaurentPolynomial tpow(int e) { return LaurentPolynomial::variable(1, 0, e); }
LaurentPolynomial one_minus(int e) { return LaurentPolynomial::one(1) - tpow(e); }

void verify_vanishing_link(Checker& c, const GaussDiagram& d, bool grid) {
  c.check("vanishing_link: single-variable delta1", normalize(LaurentPolynomial(1)),
          alexander(d, 1, VariableMode::Single));
  if (!grid) {
    c.skip("vanishing_link: multiplexed family over {0..3}^3");
    c.skip("vanishing_link: intersection number (1,2) over {0..3}^3");
    return;
  }
  std::size_t bad_family = 0, bad_x = 0;
  std::string first_family, first_x;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b)
      for (int e = 0; e <= 3; ++e) {
        const MultiplexWeights m{a, b, e};
        const auto md = multiplex(d, m);
        const auto g = gcd_many({one_minus(a), one_minus(b), one_minus(e)});
        const auto diff = tpow(a) - tpow(b);
        const auto want = normalize(g.representative() * diff * diff * one_minus(e));
        const auto got = alexander(md, 1, VariableMode::Single);
        if (got != want && bad_family++ == 0)
          first_family = "m = " + m.to_string() + ": " + got.to_string() + " vs " + want.to_string();
        const auto x = intersection_numbers(md)[0][1];
        if (x != a - b && bad_x++ == 0)
          first_x = "m = " + m.to_string() + ": " + std::to_string(x);
      }
  c.check("vanishing_link: multiplexed family over {0..3}^3", "64 of 64",
          std::to_string(64 - bad_family) + " of 64" + (first_family.empty() ? "" : "; " + first_family));
  c.check("vanishing_link: intersection number (1,2) over {0..3}^3", "64 of 64",
          std::to_string(64 - bad_x) + " of 64" + (first_x.empty() ? "" : "; " + first_x));
}

void verify_virtual_pair(Checker& c, const GaussDiagram& d, const GaussDiagram& dp, bool grid) {
  const auto one3 = LaurentPolynomial::one(3);
  auto v = [&](std::size_t i) { return LaurentPolynomial::variable(3, i); };
  const auto want = normalize((one3 - v(0)) * (one3 - v(1)) * (one3 - v(2)));
  c.check("virtual_pair_d: multivariable delta1", want, alexander(d, 1, VariableMode::Multi));
  c.check("virtual_pair_dp: multivariable delta1", want, alexander(dp, 1, VariableMode::Multi));
  if (!grid) {
    c.skip("virtual_pair_d: multiplexed delta1 over {-2..3}^3");
    c.skip("virtual_pair_dp: multiplexed delta1 over {-2..3}^3");
    return;
  }
  std::size_t ok_d = 0, ok_dp = 0, total = 0;
  for (int a = -2; a <= 3; ++a)
    for (int b = -2; b <= 3; ++b)
      for (int e = -2; e <= 3; ++e) {
        ++total;
        const MultiplexWeights m{a, b, e};
        const auto x = one_minus(a), y = one_minus(b), z = one_minus(e);
        ok_d += alexander_of_multiplex(d, m, 1, VariableMode::Single) == normalize(x * x * y * z);
        ok_dp += alexander_of_multiplex(dp, m, 1, VariableMode::Single) == normalize(x * y * y * z);
      }
  const auto all = std::to_string(total) + " of " + std::to_string(total);
  c.check("virtual_pair_d: multiplexed delta1 over {-2..3}^3", all,
          std::to_string(ok_d) + " of " + std::to_string(total));
  c.check("virtual_pair_dp: multiplexed delta1 over {-2..3}^3", all,
          std::to_string(ok_dp) + " of " + std::to_string(total));
}

void verify_borromean(Checker& c, const GaussDiagram& d) {
  const auto u = one_minus(1);
  c.check("borromean: delta2 with weights 1 1 0", normalize(u * u),
          alexander_of_multiplex(d, {1, 1, 0}, 2, VariableMode::Single));
}

void verify_structure(Checker& c, const std::vector<std::pair<std::string, GaussDiagram>>& all) {
  for (const auto& [name, d] : all) {
    const auto n = d.component_count();
    c.check(name + ": D(1,...,1) = D", serialize_gauss_code(d),
            serialize_gauss_code(multiplex(d, MultiplexWeights::uniform(n, 1))));
    c.check(name + ": D(0,...,0) is trivial", serialize_gauss_code(GaussDiagram::trivial(n)),
            serialize_gauss_code(multiplex(d, MultiplexWeights::uniform(n, 0))));
  }
  for (int s : {1, -1}) {
    for (int m = -3; m <= 3; ++m) {
      std::string expected = "c =";
      const int e = -s * m;
      if (e != 0) expected += " b" + (e == 1 ? std::string() : "^" + std::to_string(e));
      expected += " a";
      if (e != 0) expected += " b" + (-e == 1 ? std::string() : "^" + std::to_string(-e));
      std::string got;
      try {
        got = verify_multiplex_relation(Sign(s), m).to_string();
      } catch (const Error& err) {
        got = err.what();
      }
      c.check("band relation, sign " + std::string(s > 0 ? "+" : "-") + ", m = " + std::to_string(m),
              expected, got);
    }
  }
}

int run_verify(const std::string& dir, bool grid, bool as_json) {
  Checker c;
  std::vector<std::pair<std::string, GaussDiagram>> loaded;
  auto load = [&](const std::string& name) -> const GaussDiagram* {
    try {
      loaded.emplace_back(name, load_gauss_file(dir + "/" + name + ".gauss"));
      return &loaded.back().second;
    } catch (const std::exception& e) {
      c.error(name + ": load", e.what());
      return nullptr;
    }
  };
  loaded.reserve(8);
  const auto* vanishing = load("vanishing_link");
  const auto* vd = load("virtual_pair_d");
  const auto* vdp = load("virtual_pair_dp");
  const auto* borromean = load("borromean");
  for (const auto* name : {"unknot", "trefoil", "hopf"}) (void)load(name);

  auto guarded = [&](const std::string& what, auto fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      c.error(what, e.what());
    }
  };
  if (vanishing) guarded("vanishing_link", [&] { verify_vanishing_link(c, *vanishing, grid); });
  if (vd && vdp) guarded("virtual_pair", [&] { verify_virtual_pair(c, *vd, *vdp, grid); });
  if (borromean) guarded("borromean", [&] { verify_borromean(c, *borromean); });
  guarded("structure", [&] { verify_structure(c, loaded); });

  const auto failed = c.count("FAIL"), skipped = c.count("SKIP");
  if (as_json) {
    json rows = json::array();
    for (const auto& r : c.rows())
      rows.push_back({{"status", r.status}, {"check", r.name}, {"expected", r.expected},
                      {"computed", r.computed}});
    json j;
    j["checks"] = rows;
    j["failed"] = failed;
    j["skipped"] = skipped;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& r : c.rows()) {
      std::cout << r.status << "  " << r.name;
      if (r.status != "SKIP") std::cout << "  expected: " << r.expected << "  computed: " << r.computed;
      std::cout << "\n";
    }
    if (failed) {
      std::cout << "FAILED: " << failed << " of " << c.rows().size() << " checks\n";
    } else {
      std::cout << "all checks passed";
      if (skipped) std::cout << " (" << skipped << " skipped)";
      std::cout << "\n";
    }
  }
  return failed ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gauss diagrams of welded links: parsing, multiplexing, invariants"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string output = "text";
  app.add_option("--output", output, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  Input input;
  std::vector<CLI::Option*> code_options;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("file", input.file, "Gauss code file");
    code_options.push_back(sub->add_option("--code", input.code, "inline Gauss code"));
  };

  auto* parse = app.add_subcommand("parse", "validate a diagram and print its canonical code");
  add_input(parse);

  std::string weights_text;
  auto* mult = app.add_subcommand("multiplex", "print the multiplexed diagram");
  add_input(mult);
  mult->add_option("--weights", weights_text, "one integer per component")->required();

  auto* inv = app.add_subcommand("invariants", "print the invariant report");
  add_input(inv);
  std::size_t k = 1;
  std::string mode = "single";
  std::string targets_text = "S3,S4";
  bool single_deletion = false;
  inv->add_option("--weights", weights_text, "multiplex before computing");
  inv->add_option("--k", k, "index of the extra Alexander polynomial")->check(CLI::PositiveNumber);
  inv->add_option("--mode", mode, "single or multi")->check(CLI::IsMember({"single", "multi"}));
  inv->add_option("--targets", targets_text, "comma-separated symmetric groups");
  inv->add_flag("--single-deletion", single_deletion, "delete only the first Jacobian column");

  auto* fz = app.add_subcommand("fuzz", "check invariance along random move sequences");
  add_input(fz);
  FuzzOptions fopts;
  bool no_grid = false;
  fz->add_option("--steps", fopts.steps)->capture_default_str();
  fz->add_option("--trials", fopts.trials)->capture_default_str();
  fz->add_option("--seed", fopts.seed)->capture_default_str();
  fz->add_option("--jobs", fopts.jobs)->capture_default_str();
  fz->add_option("--targets", targets_text, "comma-separated symmetric groups");
  fz->add_flag("--no-weight-grid", no_grid, "skip the multiplexed comparisons");

  auto* ver = app.add_subcommand("verify-examples", "recompute the worked examples");
  std::string fixtures = WELDED_DEFAULT_FIXTURES;
  ver->add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();
  ver->add_flag("--no-weight-grid", no_grid, "skip the weight sweeps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  input.has_code = std::any_of(code_options.begin(), code_options.end(),
                               [](const CLI::Option* o) { return o->count() > 0; });
  const bool as_json = output == "json";

  try {
    if (*parse) {
      print_diagram(input.load(), as_json);
      return kOk;
    }
    if (*mult) {
      print_diagram(multiplex(input.load(), parse_weights(weights_text)), as_json);
      return kOk;
    }
    if (*inv) {
      const auto targets = parse_targets(targets_text);
      GaussDiagram d = input.load();
      if (!weights_text.empty()) d = multiplex(d, parse_weights(weights_text));
      AlexanderOptions opts;
      opts.single_deletion = single_deletion;
      const auto vm = mode == "multi" ? VariableMode::Multi : VariableMode::Single;
      const auto report = full_report(d, targets, opts);
      const auto delta = alexander(d, k, vm, opts);
      if (as_json) {
        json j = to_json(report);
        j["delta"] = {{"k", k}, {"mode", mode}, {"polynomial", to_json(delta)}};
        std::cout << j.dump() << "\n";
      } else {
        std::cout << "delta1_single: " << report.delta1_single.to_string() << "\n"
                  << "delta2_single: " << report.delta2_single.to_string() << "\n"
                  << "delta1_multi: " << report.delta1_multi.to_string() << "\n"
                  << "linking: " << matrix_text(report.linking) << "\n"
                  << "intersection: " << matrix_text(report.intersection) << "\n";
        for (const auto& [name, n] : report.hom_counts)
          std::cout << "homs " << name << ": " << n << "\n";
        std::cout << "k: " << k << ", mode: " << mode << "\n"
                  << "delta: " << delta.to_string() << "\n";
      }
      return kOk;
    }
    if (*fz) {
      fopts.targets = parse_targets(targets_text);
      fopts.weight_grid = !no_grid;
      const GaussDiagram d = input.load();
      const auto summary = run_fuzz({{input.file.empty() ? "code" : input.file, d}}, fopts);
      const auto failures = summary.failures();
      if (as_json) {
        json trials = json::array();
        for (const auto& t : summary.trials) {
          if (t.ok()) continue;
          trials.push_back({{"trial", t.index}, {"seed", t.seed}, {"mismatch", t.mismatch},
                            {"error", t.error}, {"script", to_string(t.script)}});
        }
        json j;
        j["trials"] = summary.trials.size();
        j["passed"] = summary.trials.size() - failures;
        j["failures"] = trials;
        std::cout << j.dump() << "\n";
      } else {
        for (const auto& t : summary.trials) {
          if (t.ok()) continue;
          std::cout << "trial " << t.index << " failed: "
                    << (t.error.empty() ? t.mismatch : t.error) << "\n"
                    << to_string(t.script);
        }
        std::cout << summary.trials.size() - failures << "/" << summary.trials.size()
                  << " trials passed\n";
      }
      return failures ? kMismatch : kOk;
    }
    if (*ver) return run_verify(fixtures, !no_grid, as_json);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
