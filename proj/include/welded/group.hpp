#pragma once

// Finitely presented groups of welded diagrams: Wirtinger and generalized
// presentations, Tietze generator elimination, Fox calculus, Jacobians and
// abelianization.

#include <welded/error.hpp>
#include <welded/gauss.hpp>
#include <welded/laurent.hpp>
#include <welded/matrix.hpp>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace welded {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // ±1
  friend constexpr auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in the generators.
class Word {
 public:
  Word() = default;
  explicit Word(const std::vector<Letter>& letters) {
    for (const auto& l : letters) push(l);
  }

  static Word letter(std::size_t g, int exponent = 1) {
    Word w;
    w.append_power(g, exponent);
    return w;
  }

  static Word power(std::size_t g, int k) { return letter(g, k); }

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  void push(Letter l) {
    if (l.exponent != 1 && l.exponent != -1) {
      throw Error(ErrorCode::SyntaxError, "letters carry exponent ±1");
    }
    if (!letters_.empty() && letters_.back().generator == l.generator &&
        letters_.back().exponent == -l.exponent) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  void append_power(std::size_t g, int k) {
    const int step = k > 0 ? 1 : -1;
    for (int i = 0; i != k; i += step) push({g, step});
  }

  Word inverse() const {
    Word w;
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
      w.letters_.push_back({it->generator, -it->exponent});
    return w;
  }

  Word& operator*=(const Word& o) {
    for (const auto& l : o.letters_) push(l);
    return *this;
  }

  friend Word operator*(Word a, const Word& b) {
    a *= b;
    return a;
  }

  std::size_t occurrences(std::size_t g) const {
    return static_cast<std::size_t>(std::count_if(
        letters_.begin(), letters_.end(),
        [g](const Letter& l) { return l.generator == g; }));
  }

  bool contains(std::size_t g) const { return occurrences(g) > 0; }

  /// Conjugate so the first and last letters do not cancel.
  Word cyclically_reduced() const {
    std::size_t lo = 0, hi = letters_.size();
    while (hi - lo >= 2 && letters_[lo].generator == letters_[hi - 1].generator &&
           letters_[lo].exponent == -letters_[hi - 1].exponent) {
      ++lo;
      --hi;
    }
    Word w;
    w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(lo),
                      letters_.begin() + static_cast<std::ptrdiff_t>(hi));
    return w;
  }

  /// Replaces each occurrence of generator g by `image` (or its inverse).
  Word substitute(std::size_t g, const Word& image) const {
    Word out;
    const Word inv = image.inverse();
    for (const auto& l : letters_) {
      if (l.generator == g) {
        out *= l.exponent > 0 ? image : inv;
      } else {
        out.push(l);
      }
    }
    return out;
  }

  /// Generator indices shifted down past a removed one.
  Word without_generator_index(std::size_t removed) const {
    Word out;
    for (auto l : letters_) {
      if (l.generator > removed) --l.generator;
      out.letters_.push_back(l);
    }
    return out;
  }

  friend auto operator<=>(const Word&, const Word&) = default;
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

struct Generator {
  std::size_t id = 0;
  std::size_t component = 0;
  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Generators are indexed 0..g-1 (Generator::id equals its index); each
/// carries the link component its arc lies on.
struct GroupPresentation {
  std::vector<Generator> generators;
  std::vector<Word> relators;
  std::size_t component_count = 1;

  std::size_t generator_count() const noexcept { return generators.size(); }
  friend bool operator==(const GroupPresentation&, const GroupPresentation&) = default;
};

/// Arc structure of a diagram: arcs run between consecutive Under endpoints
/// of a component; a component without Under endpoints is a single arc.
struct ArcLayout {
  std::vector<std::size_t> arc_component;
  // per component, per position: arc containing / ending at that position
  std::vector<std::vector<std::size_t>> arc_before;
  // per component, per position: arc starting right after that position
  std::vector<std::vector<std::size_t>> arc_after;
};

inline ArcLayout arc_layout(const GaussDiagram& d) {
  ArcLayout lay;
  const auto& comps = d.components();
  lay.arc_before.resize(comps.size());
  lay.arc_after.resize(comps.size());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& comp = comps[i];
    const std::size_t len = comp.size();
    std::vector<std::size_t> unders;
    for (std::size_t p = 0; p < len; ++p)
      if (comp[p].role == Role::Under) unders.push_back(p);
    lay.arc_before[i].assign(len, 0);
    lay.arc_after[i].assign(len, 0);
    const std::size_t base = lay.arc_component.size();
    if (unders.empty()) {
      lay.arc_component.push_back(i);
      for (std::size_t p = 0; p < len; ++p) {
        lay.arc_before[i][p] = base;
        lay.arc_after[i][p] = base;
      }
      continue;
    }
    for (std::size_t k = 0; k < unders.size(); ++k) lay.arc_component.push_back(i);
    // arc k starts after unders[k]; positions before unders[0] belong to the
    // last arc (cyclic wrap)
    std::size_t current = base + unders.size() - 1;
    std::size_t k = 0;
    for (std::size_t p = 0; p < len; ++p) {
      lay.arc_before[i][p] = current;
      if (k < unders.size() && unders[k] == p) {
        current = base + k;
        ++k;
      }
      lay.arc_after[i][p] = current;
    }
  }
  return lay;
}

/// Relator c^-1 b^(-e) a b^(e) at every crossing, where b is the over-arc,
/// a the incoming and c the outgoing under-arc, and e = sign * m.
inline GroupPresentation generalized_presentation(const GaussDiagram& d, int m) {
  const ArcLayout lay = arc_layout(d);
  GroupPresentation p;
  p.component_count = d.component_count();
  for (std::size_t g = 0; g < lay.arc_component.size(); ++g)
    p.generators.push_back({g, lay.arc_component[g]});
  for (const auto& [c, sites] : d.sites()) {
    const auto& [over, under] = sites;
    const std::size_t b = lay.arc_before[over.component][over.position];
    const std::size_t a = lay.arc_before[under.component][under.position];
    const std::size_t out = lay.arc_after[under.component][under.position];
    const int e = d.sign(c).value() * m;
    Word r = Word::letter(out, -1);
    r.append_power(b, -e);
    r.push({a, 1});
    r.append_power(b, e);
    p.relators.push_back(std::move(r));
  }
  return p;
}

inline GroupPresentation wirtinger_presentation(const GaussDiagram& d) {
  return generalized_presentation(d, 1);
}

struct SimplifyOptions {
  // substitutions that would create a relator longer than this are skipped
  std::size_t max_relator_length = 256;
};

/// Tietze elimination: while some relator contains a generator x exactly
/// once, solve for x, substitute, and drop both x and the relator. Empty
/// relators are discarded. The generator count strictly decreases.
inline GroupPresentation simplify(const GroupPresentation& input,
                                  const SimplifyOptions& opts = {}) {
  GroupPresentation p = input;
  auto tidy = [](std::vector<Word>& rels) {
    std::vector<Word> kept;
    for (auto& r : rels) {
      Word c = r.cyclically_reduced();
      if (!c.empty()) kept.push_back(std::move(c));
    }
    rels = std::move(kept);
  };
  tidy(p.relators);

  for (;;) {
    struct Candidate {
      std::size_t cost, relator, generator;
    };
    std::optional<Candidate> best;
    for (std::size_t ri = 0; ri < p.relators.size(); ++ri) {
      const Word& r = p.relators[ri];
      for (std::size_t g = 0; g < p.generators.size(); ++g) {
        if (r.occurrences(g) != 1) continue;
        const std::size_t image_len = r.size() - 1;
        std::size_t cost = 0;
        std::size_t longest = 0;
        for (std::size_t rj = 0; rj < p.relators.size(); ++rj) {
          if (rj == ri) continue;
          const std::size_t occ = p.relators[rj].occurrences(g);
          cost += occ * image_len;
          longest = std::max(longest, p.relators[rj].size() + occ * image_len);
        }
        if (longest > opts.max_relator_length) continue;
        // ties go to the highest generator index
        if (!best || cost < best->cost ||
            (cost == best->cost && ri == best->relator && g > best->generator)) {
          best = Candidate{cost, ri, g};
        }
      }
    }
    if (!best) break;

    const Word& r = p.relators[best->relator];
    const std::size_t x = best->generator;
    std::vector<Letter> u, v;
    int ex = 1;
    bool seen = false;
    for (const auto& l : r.letters()) {
      if (l.generator == x) {
        ex = l.exponent;
        seen = true;
      } else {
        (seen ? v : u).push_back(l);
      }
    }
    // u x v = 1  =>  x = u^-1 v^-1 ; u x^-1 v = 1  =>  x = v u
    const Word wu(u), wv(v);
    const Word image = ex > 0 ? wu.inverse() * wv.inverse() : wv * wu;

    std::vector<Word> rels;
    for (std::size_t rj = 0; rj < p.relators.size(); ++rj) {
      if (rj == best->relator) continue;
      rels.push_back(p.relators[rj].substitute(x, image).without_generator_index(x));
    }
    tidy(rels);
    p.relators = std::move(rels);
    p.generators.erase(p.generators.begin() + static_cast<std::ptrdiff_t>(x));
    for (std::size_t g = 0; g < p.generators.size(); ++g) p.generators[g].id = g;
  }
  return p;
}

/// Element of the integral group ring of the free group.
using GroupRingElement = std::map<Word, std::int64_t>;

/// Fox derivative d(w)/d(x): sums prefix(x) over +1 occurrences and
/// -prefix(x)x^-1 over -1 occurrences.
inline GroupRingElement fox_derivative(const Word& w, std::size_t x) {
  GroupRingElement out;
  Word prefix;
  for (const auto& l : w.letters()) {
    if (l.generator == x && l.exponent > 0) {
      out[prefix] += 1;
    }
    prefix.push(l);
    if (l.generator == x && l.exponent < 0) {
      out[prefix] -= 1;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

enum class VariableMode { Single, Multi };

/// Abelianizing map: generator on component k goes to t_k (Multi) or to t
/// (Single).
inline Exponents abelian_image(const GroupPresentation& p, std::size_t g,
                               VariableMode mode) {
  if (mode == VariableMode::Single) return Exponents{1};
  Exponents e(p.component_count, 0);
  e.at(p.generators.at(g).component) = 1;
  return e;
}

inline LaurentPolynomial abelianize(const GroupPresentation& p,
                                    const GroupRingElement& x, VariableMode mode) {
  const std::size_t arity = mode == VariableMode::Single ? 1 : p.component_count;
  LaurentPolynomial out(arity);
  for (const auto& [w, c] : x) {
    Exponents e(arity, 0);
    for (const auto& l : w.letters()) {
      const Exponents img = abelian_image(p, l.generator, mode);
      for (std::size_t v = 0; v < arity; ++v) e[v] += l.exponent * img[v];
    }
    out.add_term(std::move(e), c);
  }
  return out;
}

/// Entry (i, j) is the abelianized Fox derivative of relator i by generator j.
inline LaurentMatrix jacobian(const GroupPresentation& p, VariableMode mode) {
  const std::size_t arity = mode == VariableMode::Single ? 1 : p.component_count;
  const std::size_t g = p.generators.size();
  LaurentMatrix m(p.relators.size(), g, arity);
  std::vector<Exponents> images(g);
  for (std::size_t j = 0; j < g; ++j) images[j] = abelian_image(p, j, mode);
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    Exponents prefix(arity, 0);
    for (const auto& l : p.relators[i].letters()) {
      const Exponents& img = images[l.generator];
      if (l.exponent > 0) {
        m(i, l.generator).add_term(prefix, 1);
        for (std::size_t v = 0; v < arity; ++v) prefix[v] += img[v];
      } else {
        for (std::size_t v = 0; v < arity; ++v) prefix[v] -= img[v];
        m(i, l.generator).add_term(prefix, -1);
      }
    }
  }
  return m;
}

/// Relator exponent-sum matrix and its Smith normal form.
struct Abelianization {
  std::vector<BigInt> invariant_factors;
  std::size_t free_rank = 0;
  std::vector<BigInt> torsion;
};

inline Abelianization abelianization(const GroupPresentation& p) {
  const std::size_t g = p.generators.size();
  IntMatrix m(p.relators.size(), std::vector<BigInt>(g, 0));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (const auto& l : p.relators[i].letters()) m[i][l.generator] += l.exponent;
  Abelianization a;
  a.invariant_factors = smith_normal_form(m);
  std::size_t nonzero = 0;
  for (const auto& d : a.invariant_factors) {
    if (d != 0) ++nonzero;
    if (d > 1) a.torsion.push_back(d);
  }
  a.free_rank = g - nonzero;
  return a;
}

// ---------------------------------------------------------------- text form

inline std::string generator_name(std::size_t g) { return "x" + std::to_string(g + 1); }

/// Letter-exponent notation, e.g. "x1 x2^-2 x3"; the empty word is "1".
inline std::string to_string(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  const auto& ls = w.letters();
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    int e = 0;
    while (j < ls.size() && ls[j].generator == ls[i].generator &&
           ls[j].exponent == ls[i].exponent) {
      e += ls[j].exponent;
      ++j;
    }
    if (!out.empty()) out += ' ';
    out += generator_name(ls[i].generator);
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

/// "< x1, ..., xk | r1, ..., rm >".
inline std::string to_string(const GroupPresentation& p) {
  std::string out = "< ";
  for (std::size_t g = 0; g < p.generators.size(); ++g) {
    if (g) out += ", ";
    out += generator_name(g);
  }
  out += " | ";
  for (std::size_t i = 0; i < p.relators.size(); ++i) {
    if (i) out += ", ";
    out += to_string(p.relators[i]);
  }
  out += " >";
  return out;
}

/// Parses the text form. Generators are named by any identifiers and are
/// indexed in listing order; all are placed on component 0.
inline GroupPresentation parse_presentation(std::string_view text) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::SyntaxError, why); };
  const auto open = text.find('<');
  const auto bar = text.find('|');
  const auto close = text.rfind('>');
  if (open == std::string_view::npos || bar == std::string_view::npos ||
      close == std::string_view::npos || !(open < bar && bar < close)) {
    fail("expected '< generators | relators >'");
  }
  auto split = [](std::string_view s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    parts.push_back(cur);
    return parts;
  };
  auto trim = [](std::string s) {
    const auto a = s.find_first_not_of(" \t\n\r");
    if (a == std::string::npos) return std::string();
    const auto b = s.find_last_not_of(" \t\n\r");
    return s.substr(a, b - a + 1);
  };

  GroupPresentation p;
  std::map<std::string, std::size_t> index;
  for (auto& name : split(text.substr(open + 1, bar - open - 1))) {
    name = trim(name);
    if (name.empty()) continue;
    if (index.count(name)) fail("duplicate generator " + name);
    index[name] = p.generators.size();
    p.generators.push_back({p.generators.size(), 0});
  }
  for (auto& rel : split(text.substr(bar + 1, close - bar - 1))) {
    rel = trim(rel);
    if (rel.empty()) continue;
    Word w;
    std::istringstream is(rel);
    std::string tok;
    while (is >> tok) {
      if (tok == "1") continue;
      std::string name = tok;
      int e = 1;
      if (const auto caret = tok.find('^'); caret != std::string::npos) {
        name = tok.substr(0, caret);
        try {
          std::size_t used = 0;
          e = std::stoi(tok.substr(caret + 1), &used);
          if (used != tok.size() - caret - 1) fail("bad exponent in " + tok);
        } catch (const std::logic_error&) {
          fail("bad exponent in " + tok);
        }
      }
      auto it = index.find(name);
      if (it == index.end()) fail("unknown generator " + name);
      w.append_power(it->second, e);
    }
    p.relators.push_back(std::move(w));
  }
  return p;
}

}  // namespace welded
