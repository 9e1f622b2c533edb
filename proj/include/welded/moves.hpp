#pragma once

// Welded moves on Gauss diagrams (R1, R2, R3 and OC) and a seeded random
// walk that produces welded-isotopic variants of a diagram.
//
// Arrows run from the Over endpoint (tail) to the Under endpoint (head).
// OC transposes two adjacent tails. Transposing adjacent heads is the
// forbidden move and is never generated.

#include <welded/error.hpp>
#include <welded/gauss.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace welded {

enum class MoveType { R1Add, R1Remove, R2Add, R2Remove, R3, OCSwap };

inline std::string_view move_type_name(MoveType t) {
  switch (t) {
    case MoveType::R1Add: return "R1_add";
    case MoveType::R1Remove: return "R1_remove";
    case MoveType::R2Add: return "R2_add";
    case MoveType::R2Remove: return "R2_remove";
    case MoveType::R3: return "R3";
    case MoveType::OCSwap: return "OC_swap";
  }
  return "?";
}

/// One fully parameterized move. Field use by type:
///   R1Add     site = insertion gap (insert before `position`), sign,
///             flag = Under endpoint first
///   R1Remove  crossings[0]
///   R2Add     site = gap for the two tails, site2 = gap for the two heads,
///             sign of the first new arrow (the second gets the opposite),
///             flag = antiparallel (heads in reverse order)
///   R2Remove  crossings[0], crossings[1]
///   R3        crossings = {top->middle, top->bottom, middle->bottom}
///   OCSwap    site = first of the two adjacent tails (the second follows it
///             cyclically)
struct Move {
  MoveType type = MoveType::OCSwap;
  Site site{};
  Site site2{};
  Sign sign{};
  bool flag = false;
  std::array<CrossingId, 3> crossings{};

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveScript {
  std::uint64_t seed = 0;
  std::vector<Move> steps;
  friend bool operator==(const MoveScript&, const MoveScript&) = default;
};

namespace detail {

inline std::size_t next_pos(std::size_t p, std::size_t len) { return (p + 1) % len; }

inline bool adjacent(const Site& a, const Site& b, std::size_t len) {
  return a.component == b.component && len >= 2 &&
         (next_pos(a.position, len) == b.position || next_pos(b.position, len) == a.position);
}

inline bool r1_site(const GaussDiagram& d, CrossingId c) {
  const auto o = d.locate(c, Role::Over);
  const auto u = d.locate(c, Role::Under);
  return adjacent(o, u, d.component(o.component).size());
}

inline bool r2_site(const GaussDiagram& d, CrossingId k, CrossingId l) {
  if (k == l || d.sign(k) == d.sign(l)) return false;
  const auto ok = d.locate(k, Role::Over), ol = d.locate(l, Role::Over);
  const auto uk = d.locate(k, Role::Under), ul = d.locate(l, Role::Under);
  return adjacent(ok, ol, d.component(ok.component).size()) &&
         adjacent(uk, ul, d.component(uk.component).size());
}

/// Braid-like triangle check. With the pairs (Ua, Og) on the middle strand
/// and (Ub, Ug) on the bottom strand each adjacent on a component of length
/// at least 3, the move is sound iff sign(a) * sign(b) is +1 exactly when
/// "Ua precedes Og" differs from "Ug precedes Ub". Every such configuration
/// is a classical R3 up to strand orientation, and the tail order on the top
/// strand is free by OC.
inline bool r3_site(const GaussDiagram& d, CrossingId a, CrossingId b, CrossingId g) {
  if (a == b || b == g || a == g) return false;
  const auto oa = d.locate(a, Role::Over), ob = d.locate(b, Role::Over);
  const auto ua = d.locate(a, Role::Under), og = d.locate(g, Role::Over);
  const auto ub = d.locate(b, Role::Under), ug = d.locate(g, Role::Under);
  const auto len = [&](const Site& s) { return d.component(s.component).size(); };
  if (!adjacent(oa, ob, len(oa))) return false;
  if (len(ua) < 3 || !adjacent(ua, og, len(ua))) return false;
  if (len(ub) < 3 || !adjacent(ub, ug, len(ub))) return false;
  const bool ua_first = next_pos(ua.position, len(ua)) == og.position;
  const bool ug_first = next_pos(ug.position, len(ug)) == ub.position;
  const int product = d.sign(a).value() * d.sign(b).value();
  return product == (ua_first != ug_first ? 1 : -1);
}

inline GaussDiagram without_crossings(const GaussDiagram& d,
                                      const std::vector<CrossingId>& gone) {
  auto dead = [&](CrossingId c) {
    return std::find(gone.begin(), gone.end(), c) != gone.end();
  };
  std::vector<Component> comps;
  for (const auto& comp : d.components()) {
    Component out;
    for (const auto& e : comp)
      if (!dead(e.crossing)) out.push_back(e);
    comps.push_back(std::move(out));
  }
  auto signs = d.signs();
  for (CrossingId c : gone) signs.erase(c);
  return GaussDiagram(std::move(comps), std::move(signs));
}

struct Insertion {
  Site gap;
  std::vector<Endpoint> run;
};

/// Inserts runs before the given positions; runs sharing a gap keep their
/// listed order.
inline GaussDiagram with_insertions(const GaussDiagram& d,
                                    const std::vector<Insertion>& ins,
                                    std::map<CrossingId, Sign> new_signs) {
  std::vector<Component> comps;
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    const auto& comp = d.component(i);
    Component out;
    for (std::size_t p = 0; p <= comp.size(); ++p) {
      for (const auto& x : ins)
        if (x.gap.component == i && x.gap.position == p)
          out.insert(out.end(), x.run.begin(), x.run.end());
      if (p < comp.size()) out.push_back(comp[p]);
    }
    comps.push_back(std::move(out));
  }
  auto signs = d.signs();
  signs.merge(new_signs);
  return GaussDiagram(std::move(comps), std::move(signs));
}

inline void check_gap(const GaussDiagram& d, const Site& s) {
  if (s.component >= d.component_count() || s.position > d.component(s.component).size()) {
    throw Error(ErrorCode::NotApplicable, "insertion gap out of range");
  }
}

}  // namespace detail

inline bool is_applicable(const GaussDiagram& d, const Move& mv) {
  const auto has = [&](CrossingId c) { return d.signs().count(c) > 0; };
  switch (mv.type) {
    case MoveType::R1Add:
    case MoveType::R2Add:
      if (mv.site.component >= d.component_count() ||
          mv.site.position > d.component(mv.site.component).size())
        return false;
      if (mv.type == MoveType::R2Add &&
          (mv.site2.component >= d.component_count() ||
           mv.site2.position > d.component(mv.site2.component).size()))
        return false;
      return true;
    case MoveType::R1Remove:
      return has(mv.crossings[0]) && detail::r1_site(d, mv.crossings[0]);
    case MoveType::R2Remove:
      return has(mv.crossings[0]) && has(mv.crossings[1]) &&
             detail::r2_site(d, mv.crossings[0], mv.crossings[1]);
    case MoveType::R3:
      return has(mv.crossings[0]) && has(mv.crossings[1]) && has(mv.crossings[2]) &&
             detail::r3_site(d, mv.crossings[0], mv.crossings[1], mv.crossings[2]);
    case MoveType::OCSwap: {
      if (mv.site.component >= d.component_count()) return false;
      const auto& comp = d.component(mv.site.component);
      if (comp.size() < 2 || mv.site.position >= comp.size()) return false;
      return comp[mv.site.position].role == Role::Over &&
             comp[detail::next_pos(mv.site.position, comp.size())].role == Role::Over;
    }
  }
  return false;
}

inline GaussDiagram apply_move(const GaussDiagram& d, const Move& mv) {
  if (!is_applicable(d, mv)) {
    throw Error(ErrorCode::NotApplicable, std::string(move_type_name(mv.type)));
  }
  switch (mv.type) {
    case MoveType::R1Add: {
      const CrossingId k = d.next_free_id();
      std::vector<Endpoint> run{{k, Role::Over}, {k, Role::Under}};
      if (mv.flag) std::swap(run[0], run[1]);
      return detail::with_insertions(d, {{mv.site, run}}, {{k, mv.sign}});
    }
    case MoveType::R1Remove:
      return detail::without_crossings(d, {mv.crossings[0]});
    case MoveType::R2Add: {
      const CrossingId k = d.next_free_id(), l = k + 1;
      std::vector<Endpoint> tails{{k, Role::Over}, {l, Role::Over}};
      std::vector<Endpoint> heads{{k, Role::Under}, {l, Role::Under}};
      if (mv.flag) std::swap(heads[0], heads[1]);
      return detail::with_insertions(d, {{mv.site, tails}, {mv.site2, heads}},
                                     {{k, mv.sign}, {l, -mv.sign}});
    }
    case MoveType::R2Remove:
      return detail::without_crossings(d, {mv.crossings[0], mv.crossings[1]});
    case MoveType::R3: {
      auto comps = d.components();
      const auto [a, b, g] = mv.crossings;
      auto swap_pair = [&](Site x, Site y) {
        std::swap(comps[x.component][x.position], comps[y.component][y.position]);
      };
      swap_pair(d.locate(a, Role::Over), d.locate(b, Role::Over));
      swap_pair(d.locate(a, Role::Under), d.locate(g, Role::Over));
      swap_pair(d.locate(b, Role::Under), d.locate(g, Role::Under));
      return GaussDiagram(std::move(comps), d.signs());
    }
    case MoveType::OCSwap: {
      auto comps = d.components();
      auto& comp = comps[mv.site.component];
      std::swap(comp[mv.site.position], comp[detail::next_pos(mv.site.position, comp.size())]);
      return GaussDiagram(std::move(comps), d.signs());
    }
  }
  throw Error(ErrorCode::NotApplicable, "unknown move");
}

/// Every OC, R1/R2 removal and R3 site of d, plus a bounded sample of
/// addition sites: one R1 insertion per component and one R2 insertion per
/// ordered pair of components, with gap and variant derived from `salt`.
inline std::vector<Move> enumerate_moves(const GaussDiagram& d, std::uint64_t salt = 0) {
  std::vector<Move> out;
  const std::size_t n = d.component_count();

  for (std::size_t i = 0; i < n; ++i) {
    const auto& comp = d.component(i);
    if (comp.size() < 3) continue;
    for (std::size_t p = 0; p < comp.size(); ++p) {
      if (comp[p].role == Role::Over && comp[detail::next_pos(p, comp.size())].role == Role::Over) {
        Move mv;
        mv.type = MoveType::OCSwap;
        mv.site = {i, p};
        out.push_back(mv);
      }
    }
  }

  std::vector<CrossingId> ids;
  for (const auto& [c, s] : d.signs()) ids.push_back(c);
  for (CrossingId c : ids) {
    if (detail::r1_site(d, c)) {
      Move mv;
      mv.type = MoveType::R1Remove;
      mv.crossings[0] = c;
      out.push_back(mv);
    }
  }
  for (std::size_t x = 0; x < ids.size(); ++x) {
    for (std::size_t y = x + 1; y < ids.size(); ++y) {
      if (detail::r2_site(d, ids[x], ids[y])) {
        Move mv;
        mv.type = MoveType::R2Remove;
        mv.crossings = {ids[x], ids[y], 0};
        out.push_back(mv);
      }
    }
  }

  // R3: for each middle->bottom arrow g, candidates a (head next to g's tail)
  // and b (head next to g's head)
  const auto sites = d.sites();
  auto neighbours = [&](const Site& s) {
    std::vector<Endpoint> nb;
    const auto& comp = d.component(s.component);
    if (comp.size() < 3) return nb;
    nb.push_back(comp[detail::next_pos(s.position, comp.size())]);
    nb.push_back(comp[(s.position + comp.size() - 1) % comp.size()]);
    return nb;
  };
  for (CrossingId g : ids) {
    const auto& [og, ug] = sites.at(g);
    for (const auto& ea : neighbours(og)) {
      if (ea.role != Role::Under) continue;
      for (const auto& eb : neighbours(ug)) {
        if (eb.role != Role::Under) continue;
        if (detail::r3_site(d, ea.crossing, eb.crossing, g)) {
          Move mv;
          mv.type = MoveType::R3;
          mv.crossings = {ea.crossing, eb.crossing, g};
          out.push_back(mv);
        }
      }
    }
  }

  // sampled additions
  std::mt19937_64 pick(salt);
  auto gap = [&](std::size_t comp) {
    return Site{comp, static_cast<std::size_t>(pick() % (d.component(comp).size() + 1))};
  };
  for (std::size_t i = 0; i < n; ++i) {
    Move mv;
    mv.type = MoveType::R1Add;
    mv.site = gap(i);
    const auto v = pick();
    mv.sign = (v & 1U) ? Sign::negative() : Sign::positive();
    mv.flag = (v & 2U) != 0;
    out.push_back(mv);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Move mv;
      mv.type = MoveType::R2Add;
      mv.site = gap(i);
      mv.site2 = gap(j);
      const auto v = pick();
      mv.sign = (v & 1U) ? Sign::negative() : Sign::positive();
      mv.flag = (v & 2U) != 0;
      out.push_back(mv);
    }
  }
  return out;
}

inline bool is_removal(const Move& mv) {
  return mv.type == MoveType::R1Remove || mv.type == MoveType::R2Remove;
}

/// Applies `steps` moves, each drawn uniformly from enumerate_moves with
/// removals weighted twice. Deterministic in (d, steps, seed).
inline std::pair<GaussDiagram, MoveScript> random_walk(const GaussDiagram& d,
                                                       std::size_t steps,
                                                       std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MoveScript script{seed, {}};
  GaussDiagram cur = d;
  for (std::size_t s = 0; s < steps; ++s) {
    const auto moves = enumerate_moves(cur, rng());
    std::uint64_t total = 0;
    for (const auto& mv : moves) total += is_removal(mv) ? 2 : 1;
    std::uint64_t r = rng() % total;
    const Move* chosen = &moves.back();
    for (const auto& mv : moves) {
      const std::uint64_t w = is_removal(mv) ? 2 : 1;
      if (r < w) {
        chosen = &mv;
        break;
      }
      r -= w;
    }
    cur = apply_move(cur, *chosen);
    script.steps.push_back(*chosen);
  }
  return {std::move(cur), std::move(script)};
}

inline GaussDiagram replay(const GaussDiagram& start, const MoveScript& script) {
  GaussDiagram cur = start;
  for (const auto& mv : script.steps) cur = apply_move(cur, mv);
  return cur;
}

// ---------------------------------------------------------------- text form
//
//   seed <n>
//   R1_add <component> <position> <+|-> <OU|UO>
//   R1_remove <crossing>
//   R2_add <component> <position> <component2> <position2> <+|-> <parallel|antiparallel>
//   R2_remove <crossing> <crossing>
//   R3 <top-middle> <top-bottom> <middle-bottom>
//   OC_swap <component> <position>

inline std::string to_string(const Move& mv) {
  std::ostringstream os;
  os << move_type_name(mv.type);
  switch (mv.type) {
    case MoveType::R1Add:
      os << ' ' << mv.site.component << ' ' << mv.site.position << ' ' << mv.sign.symbol()
         << ' ' << (mv.flag ? "UO" : "OU");
      break;
    case MoveType::R1Remove:
      os << ' ' << mv.crossings[0];
      break;
    case MoveType::R2Add:
      os << ' ' << mv.site.component << ' ' << mv.site.position << ' ' << mv.site2.component
         << ' ' << mv.site2.position << ' ' << mv.sign.symbol() << ' '
         << (mv.flag ? "antiparallel" : "parallel");
      break;
    case MoveType::R2Remove:
      os << ' ' << mv.crossings[0] << ' ' << mv.crossings[1];
      break;
    case MoveType::R3:
      os << ' ' << mv.crossings[0] << ' ' << mv.crossings[1] << ' ' << mv.crossings[2];
      break;
    case MoveType::OCSwap:
      os << ' ' << mv.site.component << ' ' << mv.site.position;
      break;
  }
  return os.str();
}

inline std::string to_string(const MoveScript& script) {
  std::string out = "seed " + std::to_string(script.seed) + "\n";
  for (const auto& mv : script.steps) out += to_string(mv) + "\n";
  return out;
}

inline MoveScript parse_move_script(const std::string& text) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::SyntaxError, why); };
  std::istringstream in(text);
  std::string line;
  MoveScript script;
  bool have_seed = false;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;
    auto sign_of = [&](const std::string& s) {
      if (s == "+") return Sign::positive();
      if (s == "-") return Sign::negative();
      fail("bad sign '" + s + "'");
      return Sign::positive();
    };
    Move mv;
    std::string a, b;
    if (kind == "seed") {
      if (!(ls >> script.seed)) fail("bad seed line");
      have_seed = true;
      continue;
    } else if (kind == "R1_add") {
      mv.type = MoveType::R1Add;
      if (!(ls >> mv.site.component >> mv.site.position >> a >> b)) fail(line);
      mv.sign = sign_of(a);
      if (b != "OU" && b != "UO") fail(line);
      mv.flag = b == "UO";
    } else if (kind == "R1_remove") {
      mv.type = MoveType::R1Remove;
      if (!(ls >> mv.crossings[0])) fail(line);
    } else if (kind == "R2_add") {
      mv.type = MoveType::R2Add;
      if (!(ls >> mv.site.component >> mv.site.position >> mv.site2.component >>
            mv.site2.position >> a >> b))
        fail(line);
      mv.sign = sign_of(a);
      if (b != "parallel" && b != "antiparallel") fail(line);
      mv.flag = b == "antiparallel";
    } else if (kind == "R2_remove") {
      mv.type = MoveType::R2Remove;
      if (!(ls >> mv.crossings[0] >> mv.crossings[1])) fail(line);
    } else if (kind == "R3") {
      mv.type = MoveType::R3;
      if (!(ls >> mv.crossings[0] >> mv.crossings[1] >> mv.crossings[2])) fail(line);
    } else if (kind == "OC_swap") {
      mv.type = MoveType::OCSwap;
      if (!(ls >> mv.site.component >> mv.site.position)) fail(line);
    } else {
      fail("unknown move '" + kind + "'");
    }
    script.steps.push_back(mv);
  }
  if (!have_seed) fail("missing seed line");
  return script;
}

}  // namespace welded
