#pragma once

// Multiplexing: every crossing whose overpass lies on component
// j is replaced by a band of |m_j| crossings, producing D(m_1, ..., m_n).

#include <welded/error.hpp>
#include <welded/gauss.hpp>
#include <welded/group.hpp>

#include <cstdlib>
#include <map>
#include <string>
#include <vector>

namespace welded {

/// Endpoint order of one band of `width` arrows. Both the Over run and the
/// Under run list the band arrows in increasing index; the Over run sits on
/// a single arc, so the Under run alone fixes the relation and the k-th
/// Under passage conjugates the incoming arc once more by the over-arc.
struct BandLayout {
  std::vector<std::size_t> over_order;
  std::vector<std::size_t> under_order;
};

inline BandLayout band_layout(std::size_t width) {
  BandLayout b;
  for (std::size_t k = 0; k < width; ++k) {
    b.over_order.push_back(k);
    b.under_order.push_back(k);
  }
  return b;
}

/// D(m_1, ..., m_n). Band arrows carry sign sign(c) * sgn(m_j); m_j = 0
/// deletes the crossing. New crossing ids are assigned consecutively from 1,
/// walking the original crossings in increasing id order, so all-ones
/// weights reproduce a diagram numbered 1..N unchanged.
inline GaussDiagram multiplex(const GaussDiagram& d, const MultiplexWeights& m) {
  if (m.size() != d.component_count()) {
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(m.size()) + " weights for " +
                    std::to_string(d.component_count()) + " components");
  }
  const auto sites = d.sites();
  std::map<CrossingId, std::vector<CrossingId>> band;
  std::map<CrossingId, Sign> signs;
  CrossingId next = 1;
  for (const auto& [c, s] : sites) {
    const int w = m[s.first.component];
    const std::size_t width = static_cast<std::size_t>(std::abs(w));
    const Sign sign = w < 0 ? -d.sign(c) : d.sign(c);
    auto& ids = band[c];
    for (std::size_t k = 0; k < width; ++k) {
      ids.push_back(next);
      signs.emplace(next, sign);
      ++next;
    }
  }

  std::vector<Component> comps;
  for (const auto& comp : d.components()) {
    Component out;
    for (const auto& e : comp) {
      const auto& ids = band[e.crossing];
      const BandLayout layout = band_layout(ids.size());
      const auto& order = e.role == Role::Over ? layout.over_order : layout.under_order;
      for (std::size_t k : order) out.push_back({ids[k], e.role});
    }
    comps.push_back(std::move(out));
  }
  return GaussDiagram(std::move(comps), std::move(signs));
}

/// Outcome of eliminating the intermediate arcs of one band: the outgoing
/// under-arc c expressed in the incoming arc a and the over-arc b.
struct BandRelation {
  static constexpr std::size_t a = 0, b = 1;
  Word outgoing;  // c = outgoing
  std::string to_string() const {
    std::string out = "c =";
    const auto& ls = outgoing.letters();
    for (std::size_t i = 0; i < ls.size();) {
      std::size_t j = i;
      while (j < ls.size() && ls[j] == ls[i]) ++j;
      const int e = static_cast<int>(j - i) * ls[i].exponent;
      out += ls[i].generator == a ? " a" : " b";
      if (e != 1) out += "^" + std::to_string(e);
      i = j;
    }
    return out;
  }
};

/// Executable check of the band layout: multiplexes a local model (an
/// over-strand crossing an under-strand once, with a spectator crossing
/// that keeps the under-strand's arcs distinct), reads the band's Wirtinger
/// relators off the result, eliminates the |m| - 1 intermediate arcs by
/// substitution, and checks c = b^(-sign*m) a b^(sign*m) in the free group
/// on {a, b}.
inline BandRelation verify_multiplex_relation(Sign sign, int m) {
  // component 0: over-strand; 1: under-strand; 2: spectator over-strand
  const GaussDiagram local({{{1, Role::Over}},
                            {{1, Role::Under}, {2, Role::Under}},
                            {{2, Role::Over}}},
                           {{1, sign}, {2, Sign::positive()}});
  const GaussDiagram band = multiplex(local, MultiplexWeights{m, 1, 1});
  const ArcLayout lay = arc_layout(band);
  const GroupPresentation wp = wirtinger_presentation(band);
  const auto sites = band.sites();

  const std::size_t arc_b = lay.arc_before[0].empty() ? 0 : lay.arc_before[0][0];
  const auto& strand = band.component(1);
  const std::size_t width = strand.size() - 1;
  const std::size_t arc_a = lay.arc_before[1][0];

  // value of each arc as a word in a (letter 0) and b (letter 1)
  std::map<std::size_t, Word> value{{arc_a, Word::letter(BandRelation::a)}};
  if (width > 0) value[arc_b] = Word::letter(BandRelation::b);
  std::size_t current = arc_a;
  for (std::size_t pos = 0; pos < width; ++pos) {
    const CrossingId c = strand[pos].crossing;
    const auto idx = static_cast<std::size_t>(
        std::distance(sites.begin(), sites.find(c)));
    const Word& r = wp.relators.at(idx);  // out^-1 b^-e in b^e
    const std::size_t out = lay.arc_after[1][pos];
    Word solved;  // out = (r without its first letter)
    if (r.letters().front().generator != out || r.letters().front().exponent != -1) {
      throw Error(ErrorCode::ReductionMismatch, "unexpected relator shape");
    }
    for (std::size_t i = 1; i < r.size(); ++i) {
      const Letter& l = r.letters()[i];
      const auto it = value.find(l.generator);
      if (it == value.end()) {
        throw Error(ErrorCode::ReductionMismatch, "band relator uses a foreign arc");
      }
      solved *= l.exponent > 0 ? it->second : it->second.inverse();
    }
    value[out] = std::move(solved);
    current = out;
  }

  BandRelation rel{value.at(current)};
  Word expected = Word::power(BandRelation::b, -sign.value() * m);
  expected *= Word::letter(BandRelation::a);
  expected *= Word::power(BandRelation::b, sign.value() * m);
  if (!(rel.outgoing == expected)) {
    throw Error(ErrorCode::ReductionMismatch,
                "sign " + std::to_string(sign.value()) + ", m = " + std::to_string(m) +
                    ": got " + rel.to_string());
  }
  return rel;
}

}  // namespace welded
