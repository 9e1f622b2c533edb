#pragma once

// Welded invariants of Gauss diagrams: Alexander polynomials, linking and
// intersection numbers, homomorphism counts, and the bundled report.

#include <welded/error.hpp>
#include <welded/gauss.hpp>
#include <welded/group.hpp>
#include <welded/homs.hpp>
#include <welded/laurent.hpp>
#include <welded/matrix.hpp>
#include <welded/multiplex.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace welded {

struct AlexanderOptions {
  bool simplify = true;
  SimplifyOptions simplify_options{};
  // Use minors of the Jacobian with only its first column deleted instead of
  // the gcd over every deletion.
  bool single_deletion = false;
};

/// Δ_k of a presented group: gcd of the (g-k)-minors of the Jacobian with a
/// column deleted, over every choice of deleted column. Because every
/// (g-k)-minor avoids at least one column when k >= 1, this is the gcd of
/// all (g-k)-minors of the Jacobian, which is how it is computed.
inline UnitNormalForm alexander_of_presentation(const GroupPresentation& p, std::size_t k,
                                                VariableMode mode,
                                                const AlexanderOptions& opts = {}) {
  if (k == 0) throw Error(ErrorCode::SizeOutOfRange, "k must be at least 1");
  const GroupPresentation q = opts.simplify ? simplify(p, opts.simplify_options) : p;
  const std::size_t g = q.generators.size();
  const std::size_t arity = mode == VariableMode::Single ? 1 : q.component_count;
  if (g <= k) return normalize(LaurentPolynomial::one(arity));
  LaurentMatrix j = jacobian(q, mode);
  if (opts.single_deletion) j = j.without_column(0);
  return elementary_ideal_gcd(j, g - k);
}

inline UnitNormalForm alexander(const GaussDiagram& d, std::size_t k, VariableMode mode,
                                const AlexanderOptions& opts = {}) {
  if (d.component_count() == 0) throw Error(ErrorCode::EmptyDiagram, "no components");
  return alexander_of_presentation(wirtinger_presentation(d), k, mode, opts);
}

inline UnitNormalForm alexander_of_multiplex(const GaussDiagram& d, const MultiplexWeights& m,
                                             std::size_t k, VariableMode mode,
                                             const AlexanderOptions& opts = {}) {
  return alexander(multiplex(d, m), k, mode, opts);
}

using IntSquare = std::vector<std::vector<long long>>;

/// over[i][j]: sum of signs of crossings passing over on component i and
/// under on component j (i != j); the diagonal is zero.
inline IntSquare linking_matrix(const GaussDiagram& d) {
  const std::size_t n = d.component_count();
  IntSquare over(n, std::vector<long long>(n, 0));
  for (const auto& [c, s] : d.sites()) {
    const std::size_t i = s.first.component, j = s.second.component;
    if (i != j) over[i][j] += d.sign(c).value();
  }
  return over;
}

/// over[i][j] - over[j][i]. Any non-zero entry shows the diagram is not
/// welded isotopic to a classical one.
inline IntSquare intersection_numbers(const GaussDiagram& d) {
  const IntSquare over = linking_matrix(d);
  const std::size_t n = over.size();
  IntSquare x(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) x[i][j] = over[i][j] - over[j][i];
  return x;
}

struct InvariantReport {
  UnitNormalForm delta1_single;
  UnitNormalForm delta2_single;
  UnitNormalForm delta1_multi;
  IntSquare linking;
  IntSquare intersection;
  std::map<std::string, std::uint64_t> hom_counts;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

inline std::vector<FiniteTarget> default_targets() {
  return {FiniteTarget::symmetric(3), FiniteTarget::symmetric(4)};
}

/// Hom counts use the unsimplified Wirtinger presentation, whose relators
/// each determine one arc from two others and so propagate well.
inline InvariantReport full_report(const GaussDiagram& d,
                                   const std::vector<FiniteTarget>& targets,
                                   const AlexanderOptions& opts = {}) {
  if (d.component_count() == 0) throw Error(ErrorCode::EmptyDiagram, "no components");
  const GroupPresentation wp = wirtinger_presentation(d);
  InvariantReport r;
  r.delta1_single = alexander_of_presentation(wp, 1, VariableMode::Single, opts);
  r.delta2_single = alexander_of_presentation(wp, 2, VariableMode::Single, opts);
  r.delta1_multi = alexander_of_presentation(wp, 1, VariableMode::Multi, opts);
  r.linking = linking_matrix(d);
  r.intersection = intersection_numbers(d);
  for (const auto& t : targets) r.hom_counts[t.name()] = count_homs(wp, t);
  return r;
}

/// Field order: delta1_single, delta2_single, delta1_multi, linking,
/// intersection, hom_counts (keys sorted).
inline nlohmann::ordered_json to_json(const InvariantReport& r) {
  nlohmann::ordered_json j;
  j["delta1_single"] = to_json(r.delta1_single);
  j["delta2_single"] = to_json(r.delta2_single);
  j["delta1_multi"] = to_json(r.delta1_multi);
  j["linking"] = r.linking;
  j["intersection"] = r.intersection;
  nlohmann::ordered_json homs = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.hom_counts) homs[k] = v;
  j["hom_counts"] = homs;
  return j;
}

}  // namespace welded
