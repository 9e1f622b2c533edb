#pragma once

#include <welded/gauss.hpp>
#include <welded/group.hpp>
#include <welded/homs.hpp>
#include <welded/laurent.hpp>
#include <welded/matrix.hpp>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace welded;

inline std::string fixture_path(const std::string& name) {
  return std::string(WELDED_FIXTURE_DIR) + "/" + name + ".gauss";
}

inline GaussDiagram fixture(const std::string& name) { return load_gauss_file(fixture_path(name)); }

inline const std::vector<std::string>& all_fixtures() {
  static const std::vector<std::string> names{
      "unknot", "trefoil", "hopf", "vanishing_link", "virtual_pair_d",
      "virtual_pair_dp", "borromean", "square", "granny"};
  return names;
}

inline LaurentPolynomial t(int e = 1) { return LaurentPolynomial::variable(1, 0, e); }
inline LaurentPolynomial one() { return LaurentPolynomial::one(1); }
inline LaurentPolynomial one_minus_t(int e) { return one() - t(e); }
inline LaurentPolynomial tv(std::size_t arity, std::size_t i, int e = 1) {
  return LaurentPolynomial::variable(arity, i, e);
}

/// Small random Laurent polynomial: up to `terms` terms with exponents in
/// [lo, hi] and coefficients in [-3, 3].
inline LaurentPolynomial random_poly(std::mt19937_64& rng, std::size_t arity, int terms,
                                     int lo = -2, int hi = 2) {
  LaurentPolynomial p(arity);
  const int n = static_cast<int>(rng() % (terms + 1));
  for (int i = 0; i < n; ++i) {
    Exponents e(arity);
    for (auto& x : e) x = lo + static_cast<int>(rng() % (hi - lo + 1));
    p.add_term(e, static_cast<int>(rng() % 7) - 3);
  }
  return p;
}

/// Determinant by Laplace expansion along the first row.
inline LaurentPolynomial cofactor_determinant(const LaurentMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPolynomial::one(m.arity());
  if (n == 1) return m(0, 0);
  LaurentPolynomial total(m.arity());
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    const LaurentPolynomial term = m(0, c) * cofactor_determinant(m.submatrix(rows, cols));
    total = c % 2 == 0 ? total + term : total - term;
  }
  return total;
}

/// Every map from generators to target elements, checked against every
/// relator: no pruning, no ordering, no conjugacy shortcut.
inline std::uint64_t brute_force_homs(const GroupPresentation& p, const FiniteTarget& t) {
  const std::size_t g = p.generators.size();
  std::vector<std::size_t> value(g, 0);
  std::uint64_t count = 0;
  for (;;) {
    bool ok = true;
    for (const auto& r : p.relators) {
      std::size_t acc = t.identity();
      for (const auto& l : r.letters()) {
        const std::size_t v = value[l.generator];
        acc = t.mul(acc, l.exponent > 0 ? v : t.inverse(v));
      }
      if (acc != t.identity()) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < g && ++value[i] == t.order()) value[i++] = 0;
    if (i == g) break;
  }
  return count;
}

}  // namespace testing_support
