#pragma once

// Dense matrices over the Laurent ring: fraction-free determinants, gcd of
// minors, and integer Smith normal form.

#include <welded/error.hpp>
#include <welded/laurent.hpp>

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

namespace welded {

class LaurentMatrix {
 public:
  LaurentMatrix(std::size_t rows, std::size_t cols, std::size_t arity)
      : rows_(rows), cols_(cols), arity_(arity),
        data_(rows * cols, LaurentPolynomial(arity)) {}

  static LaurentMatrix identity(std::size_t n, std::size_t arity) {
    LaurentMatrix m(n, n, arity);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = LaurentPolynomial::one(arity);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t arity() const noexcept { return arity_; }

  LaurentPolynomial& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const LaurentPolynomial& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const auto& p) { return p.is_zero(); });
  }

  LaurentMatrix submatrix(const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols) const {
    LaurentMatrix m(rows.size(), cols.size(), arity_);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j)
        m(i, j) = (*this)(rows[i], cols[j]);
    return m;
  }

  LaurentMatrix without_column(std::size_t col) const {
    std::vector<std::size_t> rs(rows_), cs;
    for (std::size_t i = 0; i < rows_; ++i) rs[i] = i;
    for (std::size_t j = 0; j < cols_; ++j)
      if (j != col) cs.push_back(j);
    return submatrix(rs, cs);
  }

  friend bool operator==(const LaurentMatrix& a, const LaurentMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.arity_ == b.arity_ &&
           a.data_ == b.data_;
  }

 private:
  std::size_t rows_, cols_, arity_;
  std::vector<LaurentPolynomial> data_;
};

/// Bareiss elimination. Each row is first multiplied by a monomial so all
/// entries become honest polynomials; the accumulated monomial is divided
/// back out at the end.
inline LaurentPolynomial determinant(const LaurentMatrix& input) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::NotSquare, std::to_string(input.rows()) + "x" +
                                          std::to_string(input.cols()));
  }
  const std::size_t n = input.rows();
  const std::size_t arity = input.arity();
  if (n == 0) return LaurentPolynomial::one(arity);

  LaurentMatrix m = input;
  Exponents total(arity, 0);
  for (std::size_t r = 0; r < n; ++r) {
    Exponents shift(arity, 0);
    bool any = false;
    for (std::size_t c = 0; c < n; ++c) {
      const auto& p = m(r, c);
      if (p.is_zero()) continue;
      for (std::size_t v = 0; v < arity; ++v) {
        shift[v] = any ? std::max(shift[v], -p.min_degree(v)) : -p.min_degree(v);
      }
      any = true;
    }
    if (!any) return LaurentPolynomial(arity);
    for (std::size_t c = 0; c < n; ++c) m(r, c) = m(r, c).shifted(shift);
    for (std::size_t v = 0; v < arity; ++v) total[v] -= shift[v];
  }

  bool negate = false;
  LaurentPolynomial prev = LaurentPolynomial::one(arity);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && m(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return LaurentPolynomial(arity);
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPolynomial num = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = detail::exact_quotient(num, prev);
      }
      m(i, k) = LaurentPolynomial(arity);
    }
    prev = m(k, k);
  }
  LaurentPolynomial det = m(n - 1, n - 1).shifted(total);
  return negate ? -det : det;
}

namespace detail {

/// Advances `idx` to the next size-k subset of {0..n-1} in lexicographic
/// order; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline std::vector<std::size_t> first_combination(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace detail

/// gcd of all size x size minors, enumerating row subsets then column
/// subsets lexicographically and stopping early at a unit gcd.
inline UnitNormalForm minors_gcd(const LaurentMatrix& m, std::size_t size) {
  if (size == 0) return normalize(LaurentPolynomial::one(m.arity()));
  if (size > std::min(m.rows(), m.cols())) {
    throw Error(ErrorCode::SizeOutOfRange,
                "minor size " + std::to_string(size) + " exceeds matrix");
  }
  UnitNormalForm g = normalize(LaurentPolynomial(m.arity()));
  auto rows = detail::first_combination(size);
  do {
    auto cols = detail::first_combination(size);
    do {
      const LaurentPolynomial minor = determinant(m.submatrix(rows, cols));
      if (minor.is_zero()) continue;
      g = gcd(g.representative(), minor);
      if (g.is_one()) return g;
    } while (detail::next_combination(cols, m.cols()));
  } while (detail::next_combination(rows, m.rows()));
  return g;
}

/// Removes unit pivots: if entry (i, j) is ±t^k, clearing column j by row
/// operations turns the matrix into (unit) ⊕ M', and the ideal of s-minors of
/// the original equals the ideal of (s-1)-minors of M'. Zero rows and columns
/// are dropped as well since they contribute only vanishing minors. Returns
/// the reduced matrix and the correspondingly reduced minor size.
inline std::pair<LaurentMatrix, std::size_t> reduce_unit_pivots(
    LaurentMatrix m, std::size_t size) {
  for (;;) {
    // drop zero rows / columns
    std::vector<std::size_t> keep_r, keep_c;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      bool nz = false;
      for (std::size_t c = 0; c < m.cols() && !nz; ++c) nz = !m(r, c).is_zero();
      if (nz) keep_r.push_back(r);
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      bool nz = false;
      for (std::size_t r = 0; r < m.rows() && !nz; ++r) nz = !m(r, c).is_zero();
      if (nz) keep_c.push_back(c);
    }
    if (keep_r.size() != m.rows() || keep_c.size() != m.cols()) {
      m = m.submatrix(keep_r, keep_c);
    }
    if (size == 0) break;

    // Markowitz-style choice among unit entries to limit fill-in.
    std::size_t best_r = 0, best_c = 0, best_cost = 0;
    bool found = false;
    std::vector<std::size_t> row_nz(m.rows(), 0), col_nz(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(r, c).is_zero()) ++row_nz[r], ++col_nz[c];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(r, c).is_unit()) continue;
        const std::size_t cost = (row_nz[r] - 1) * (col_nz[c] - 1);
        if (!found || cost < best_cost) {
          found = true;
          best_r = r;
          best_c = c;
          best_cost = cost;
        }
      }
    }
    if (!found) break;

    const LaurentPolynomial inv = m(best_r, best_c).unit_inverse();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == best_r || m(r, best_c).is_zero()) continue;
      const LaurentPolynomial f = m(r, best_c) * inv;
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (m(best_r, c).is_zero()) continue;
        m(r, c) -= f * m(best_r, c);
      }
    }
    std::vector<std::size_t> rs, cs;
    for (std::size_t r = 0; r < m.rows(); ++r)
      if (r != best_r) rs.push_back(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (c != best_c) cs.push_back(c);
    m = m.submatrix(rs, cs);
    --size;
  }
  return {std::move(m), size};
}

/// gcd of the size x size minors, computed after unit-pivot reduction. Sizes
/// larger than the reduced matrix give 0 (every minor vanishes).
inline UnitNormalForm elementary_ideal_gcd(const LaurentMatrix& m,
                                           std::size_t size) {
  auto [reduced, s] = reduce_unit_pivots(m, size);
  if (s == 0) return normalize(LaurentPolynomial::one(m.arity()));
  if (s > std::min(reduced.rows(), reduced.cols())) {
    return normalize(LaurentPolynomial(m.arity()));
  }
  return minors_gcd(reduced, s);
}

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Invariant factors d1 | d2 | ... (min(rows, cols) of them, non-negative).
inline std::vector<BigInt> smith_normal_form(IntMatrix a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  const std::size_t n = std::min(rows, cols);
  std::vector<BigInt> diag;
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // smallest non-zero entry of the trailing block becomes the pivot
      bool found = false;
      std::size_t pr = t, pc = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a[i][j] != 0 && (!found || abs(a[i][j]) < abs(a[pr][pc]))) {
            found = true;
            pr = i;
            pc = j;
          }
      if (!found) {
        diag.resize(n, 0);
        return diag;
      }
      std::swap(a[t], a[pr]);
      for (auto& row : a) std::swap(row[t], row[pc]);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a[i][t] == 0) continue;
        const BigInt q = a[i][t] / a[t][t];
        for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
        if (a[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] == 0) continue;
        const BigInt q = a[t][j] / a[t][t];
        for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
        if (a[t][j] != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      bool divisible = true;
      for (std::size_t i = t + 1; i < rows && divisible; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a[i][j] % a[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) a[t][k] += a[i][k];
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    diag.push_back(abs(a[t][t]));
  }
  return diag;
}

}  // namespace welded
