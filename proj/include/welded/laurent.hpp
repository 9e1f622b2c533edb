#pragma once

// Multivariate Laurent polynomials with arbitrary-precision integer
// coefficients, exact division, gcd and unit normalization.

#include <welded/error.hpp>

#include <boost/multiprecision/cpp_int.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace welded {

using BigInt = boost::multiprecision::cpp_int;
using Exponents = std::vector<int>;

/// Graded lexicographic order: total degree first, then the exponent of the
/// highest-index variable, then the next one down (t1 < t2 < ...).
inline bool grlex_less(const Exponents& a, const Exponents& b) {
  const long da = std::accumulate(a.begin(), a.end(), 0L);
  const long db = std::accumulate(b.begin(), b.end(), 0L);
  if (da != db) return da < db;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

class LaurentPolynomial {
 public:
  // Keys are compared lexicographically as vectors; the lex-leading term is
  // terms_.rbegin().
  using TermMap = std::map<Exponents, BigInt>;

  LaurentPolynomial() : arity_(1) {}
  explicit LaurentPolynomial(std::size_t arity) : arity_(arity) {}

  static LaurentPolynomial constant(std::size_t arity, const BigInt& c) {
    LaurentPolynomial p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
  }

  static LaurentPolynomial one(std::size_t arity) { return constant(arity, 1); }

  static LaurentPolynomial monomial(Exponents exps, const BigInt& c = 1) {
    LaurentPolynomial p(exps.size());
    p.add_term(std::move(exps), c);
    return p;
  }

  /// t_index^power in a ring of the given arity.
  static LaurentPolynomial variable(std::size_t arity, std::size_t index,
                                    int power = 1) {
    Exponents e(arity, 0);
    e.at(index) = power;
    return monomial(std::move(e));
  }

  std::size_t arity() const noexcept { return arity_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && is_origin(terms_.begin()->first));
  }

  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// Units of Z[t^±1] are exactly ±(monomial).
  bool is_unit() const {
    return terms_.size() == 1 && abs(terms_.begin()->second) == 1;
  }

  BigInt constant_term() const {
    auto it = terms_.find(Exponents(arity_, 0));
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  BigInt coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? BigInt(0) : it->second;
  }

  void add_term(Exponents e, const BigInt& c) {
    if (e.size() != arity_) {
      throw Error(ErrorCode::ArityMismatch, "term arity differs from polynomial");
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  int min_degree(std::size_t var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[var] < m) m = e[var];
      first = false;
    }
    return m;
  }

  int max_degree(std::size_t var) const {
    int m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
      if (first || e[var] > m) m = e[var];
      first = false;
    }
    return m;
  }

  /// Multiplication by the monomial t^shift.
  LaurentPolynomial shifted(const Exponents& shift) const {
    check_arity(shift.size());
    LaurentPolynomial r(arity_);
    for (const auto& [e, c] : terms_) {
      Exponents f = e;
      for (std::size_t i = 0; i < arity_; ++i) f[i] += shift[i];
      r.terms_.emplace_hint(r.terms_.end(), std::move(f), c);
    }
    return r;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  LaurentPolynomial& operator+=(const LaurentPolynomial& o) {
    check_arity(o.arity_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  LaurentPolynomial& operator-=(const LaurentPolynomial& o) {
    check_arity(o.arity_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }

  LaurentPolynomial& operator*=(const LaurentPolynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend LaurentPolynomial operator+(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a += b;
    return a;
  }

  friend LaurentPolynomial operator-(LaurentPolynomial a,
                                     const LaurentPolynomial& b) {
    a -= b;
    return a;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b) {
    a.check_arity(b.arity_);
    LaurentPolynomial r(a.arity_);
    Exponents e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }

  friend LaurentPolynomial operator*(const BigInt& k, LaurentPolynomial p) {
    if (k == 0) return LaurentPolynomial(p.arity_);
    for (auto& [e, c] : p.terms_) c *= k;
    return p;
  }

  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  LaurentPolynomial pow(unsigned n) const {
    LaurentPolynomial result = one(arity_);
    LaurentPolynomial base = *this;
    while (n) {
      if (n & 1U) result *= base;
      n >>= 1U;
      if (n) base *= base;
    }
    return result;
  }

  /// Inverse of a unit ±t^e.
  LaurentPolynomial unit_inverse() const {
    if (!is_unit()) {
      throw Error(ErrorCode::NotApplicable, "polynomial is not a unit");
    }
    const auto& [e, c] = *terms_.begin();
    Exponents neg(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) neg[i] = -e[i];
    return monomial(std::move(neg), c);
  }

  /// gcd of the integer coefficients (0 for the zero polynomial).
  BigInt integer_content() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) {
      g = boost::multiprecision::gcd(g, c);
      if (g == 1) break;
    }
    return g;
  }

  std::string to_string() const;

 private:
  static bool is_origin(const Exponents& e) {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  void check_arity(std::size_t other) const {
    if (other != arity_) {
      throw Error(ErrorCode::ArityMismatch,
                  "arity " + std::to_string(arity_) + " vs " +
                      std::to_string(other));
    }
  }

  std::size_t arity_;
  TermMap terms_;
};

/// Terms in ascending graded-lexicographic order.
inline std::vector<std::pair<Exponents, BigInt>> grlex_terms(
    const LaurentPolynomial& p) {
  std::vector<std::pair<Exponents, BigInt>> out(p.terms().begin(),
                                                p.terms().end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return grlex_less(a.first, b.first);
  });
  return out;
}

inline std::string LaurentPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : grlex_terms(*this)) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      std::string v = arity_ == 1 ? "t" : "t" + std::to_string(i + 1);
      if (e[i] != 1) v += "^" + std::to_string(e[i]);
      factors.push_back(std::move(v));
    }
    if (factors.empty()) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) os << "*";
      os << factors[i];
    }
  }
  return os.str();
}

/// Exact quotient num/den in the Laurent ring, or nullopt when den does not
/// divide num. Every quotient exponent is confined to the box
/// [min(num) - min(den), max(num) - max(den)] per variable, which bounds the
/// long division.
inline std::optional<LaurentPolynomial> divide_exact(
    const LaurentPolynomial& num, const LaurentPolynomial& den) {
  if (num.arity() != den.arity()) {
    throw Error(ErrorCode::ArityMismatch, "divide_exact");
  }
  if (den.is_zero()) {
    throw Error(ErrorCode::NotApplicable, "division by zero polynomial");
  }
  const std::size_t n = num.arity();
  LaurentPolynomial quotient(n);
  if (num.is_zero()) return quotient;

  Exponents lo(n), hi(n);
  for (std::size_t v = 0; v < n; ++v) {
    lo[v] = num.min_degree(v) - den.min_degree(v);
    hi[v] = num.max_degree(v) - den.max_degree(v);
    if (lo[v] > hi[v]) return std::nullopt;
  }

  LaurentPolynomial rem = num;
  const auto& [dexp, dcoef] = *den.terms().rbegin();
  Exponents e(n), f(n);
  while (!rem.is_zero()) {
    const auto& [rexp, rcoef] = *rem.terms().rbegin();
    for (std::size_t v = 0; v < n; ++v) {
      e[v] = rexp[v] - dexp[v];
      if (e[v] < lo[v] || e[v] > hi[v]) return std::nullopt;
    }
    BigInt q, r;
    boost::multiprecision::divide_qr(rcoef, dcoef, q, r);
    if (r != 0) return std::nullopt;
    quotient.add_term(e, q);
    for (const auto& [de, dc] : den.terms()) {
      for (std::size_t v = 0; v < n; ++v) f[v] = de[v] + e[v];
      rem.add_term(f, -q * dc);
    }
  }
  return quotient;
}

/// Canonical representative of p modulo multiplication by ±(monomial):
/// every variable's minimal exponent is 0 and the grlex-least term has a
/// positive coefficient.
class UnitNormalForm {
 public:
  UnitNormalForm() = default;
  explicit UnitNormalForm(const LaurentPolynomial& p) : rep_(canonical(p)) {}

  const LaurentPolynomial& representative() const noexcept { return rep_; }
  bool is_zero() const noexcept { return rep_.is_zero(); }
  bool is_one() const { return rep_ == LaurentPolynomial::one(rep_.arity()); }
  std::string to_string() const { return rep_.to_string(); }

  friend bool operator==(const UnitNormalForm& a, const UnitNormalForm& b) {
    return a.rep_ == b.rep_;
  }

 private:
  static LaurentPolynomial canonical(const LaurentPolynomial& p) {
    if (p.is_zero()) return p;
    Exponents shift(p.arity());
    for (std::size_t v = 0; v < p.arity(); ++v) shift[v] = -p.min_degree(v);
    LaurentPolynomial q = p.shifted(shift);
    const auto least = std::min_element(
        q.terms().begin(), q.terms().end(),
        [](const auto& a, const auto& b) { return grlex_less(a.first, b.first); });
    if (least->second < 0) q = -q;
    return q;
  }

  LaurentPolynomial rep_;
};

inline UnitNormalForm normalize(const LaurentPolynomial& p) {
  return UnitNormalForm(p);
}

namespace detail {

inline int degree_in(const LaurentPolynomial& p, std::size_t var) {
  return p.is_zero() ? -1 : p.max_degree(var);
}

/// Coefficient of var^d, as a polynomial with var's exponent set to zero.
inline LaurentPolynomial coefficient_in(const LaurentPolynomial& p,
                                        std::size_t var, int d) {
  LaurentPolynomial r(p.arity());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] != d) continue;
    Exponents f = e;
    f[var] = 0;
    r.add_term(std::move(f), c);
  }
  return r;
}

inline std::map<int, LaurentPolynomial> coefficients_in(
    const LaurentPolynomial& p, std::size_t var) {
  std::map<int, LaurentPolynomial> out;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[var] = 0;
    auto [it, ins] = out.try_emplace(e[var], p.arity());
    it->second.add_term(std::move(f), c);
  }
  return out;
}

inline LaurentPolynomial exact_quotient(const LaurentPolynomial& a,
                                        const LaurentPolynomial& b) {
  auto q = divide_exact(a, b);
  if (!q) throw Error(ErrorCode::NotApplicable, "expected exact division");
  return std::move(*q);
}

/// Makes the lex-leading coefficient positive.
inline LaurentPolynomial positive_lead(LaurentPolynomial p) {
  if (!p.is_zero() && p.terms().rbegin()->second < 0) p = -p;
  return p;
}

LaurentPolynomial poly_gcd(const LaurentPolynomial& a,
                           const LaurentPolynomial& b, std::size_t vars);

/// gcd of the coefficients of p viewed as a polynomial in var.
inline LaurentPolynomial content_in(const LaurentPolynomial& p,
                                    std::size_t var) {
  LaurentPolynomial g(p.arity());
  for (const auto& [d, c] : coefficients_in(p, var)) {
    g = g.is_zero() ? positive_lead(c) : poly_gcd(g, c, var);
    if (g == LaurentPolynomial::one(p.arity())) break;
  }
  return g;
}

/// Pseudo-remainder of a by b in var, without the leading-coefficient power
/// (callers take primitive parts, so constant multiples do not matter).
inline LaurentPolynomial pseudo_remainder(const LaurentPolynomial& a,
                                          const LaurentPolynomial& b,
                                          std::size_t var) {
  const int db = degree_in(b, var);
  const LaurentPolynomial lb = coefficient_in(b, var, db);
  LaurentPolynomial r = a;
  while (!r.is_zero()) {
    const int dr = degree_in(r, var);
    if (dr < db) break;
    const LaurentPolynomial lr = coefficient_in(r, var, dr);
    Exponents shift(a.arity(), 0);
    shift[var] = dr - db;
    r = lb * r - lr * b.shifted(shift);
  }
  return r;
}

/// gcd in Z[x_0, ..., x_{vars-1}] of polynomials with non-negative exponents
/// that do not involve variables at or beyond `vars`. Recursive primitive
/// PRS on the highest active variable.
inline LaurentPolynomial poly_gcd(const LaurentPolynomial& a,
                                  const LaurentPolynomial& b,
                                  std::size_t vars) {
  const std::size_t n = a.arity();
  if (a.is_zero()) return positive_lead(b);
  if (b.is_zero()) return positive_lead(a);
  if (a.is_constant()) {
    return LaurentPolynomial::constant(
        n, boost::multiprecision::gcd(a.constant_term(), b.integer_content()));
  }
  if (b.is_constant()) {
    return LaurentPolynomial::constant(
        n, boost::multiprecision::gcd(b.constant_term(), a.integer_content()));
  }
  if (vars == 0) {
    return LaurentPolynomial::constant(
        n, boost::multiprecision::gcd(a.constant_term(), b.constant_term()));
  }
  const std::size_t var = vars - 1;
  if (degree_in(a, var) == 0 && degree_in(b, var) == 0) {
    return poly_gcd(a, b, var);
  }

  const LaurentPolynomial ca = content_in(a, var);
  const LaurentPolynomial cb = content_in(b, var);
  LaurentPolynomial pa = exact_quotient(a, ca);
  LaurentPolynomial pb = exact_quotient(b, cb);
  const LaurentPolynomial c = poly_gcd(ca, cb, var);

  if (degree_in(pa, var) < degree_in(pb, var)) std::swap(pa, pb);
  LaurentPolynomial g;
  for (;;) {
    if (degree_in(pb, var) == 0) {
      // A primitive polynomial of degree 0 in var is ±1.
      g = LaurentPolynomial::one(n);
      break;
    }
    LaurentPolynomial r = pseudo_remainder(pa, pb, var);
    if (r.is_zero()) {
      g = pb;
      break;
    }
    pa = std::move(pb);
    pb = exact_quotient(r, content_in(r, var));
  }
  return positive_lead(c * g);
}

}  // namespace detail

/// gcd in the Laurent ring, in unit normal form. gcd(0, 0) = 0.
inline UnitNormalForm gcd(const LaurentPolynomial& p,
                          const LaurentPolynomial& q) {
  if (p.arity() != q.arity()) {
    throw Error(ErrorCode::ArityMismatch, "gcd");
  }
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  const LaurentPolynomial a = normalize(p).representative();
  const LaurentPolynomial b = normalize(q).representative();
  return normalize(detail::poly_gcd(a, b, p.arity()));
}

inline UnitNormalForm gcd_many(const std::vector<LaurentPolynomial>& ps) {
  if (ps.empty()) throw Error(ErrorCode::EmptyInput, "gcd_many of nothing");
  UnitNormalForm g = normalize(ps.front());
  for (std::size_t i = 1; i < ps.size(); ++i) {
    if (g.is_one()) break;
    g = gcd(g.representative(), ps[i]);
  }
  return g;
}

/// Ring homomorphism sending t_i to images[i]; each image must be ±(monomial)
/// and all images must share an arity.
inline LaurentPolynomial specialize(const LaurentPolynomial& p,
                                    const std::vector<LaurentPolynomial>& images) {
  if (images.size() != p.arity()) {
    throw Error(ErrorCode::ArityMismatch, "one image per variable required");
  }
  if (images.empty()) return p;
  const std::size_t target = images.front().arity();
  for (const auto& im : images) {
    if (im.arity() != target) {
      throw Error(ErrorCode::ArityMismatch, "images differ in arity");
    }
    if (!im.is_unit()) {
      throw Error(ErrorCode::NonMonomialImage, im.to_string());
    }
  }
  LaurentPolynomial out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents f(target, 0);
    BigInt coef = c;
    for (std::size_t v = 0; v < e.size(); ++v) {
      const auto& [ie, ic] = *images[v].terms().begin();
      for (std::size_t w = 0; w < target; ++w) f[w] += e[v] * ie[w];
      if (ic < 0 && (e[v] % 2 != 0)) coef = -coef;
    }
    out.add_term(std::move(f), coef);
  }
  return out;
}

/// {"arity": n, "terms": [{"exp": [...], "coef": c}, ...]} with terms in
/// ascending grlex order. Coefficients outside the int64 range are emitted
/// as decimal strings.
inline nlohmann::ordered_json to_json(const LaurentPolynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : grlex_terms(p)) {
    nlohmann::ordered_json coef;
    if (c >= std::numeric_limits<std::int64_t>::min() &&
        c <= std::numeric_limits<std::int64_t>::max()) {
      coef = static_cast<std::int64_t>(c);
    } else {
      coef = c.str();
    }
    terms.push_back({{"exp", e}, {"coef", coef}});
  }
  return {{"arity", p.arity()}, {"terms", terms}};
}

inline nlohmann::ordered_json to_json(const UnitNormalForm& u) {
  return to_json(u.representative());
}

}  // namespace welded
