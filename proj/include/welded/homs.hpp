#pragma once

// Finite target groups and exact homomorphism counting by backtracking.

#include <welded/error.hpp>
#include <welded/group.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace welded {

/// A finite group given by a multiplication table over elements 0..n-1.
class FiniteTarget {
 public:
  /// Symmetric group S_degree; element 0 is the identity permutation and the
  /// remaining elements follow lexicographic permutation order.
  static FiniteTarget symmetric(unsigned degree) {
    if (degree == 0 || degree > 7) {
      throw Error(ErrorCode::TargetTooLarge,
                  "symmetric groups of degree 1..7 are supported");
    }
    std::vector<std::vector<std::uint8_t>> perms;
    std::vector<std::uint8_t> p(degree);
    std::iota(p.begin(), p.end(), 0);
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const std::size_t n = perms.size();

    auto rank = [degree](const std::vector<std::uint8_t>& q) {
      // Lehmer code, matching lexicographic order
      std::size_t r = 0;
      for (unsigned i = 0; i < degree; ++i) {
        std::size_t smaller = 0;
        for (unsigned j = i + 1; j < degree; ++j) smaller += q[j] < q[i];
        r = r * (degree - i) + smaller;
      }
      return r;
    };

    FiniteTarget t;
    t.name_ = "S" + std::to_string(degree);
    t.order_ = n;
    t.table_.resize(n * n);
    std::vector<std::uint8_t> q(degree);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        // (a*b)(i) = a(b(i))
        for (unsigned i = 0; i < degree; ++i) q[i] = perms[a][perms[b][i]];
        t.table_[a * n + b] = static_cast<std::uint16_t>(rank(q));
      }
    }
    t.finish();
    return t;
  }

  /// Explicit multiplication table; checked to be a group.
  static FiniteTarget from_table(std::string name,
                                 const std::vector<std::vector<std::size_t>>& table,
                                 std::size_t identity) {
    const std::size_t n = table.size();
    auto bad = [](const std::string& why) { throw Error(ErrorCode::InvalidTarget, why); };
    if (n == 0 || identity >= n) bad("empty table or identity out of range");
    if (n > 65535) throw Error(ErrorCode::TargetTooLarge, "table too large");
    FiniteTarget t;
    t.name_ = std::move(name);
    t.order_ = n;
    t.table_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      if (table[a].size() != n) bad("table is not square");
      std::vector<bool> seen(n, false);
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t v = table[a][b];
        if (v >= n) bad("entry out of range");
        if (seen[v]) bad("row is not a permutation");
        seen[v] = true;
        t.table_[a * n + b] = static_cast<std::uint16_t>(v);
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (t.mul(identity, a) != a || t.mul(a, identity) != a) bad("identity fails");
    }
    // associativity: exhaustive for small tables, a deterministic sample otherwise
    const std::size_t stride = n <= 32 ? 1 : n / 16 + 1;
    for (std::size_t a = 0; a < n; a += stride)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; c += stride)
          if (t.mul(t.mul(a, b), c) != t.mul(a, t.mul(b, c))) bad("not associative");
    if (identity != 0) {
      // only the identity index matters internally; keep the caller's labels
      t.identity_ = identity;
    }
    t.finish();
    for (std::size_t a = 0; a < n; ++a) {
      if (t.mul(a, t.inverse_[a]) != t.identity_) bad("missing inverse");
    }
    return t;
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t identity() const noexcept { return identity_; }

  std::size_t mul(std::size_t a, std::size_t b) const { return table_[a * order_ + b]; }
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }

  /// Conjugacy classes, each listed with its smallest element first.
  const std::vector<std::vector<std::size_t>>& conjugacy_classes() const {
    return classes_;
  }

 private:
  FiniteTarget() = default;

  void finish() {
    inverse_.assign(order_, 0);
    for (std::size_t a = 0; a < order_; ++a)
      for (std::size_t b = 0; b < order_; ++b)
        if (mul(a, b) == identity_) {
          inverse_[a] = b;
          break;
        }
    std::vector<bool> done(order_, false);
    for (std::size_t a = 0; a < order_; ++a) {
      if (done[a]) continue;
      std::vector<std::size_t> cls;
      for (std::size_t h = 0; h < order_; ++h) {
        const std::size_t c = mul(mul(h, a), inverse_[h]);
        if (!done[c]) {
          done[c] = true;
          cls.push_back(c);
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  }

  std::string name_;
  std::size_t order_ = 0;
  std::size_t identity_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::size_t> inverse_;
  std::vector<std::vector<std::size_t>> classes_;
};

/// "S3" etc.
inline FiniteTarget parse_target(const std::string& name) {
  if (name.size() >= 2 && (name[0] == 'S' || name[0] == 's')) {
    try {
      std::size_t used = 0;
      const int k = std::stoi(name.substr(1), &used);
      if (used == name.size() - 1 && k > 0) return FiniteTarget::symmetric(static_cast<unsigned>(k));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::InvalidTarget, "unknown target '" + name + "'");
}

struct HomCountOptions {
  std::size_t max_target_order = 5040;
  // Fix the first branching generator up to conjugacy and weight by class
  // size; conjugation permutes the homomorphisms, so the total is exact.
  bool use_conjugacy_classes = true;
};

namespace detail {

class HomCounter {
 public:
  HomCounter(const GroupPresentation& p, const FiniteTarget& t)
      : target_(t), gens_(p.generators.size()) {
    for (const auto& r : p.relators) {
      if (!r.empty()) relators_.push_back(r);
    }
    plan();
  }

  std::uint64_t count(bool use_classes) {
    value_.assign(gens_, 0);
    if (gens_ == 0) return relators_.empty() ? 1 : check_all_constant();
    if (use_classes && !steps_[0].forced) {
      std::uint64_t total = 0;
      for (const auto& cls : target_.conjugacy_classes()) {
        value_[order_[0]] = cls.front();
        if (checks_pass(0)) total += cls.size() * search(1);
      }
      return total;
    }
    return search(0);
  }

 private:
  struct Step {
    bool forced = false;
    std::size_t relator = 0;   // forcing relator
    std::vector<std::size_t> checks;  // relators complete at this depth
  };

  std::uint64_t check_all_constant() const {
    // no generators: every relator is the empty word (already dropped)
    return 1;
  }

  void plan() {
    std::vector<bool> assigned(gens_, false);
    std::vector<bool> checked(relators_.size(), false);
    auto unassigned_in = [&](const Word& w) {
      std::vector<std::size_t> u;
      for (const auto& l : w.letters())
        if (!assigned[l.generator] &&
            std::find(u.begin(), u.end(), l.generator) == u.end())
          u.push_back(l.generator);
      return u;
    };
    for (std::size_t depth = 0; depth < gens_; ++depth) {
      Step step;
      std::optional<std::size_t> pick;
      // forced: a relator whose only unassigned generator occurs once
      for (std::size_t r = 0; r < relators_.size() && !pick; ++r) {
        if (checked[r]) continue;
        auto u = unassigned_in(relators_[r]);
        if (u.size() == 1 && relators_[r].occurrences(u[0]) == 1) {
          pick = u[0];
          step.forced = true;
          step.relator = r;
        }
      }
      if (!pick) {
        // branch on the generator that brings the most relators closest to
        // completion; lowest index on ties
        std::size_t best_score = 0;
        for (std::size_t g = 0; g < gens_; ++g) {
          if (assigned[g]) continue;
          std::size_t score = 1;
          for (std::size_t r = 0; r < relators_.size(); ++r) {
            if (checked[r] || !relators_[r].contains(g)) continue;
            const auto u = unassigned_in(relators_[r]);
            score += u.size() <= 2 ? 4 : 1;
          }
          if (!pick || score > best_score) {
            pick = g;
            best_score = score;
          }
        }
      }
      assigned[*pick] = true;
      order_.push_back(*pick);
      for (std::size_t r = 0; r < relators_.size(); ++r) {
        if (checked[r]) continue;
        if (unassigned_in(relators_[r]).empty()) {
          checked[r] = true;
          if (!(step.forced && r == step.relator)) step.checks.push_back(r);
        }
      }
      steps_.push_back(std::move(step));
    }
  }

  std::size_t evaluate(const Word& w) const {
    std::size_t acc = target_.identity();
    for (const auto& l : w.letters()) {
      const std::size_t v = value_[l.generator];
      acc = target_.mul(acc, l.exponent > 0 ? v : target_.inverse(v));
    }
    return acc;
  }

  bool checks_pass(std::size_t depth) const {
    for (std::size_t r : steps_[depth].checks)
      if (evaluate(relators_[r]) != target_.identity()) return false;
    return true;
  }

  std::size_t forced_value(std::size_t depth) const {
    const Word& w = relators_[steps_[depth].relator];
    const std::size_t x = order_[depth];
    std::size_t u = target_.identity(), v = target_.identity();
    int ex = 1;
    bool seen = false;
    for (const auto& l : w.letters()) {
      if (l.generator == x) {
        ex = l.exponent;
        seen = true;
        continue;
      }
      const std::size_t val = l.exponent > 0 ? value_[l.generator]
                                             : target_.inverse(value_[l.generator]);
      if (seen) {
        v = target_.mul(v, val);
      } else {
        u = target_.mul(u, val);
      }
    }
    // u x v = 1 => x = (v u)^-1 ; u x^-1 v = 1 => x = v u
    const std::size_t vu = target_.mul(v, u);
    return ex > 0 ? target_.inverse(vu) : vu;
  }

  std::uint64_t search(std::size_t depth) {
    if (depth == gens_) return 1;
    const std::size_t g = order_[depth];
    if (steps_[depth].forced) {
      value_[g] = forced_value(depth);
      return checks_pass(depth) ? search(depth + 1) : 0;
    }
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < target_.order(); ++v) {
      value_[g] = v;
      if (checks_pass(depth)) total += search(depth + 1);
    }
    return total;
  }

  const FiniteTarget& target_;
  std::size_t gens_;
  std::vector<Word> relators_;
  std::vector<std::size_t> order_;
  std::vector<Step> steps_;
  std::vector<std::size_t> value_;
};

}  // namespace detail

/// Number of homomorphisms from the presented group to the target.
inline std::uint64_t count_homs(const GroupPresentation& p, const FiniteTarget& target,
                                const HomCountOptions& opts = {}) {
  if (target.order() > opts.max_target_order) {
    throw Error(ErrorCode::TargetTooLarge,
                target.name() + " has order " + std::to_string(target.order()));
  }
  detail::HomCounter counter(p, target);
  return counter.count(opts.use_conjugacy_classes);
}

}  // namespace welded
