#pragma once

// Ordered, oriented virtual link diagrams at the Gauss-diagram level.
// Virtual crossings leave no trace here: each component is a cyclic sequence
// of classical-crossing passages (Over or Under), and every crossing carries
// a sign.

#include <welded/error.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace welded {

using CrossingId = std::uint64_t;

class Sign {
 public:
  constexpr Sign() = default;
  constexpr explicit Sign(int v) : value_(v) {
    if (v != 1 && v != -1) throw Error(ErrorCode::SyntaxError, "sign must be +1 or -1");
  }
  static constexpr Sign positive() { return Sign(1); }
  static constexpr Sign negative() { return Sign(-1); }

  constexpr int value() const noexcept { return value_; }
  constexpr Sign operator-() const { return Sign(-value_); }
  constexpr char symbol() const noexcept { return value_ > 0 ? '+' : '-'; }
  friend constexpr auto operator<=>(Sign, Sign) = default;

 private:
  int value_ = 1;
};

enum class Role : std::uint8_t { Over, Under };

constexpr Role opposite(Role r) noexcept {
  return r == Role::Over ? Role::Under : Role::Over;
}

struct Endpoint {
  CrossingId crossing = 0;
  Role role = Role::Over;
  friend constexpr auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

using Component = std::vector<Endpoint>;

/// Position of an endpoint: component index and index within it.
struct Site {
  std::size_t component = 0;
  std::size_t position = 0;
  friend constexpr auto operator<=>(const Site&, const Site&) = default;
};

class GaussDiagram {
 public:
  /// One empty component (the unknot).
  GaussDiagram() : components_(1) {}

  GaussDiagram(std::vector<Component> components, std::map<CrossingId, Sign> signs)
      : components_(std::move(components)), signs_(std::move(signs)) {
    validate();
  }

  static GaussDiagram trivial(std::size_t n) {
    GaussDiagram d;
    d.components_.assign(n, Component{});
    return d;
  }

  const std::vector<Component>& components() const noexcept { return components_; }
  const Component& component(std::size_t i) const { return components_.at(i); }
  const std::map<CrossingId, Sign>& signs() const noexcept { return signs_; }
  std::size_t component_count() const noexcept { return components_.size(); }
  std::size_t crossing_count() const noexcept { return signs_.size(); }
  Sign sign(CrossingId c) const { return signs_.at(c); }

  Site locate(CrossingId c, Role role) const {
    for (std::size_t i = 0; i < components_.size(); ++i)
      for (std::size_t p = 0; p < components_[i].size(); ++p)
        if (components_[i][p] == Endpoint{c, role}) return {i, p};
    throw Error(ErrorCode::UnpairedCrossing, "crossing " + std::to_string(c));
  }

  /// Over/Under sites of every crossing, in one pass.
  std::map<CrossingId, std::pair<Site, Site>> sites() const {
    std::map<CrossingId, std::pair<Site, Site>> out;
    for (std::size_t i = 0; i < components_.size(); ++i)
      for (std::size_t p = 0; p < components_[i].size(); ++p) {
        const auto& e = components_[i][p];
        auto& s = out[e.crossing];
        (e.role == Role::Over ? s.first : s.second) = Site{i, p};
      }
    return out;
  }

  CrossingId next_free_id() const {
    return signs_.empty() ? 1 : signs_.rbegin()->first + 1;
  }

  friend bool operator==(const GaussDiagram&, const GaussDiagram&) = default;

 private:
  void validate() const {
    std::map<CrossingId, std::pair<int, int>> seen;
    for (const auto& comp : components_) {
      for (const auto& e : comp) {
        auto& [o, u] = seen[e.crossing];
        int& slot = e.role == Role::Over ? o : u;
        if (++slot > 1) {
          throw Error(ErrorCode::RoleConflict,
                      "crossing " + std::to_string(e.crossing) + " repeats a role");
        }
      }
    }
    for (const auto& [c, ou] : seen) {
      if (ou.first != 1 || ou.second != 1) {
        throw Error(ErrorCode::UnpairedCrossing, "crossing " + std::to_string(c));
      }
      if (!signs_.count(c)) {
        throw Error(ErrorCode::UnpairedCrossing,
                    "crossing " + std::to_string(c) + " has no sign");
      }
    }
    for (const auto& [c, s] : signs_) {
      if (!seen.count(c)) {
        throw Error(ErrorCode::UnpairedCrossing,
                    "sign for absent crossing " + std::to_string(c));
      }
    }
  }

  std::vector<Component> components_;
  std::map<CrossingId, Sign> signs_;
};

/// Per-component integer weights m_1, ..., m_n.
class MultiplexWeights {
 public:
  MultiplexWeights() = default;
  MultiplexWeights(std::initializer_list<int> w) : values_(w) {}
  explicit MultiplexWeights(std::vector<int> w) : values_(std::move(w)) {}

  static MultiplexWeights uniform(std::size_t n, int m) {
    return MultiplexWeights(std::vector<int>(n, m));
  }

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_.at(i); }
  const std::vector<int>& values() const noexcept { return values_; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < values_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(values_[i]);
    }
    return s;
  }

  friend bool operator==(const MultiplexWeights&, const MultiplexWeights&) = default;

 private:
  std::vector<int> values_;
};

/// Grammar: diagram := component (";" component)*, component := token*,
/// token := ("O"|"U") integer ("+"|"-"), whitespace separated.
inline GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<Component> comps(1);
  std::map<CrossingId, Sign> signs;
  std::size_t i = 0;
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (i < text.size()) {
    const char ch = text[i];
    if (is_space(ch)) {
      ++i;
      continue;
    }
    if (ch == ';') {
      comps.emplace_back();
      ++i;
      continue;
    }
    if (ch != 'O' && ch != 'U') {
      throw Error(ErrorCode::SyntaxError,
                  "unexpected '" + std::string(1, ch) + "' at offset " + std::to_string(i));
    }
    const Role role = ch == 'O' ? Role::Over : Role::Under;
    const std::size_t start = ++i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    CrossingId id = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + i, id);
    if (start == i || ec != std::errc{}) {
      throw Error(ErrorCode::SyntaxError, "bad crossing number at offset " + std::to_string(start));
    }
    if (i >= text.size() || (text[i] != '+' && text[i] != '-')) {
      throw Error(ErrorCode::SyntaxError, "missing sign at offset " + std::to_string(i));
    }
    const Sign s(text[i] == '+' ? 1 : -1);
    ++i;
    if (i < text.size() && !is_space(text[i]) && text[i] != ';') {
      throw Error(ErrorCode::SyntaxError, "tokens must be separated at offset " + std::to_string(i));
    }
    auto [it, inserted] = signs.try_emplace(id, s);
    if (!inserted && it->second != s) {
      throw Error(ErrorCode::SignConflict, "crossing " + std::to_string(id));
    }
    comps.back().push_back({id, role});
  }
  return GaussDiagram(std::move(comps), std::move(signs));
}

/// Reads a fixture file: lines starting with '#' are comments.
inline GaussDiagram load_gauss_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
  std::string line, body;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;
    body += line;
    body += '\n';
  }
  return parse_gauss_code(body);
}

namespace detail {

using CanonToken = std::tuple<CrossingId, Role, int>;

struct CanonState {
  std::map<CrossingId, CrossingId> relabel;
  CrossingId next = 1;
  friend bool operator<(const CanonState& a, const CanonState& b) {
    return a.relabel < b.relabel;
  }
};

}  // namespace detail

/// Canonical text: crossings renumbered 1, 2, ... in order of first
/// appearance, and each component rotated to the start giving the
/// lexicographically least renumbered token sequence (components processed
/// in order; ties are carried forward so the result is rotation invariant).
inline std::string serialize_gauss_code(const GaussDiagram& d) {
  using detail::CanonState;
  using detail::CanonToken;
  std::set<CanonState> states{CanonState{}};
  std::vector<std::vector<CanonToken>> chosen;
  for (const auto& comp : d.components()) {
    std::vector<CanonToken> best;
    std::set<CanonState> next_states;
    bool have = false;
    const std::size_t len = comp.size();
    for (const auto& st : states) {
      for (std::size_t rot = 0; rot < std::max<std::size_t>(len, 1); ++rot) {
        CanonState ns = st;
        std::vector<CanonToken> seq;
        seq.reserve(len);
        for (std::size_t k = 0; k < len; ++k) {
          const auto& e = comp[(rot + k) % len];
          auto [it, ins] = ns.relabel.try_emplace(e.crossing, ns.next);
          if (ins) ++ns.next;
          seq.emplace_back(it->second, e.role, -d.sign(e.crossing).value());
        }
        if (!have || seq < best) {
          best = std::move(seq);
          next_states.clear();
          next_states.insert(std::move(ns));
          have = true;
        } else if (seq == best) {
          next_states.insert(std::move(ns));
        }
      }
    }
    chosen.push_back(std::move(best));
    states = std::move(next_states);
  }

  std::string out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (i) {
      if (!chosen[i - 1].empty()) out += ' ';
      out += ';';
      if (!chosen[i].empty()) out += ' ';
    }
    for (std::size_t k = 0; k < chosen[i].size(); ++k) {
      const auto& [id, role, negsign] = chosen[i][k];
      if (k) out += ' ';
      out += role == Role::Over ? 'O' : 'U';
      out += std::to_string(id);
      out += negsign < 0 ? '+' : '-';
    }
  }
  return out;
}

/// Equality up to rotation of components and renaming of crossings.
inline bool same_diagram(const GaussDiagram& a, const GaussDiagram& b) {
  return serialize_gauss_code(a) == serialize_gauss_code(b);
}

/// Switches every crossing: Over/Under swapped and sign negated.
inline GaussDiagram mirror(const GaussDiagram& d) {
  std::vector<Component> comps = d.components();
  for (auto& comp : comps)
    for (auto& e : comp) e.role = opposite(e.role);
  std::map<CrossingId, Sign> signs;
  for (const auto& [c, s] : d.signs()) signs.emplace(c, -s);
  return GaussDiagram(std::move(comps), std::move(signs));
}

/// Component i of the result is component perm[i] of d.
inline GaussDiagram relabel_components(const GaussDiagram& d,
                                       const std::vector<std::size_t>& perm) {
  if (perm.size() != d.component_count()) {
    throw Error(ErrorCode::LengthMismatch,
                "permutation of length " + std::to_string(perm.size()) + " for " +
                    std::to_string(d.component_count()) + " components");
  }
  std::vector<bool> used(perm.size(), false);
  std::vector<Component> comps;
  comps.reserve(perm.size());
  for (std::size_t p : perm) {
    if (p >= perm.size() || used[p]) {
      throw Error(ErrorCode::InvalidPermutation, "not a bijection");
    }
    used[p] = true;
    comps.push_back(d.component(p));
  }
  return GaussDiagram(std::move(comps), d.signs());
}

}  // namespace welded
