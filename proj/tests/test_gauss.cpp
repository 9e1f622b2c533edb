#include "support.hpp"

#include <welded/moves.hpp>

#include <gtest/gtest.h>

using namespace welded;
using namespace testing_support;

namespace {

ErrorCode parse_error(std::string_view code) {
  try {
    (void)parse_gauss_code(code);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for '" << code << "'";
  return ErrorCode::SyntaxError;
}

}  // namespace

TEST(Parse, Trefoil) {
  const auto d = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
  EXPECT_EQ(d.component_count(), 1u);
  EXPECT_EQ(d.crossing_count(), 3u);
  for (const auto& [c, s] : d.signs()) EXPECT_EQ(s.value(), 1);
}

TEST(Parse, TwoEmptyComponents) {
  const auto d = parse_gauss_code(";");
  EXPECT_EQ(d.component_count(), 2u);
  EXPECT_EQ(d.crossing_count(), 0u);
}

TEST(Parse, EmptyInputIsUnknot) {
  const auto d = parse_gauss_code("");
  EXPECT_EQ(d.component_count(), 1u);
  EXPECT_EQ(d.crossing_count(), 0u);
  EXPECT_EQ(parse_gauss_code("  \n\t"), d);
}

TEST(Parse, Errors) {
  EXPECT_EQ(parse_error("O1+ U1-"), ErrorCode::SignConflict);
  EXPECT_EQ(parse_error("O1+ O1+"), ErrorCode::RoleConflict);
  EXPECT_EQ(parse_error("O1+ U2+ U1+"), ErrorCode::UnpairedCrossing);
  EXPECT_EQ(parse_error("O1+ ; U2+"), ErrorCode::UnpairedCrossing);
  EXPECT_EQ(parse_error("X1+"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("O1"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("O+ U+"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("O1+U1+"), ErrorCode::SyntaxError);
  EXPECT_EQ(parse_error("O1* U1*"), ErrorCode::SyntaxError);
}

TEST(Parse, ErrorMessageNamesTheKind) {
  try {
    (void)parse_gauss_code("O1+ U1-");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("SignConflict"), std::string::npos);
  }
}

TEST(Parse, DirectConstructionIsValidated) {
  EXPECT_THROW(GaussDiagram({{{1, Role::Over}}}, {{1, Sign::positive()}}), Error);
  EXPECT_THROW(GaussDiagram({{{1, Role::Over}, {1, Role::Under}}}, {}), Error);
  EXPECT_THROW(GaussDiagram({{{1, Role::Over}, {1, Role::Under}}},
                            {{1, Sign::positive()}, {2, Sign::negative()}}),
               Error);
  EXPECT_THROW(Sign(0), Error);
}

TEST(Serialize, EmptyDiagrams) {
  EXPECT_EQ(serialize_gauss_code(GaussDiagram{}), "");
  EXPECT_EQ(serialize_gauss_code(GaussDiagram::trivial(2)), ";");
  EXPECT_EQ(serialize_gauss_code(GaussDiagram::trivial(3)), ";;");
}

TEST(Serialize, TrefoilCanonical) {
  const std::string code = "O1+ U2+ O3+ U1+ O2+ U3+";
  EXPECT_EQ(serialize_gauss_code(parse_gauss_code(code)), code);
  // any rotation and relabelling gives the same text
  EXPECT_EQ(serialize_gauss_code(parse_gauss_code("U7+ O5+ U9+ O7+ U5+ O9+")), code);
}

TEST(Serialize, MixedComponents) {
  EXPECT_EQ(serialize_gauss_code(parse_gauss_code("U1+ O2+ ; O1+ U2+")), "O1+ U2+ ; U1+ O2+");
  EXPECT_EQ(serialize_gauss_code(parse_gauss_code("; O1- U1-")), "; O1- U1-");
}

TEST(Serialize, RoundTripOverFixturesAndWalks) {
  for (const auto& name : all_fixtures()) {
    const auto d = fixture(name);
    const auto text = serialize_gauss_code(d);
    const auto back = parse_gauss_code(text);
    EXPECT_TRUE(same_diagram(d, back)) << name;
    EXPECT_EQ(serialize_gauss_code(back), text) << name;
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const auto walked = random_walk(d, 20, seed).first;
      const auto t2 = serialize_gauss_code(walked);
      EXPECT_EQ(serialize_gauss_code(parse_gauss_code(t2)), t2) << name << " seed " << seed;
      EXPECT_TRUE(same_diagram(walked, parse_gauss_code(t2))) << name << " seed " << seed;
    }
  }
}

TEST(Serialize, RotationInvariance) {
  const auto d = fixture("vanishing_link");
  auto comps = d.components();
  for (auto& c : comps) std::rotate(c.begin(), c.begin() + 1, c.end());
  const GaussDiagram rotated(comps, d.signs());
  EXPECT_FALSE(rotated == d);
  EXPECT_TRUE(same_diagram(rotated, d));
}

TEST(Mirror, Examples) {
  EXPECT_EQ(mirror(GaussDiagram{}), GaussDiagram{});
  const auto tre = parse_gauss_code("O1+ U2+ O3+ U1+ O2+ U3+");
  EXPECT_EQ(mirror(tre), parse_gauss_code("U1- O2- U3- O1- U2- O3-"));
  for (const auto& name : all_fixtures()) {
    const auto d = fixture(name);
    EXPECT_EQ(mirror(mirror(d)), d) << name;
    EXPECT_EQ(mirror(d).component_count(), d.component_count());
  }
}

TEST(Relabel, Examples) {
  const auto hopf = fixture("hopf");
  EXPECT_EQ(relabel_components(hopf, {0, 1}), hopf);
  EXPECT_EQ(relabel_components(relabel_components(hopf, {1, 0}), {1, 0}), hopf);
  try {
    (void)relabel_components(fixture("trefoil"), {0, 1});
    FAIL() << "expected LengthMismatch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LengthMismatch);
  }
  EXPECT_THROW((void)relabel_components(hopf, {0, 0}), Error);
}

TEST(Relabel, ComposesLikePermutations) {
  const auto d = fixture("borromean");
  const std::vector<std::size_t> p{1, 2, 0}, q{2, 0, 1};
  // (d relabelled by p) relabelled by q: component i is old component p[q[i]]
  std::vector<std::size_t> pq(3);
  for (std::size_t i = 0; i < 3; ++i) pq[i] = p[q[i]];
  EXPECT_EQ(relabel_components(relabel_components(d, p), q), relabel_components(d, pq));
}

TEST(Relabel, VirtualPairFixturesAreRelabellings) {
  EXPECT_TRUE(same_diagram(relabel_components(fixture("virtual_pair_d"), {1, 0, 2}),
                           fixture("virtual_pair_dp")));
}

TEST(Weights, Basics) {
  const MultiplexWeights w{2, -1, 0};
  EXPECT_EQ(w.size(), 3u);
  EXPECT_EQ(w[1], -1);
  EXPECT_EQ(w.to_string(), "2 -1 0");
  EXPECT_EQ(MultiplexWeights::uniform(2, 3).values(), (std::vector<int>{3, 3}));
}

TEST(Diagram, Sites) {
  const auto d = fixture("hopf");
  const auto s = d.sites();
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at(1).first.component, 0u);
  EXPECT_EQ(s.at(1).second.component, 1u);
  EXPECT_EQ(d.next_free_id(), 3u);
  EXPECT_EQ(GaussDiagram{}.next_free_id(), 1u);
}
