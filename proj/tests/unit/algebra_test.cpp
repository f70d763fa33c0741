#include <gtest/gtest.h>

#include "nakayama/algebra.hpp"
#include "support.hpp"

namespace nakayama {
namespace {

using testing::M;

TEST(Kupisch, RadicalSquareZeroShapes) {
  EXPECT_EQ(make_rsz_nakayama(3, Orientation::linear),
            validate_kupisch(Orientation::linear, {1, 2, 2}));
  EXPECT_EQ(make_rsz_nakayama(3, Orientation::cyclic),
            validate_kupisch(Orientation::cyclic, {2, 2, 2}));
  const auto dual = make_rsz_nakayama(1, Orientation::cyclic);
  EXPECT_EQ(std::vector<int>(dual.kupisch().begin(), dual.kupisch().end()), std::vector<int>{2});
  EXPECT_TRUE(dual.radical_square_zero());
  EXPECT_TRUE(dual.self_injective());
}

TEST(Kupisch, AcceptsAuslanderSeries) {
  EXPECT_NO_THROW(validate_kupisch(Orientation::linear, {1, 2, 2, 3, 2}));
  EXPECT_NO_THROW(validate_kupisch(Orientation::cyclic, {3, 2, 3, 2, 3, 2}));
}

TEST(Kupisch, RejectsJumpNamingIndex) {
  try {
    validate_kupisch(Orientation::linear, {1, 3, 2});
    FAIL() << "expected invalid_kupisch";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::invalid_kupisch);
    EXPECT_NE(std::string(e.what()).find("i=2"), std::string::npos) << e.what();
  }
}

TEST(Kupisch, RejectsMalformedSeries) {
  auto code_of = [](Orientation k, std::vector<int> c) {
    try {
      validate_kupisch(k, std::move(c));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::internal_inconsistency;
  };
  EXPECT_EQ(code_of(Orientation::linear, {}), ErrorCode::invalid_size);
  EXPECT_EQ(code_of(Orientation::linear, {2}), ErrorCode::invalid_kupisch);
  EXPECT_EQ(code_of(Orientation::linear, {1, 1}), ErrorCode::invalid_kupisch);
  EXPECT_EQ(code_of(Orientation::cyclic, {1}), ErrorCode::invalid_kupisch);
  EXPECT_EQ(code_of(Orientation::cyclic, {2, 1}), ErrorCode::invalid_kupisch);
  EXPECT_EQ(code_of(Orientation::cyclic, {4, 2}), ErrorCode::invalid_kupisch);
  EXPECT_EQ(code_of(Orientation::linear, {1, 0}), ErrorCode::invalid_kupisch);
}

TEST(Kupisch, SizeMustBePositive) {
  EXPECT_THROW(make_rsz_nakayama(0, Orientation::linear), Error);
}

TEST(Indecomposables, CountIsKupischSum) {
  EXPECT_EQ(indecomposables(testing::gamma_lin3()).size(), 10u);
  EXPECT_EQ(indecomposables(validate_kupisch(Orientation::linear, {1})), ModuleSet({M(1, 1)}));
  EXPECT_EQ(indecomposables(validate_kupisch(Orientation::cyclic, {2})),
            ModuleSet({M(1, 1), M(1, 2)}));
}

TEST(Modules, LayersAndSocle) {
  const auto g = testing::gamma_cyc3();
  EXPECT_EQ(g.layers(M(1, 3)), (std::vector<Vertex>{1, 6, 5}));
  EXPECT_EQ(g.socle(M(2, 2)), 1);
  EXPECT_TRUE(g.is_projective(M(4, 2)));
  EXPECT_FALSE(g.is_projective(M(4, 1)));
  EXPECT_THROW(g.require_valid(M(2, 3)), Error);
  EXPECT_THROW(g.require_valid(M(7, 1)), Error);
}

TEST(Modules, SubmoduleAndQuotient) {
  const auto g = testing::gamma_lin3();
  EXPECT_EQ(submodule(g, M(4, 3), 2), MaybeModule(M(3, 2)));
  EXPECT_EQ(submodule(g, M(4, 3), 3), MaybeModule(M(4, 3)));
  EXPECT_EQ(submodule(g, M(4, 3), 0), std::nullopt);
  EXPECT_EQ(quotient_top(g, M(4, 3), 1), MaybeModule(M(4, 1)));
  EXPECT_THROW(submodule(g, M(4, 3), 4), Error);
  const auto d = testing::dual_numbers_gamma();
  EXPECT_EQ(submodule(d, M(1, 3), 1), MaybeModule(M(1, 1)));
}

TEST(Modules, InjectiveEnvelopeVertex) {
  const auto g = testing::gamma_lin3();
  EXPECT_EQ(injective_env_vertex(g, 2), M(4, 3));
  EXPECT_EQ(injective_env_vertex(g, 4), M(5, 2));
  EXPECT_EQ(injective_env_vertex(testing::dual_numbers_gamma(), 1), M(1, 3));
  EXPECT_TRUE(is_injective(g, M(5, 1)));
  EXPECT_FALSE(is_injective(g, M(3, 2)));
}

TEST(ModuleSetType, CanonicalAndDeduplicated) {
  const ModuleSet s({M(3, 1), M(1, 2), M(3, 1), M(1, 1)});
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[0], M(1, 1));
  EXPECT_EQ(s[2], M(3, 1));
  EXPECT_EQ(to_string(s), "M(1,1) + M(1,2) + M(3,1)");
  EXPECT_EQ(to_string(ModuleSet{}), "0");
  EXPECT_EQ(s.overlap(s.without(M(1, 2)).with(M(2, 1))), 2u);
}

TEST(Quotient, KillingProjectiveInjectivesLeavesSemisimple) {
  const auto q = quotient_algebra(testing::gamma_lin3(), {2, 4, 5});
  EXPECT_TRUE(q.is_semisimple());
  ASSERT_EQ(q.components.size(), 2u);
  EXPECT_EQ(q.component_vertices[0], std::vector<Vertex>{1});
  EXPECT_EQ(q.component_vertices[1], std::vector<Vertex>{3});

  const auto qc = quotient_algebra(testing::gamma_cyc3(), {1, 3, 5});
  EXPECT_TRUE(qc.is_semisimple());
  EXPECT_EQ(qc.simple_count(), 3);
}

TEST(Quotient, NothingKilledIsIdentity) {
  const auto g = testing::gamma_lin3();
  const auto q = quotient_algebra(g, {});
  ASSERT_EQ(q.components.size(), 1u);
  EXPECT_EQ(q.components[0], g);
  const auto c = testing::gamma_cyc3();
  EXPECT_EQ(quotient_algebra(c, {}).components.at(0), c);
}

TEST(Quotient, ModulesRoundTrip) {
  const auto c = testing::gamma_cyc3();
  const auto q = quotient_algebra(c, {2});
  ASSERT_EQ(q.components.size(), 1u);
  EXPECT_EQ(q.component_vertices[0], (std::vector<Vertex>{3, 4, 5, 6, 1}));
  const auto local = q.from_parent(M(1, 3));
  ASSERT_TRUE(local);
  EXPECT_EQ(q.to_parent(local->first, local->second), M(1, 3));
  EXPECT_FALSE(q.from_parent(M(3, 2)));
  EXPECT_THROW(quotient_algebra(c, {9}), Error);
}

TEST(Quotient, Semisimple) {
  const auto q = semisimple_algebra(4);
  EXPECT_EQ(q.simple_count(), 4);
  EXPECT_TRUE(q.is_semisimple());
}

TEST(Literals, ParsesAliases) {
  const auto g = testing::gamma_lin3();
  EXPECT_EQ(parse_module(g, "P(4)"), M(4, 3));
  EXPECT_EQ(parse_module(g, "S(2)"), M(2, 1));
  EXPECT_EQ(parse_module(g, " M(5, 2) "), M(5, 2));
  EXPECT_THROW(parse_module(g, "X(1)"), Error);
  EXPECT_THROW(parse_module(g, "M(1)"), Error);
  EXPECT_THROW(parse_module(g, "P(9)"), Error);
  EXPECT_THROW(parse_module(g, "M(2,3)"), Error);
}

}  // namespace
}  // namespace nakayama
