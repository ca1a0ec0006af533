#include <gtest/gtest.h>

#include "charforge/constructions.hpp"
#include "charforge/error.hpp"

using namespace charforge;

TEST(Families, CyclicAndAbelian) {
  EXPECT_EQ(cyclic(1)->order(), 1u);
  auto c9 = cyclic(9);
  EXPECT_EQ(c9->order(), 9u);
  EXPECT_EQ(exponent(*c9), 9u);
  auto a = abelian({3, 3});
  EXPECT_EQ(a->order(), 9u);
  EXPECT_EQ(exponent(*a), 3u);
  EXPECT_THROW(cyclic(0), UsageError);
}

struct ExtraspecialCase {
  std::uint64_t p;
  ExtraspecialKind kind;
  std::uint64_t exponent;
};

class Extraspecial : public ::testing::TestWithParam<ExtraspecialCase> {};

TEST_P(Extraspecial, AdvertisedInvariants) {
  const auto& c = GetParam();
  auto g = extraspecial(c.p, c.kind);
  EXPECT_EQ(g->order(), c.p * c.p * c.p);
  EXPECT_EQ(g->degree(), c.p * c.p);
  EXPECT_EQ(exponent(*g), c.exponent);
  auto z = center(g);
  EXPECT_EQ(z.order(), c.p);
  EXPECT_EQ(derived_subgroup(g), z);
  EXPECT_EQ(g->classes().count(), c.p * c.p + c.p - 1);
}

INSTANTIATE_TEST_SUITE_P(Corpus, Extraspecial,
                         ::testing::Values(ExtraspecialCase{3, ExtraspecialKind::ExponentP, 3},
                                           ExtraspecialCase{3, ExtraspecialKind::ExponentP2, 9},
                                           ExtraspecialCase{5, ExtraspecialKind::ExponentP, 5},
                                           ExtraspecialCase{5, ExtraspecialKind::ExponentP2, 25}));

TEST(Families, ExtraspecialRejectsUnsupportedPrimes) {
  EXPECT_THROW(extraspecial(2, ExtraspecialKind::ExponentP), UnsupportedPrime);
  EXPECT_THROW(extraspecial(7, ExtraspecialKind::ExponentP), UnsupportedPrime);
  EXPECT_THROW(extraspecial(9, ExtraspecialKind::ExponentP2), UnsupportedPrime);
}

TEST(Families, WreathOfOrder81) {
  auto w = wreath_cyclic(3);
  EXPECT_EQ(w.group->order(), 81u);
  EXPECT_EQ(w.group->degree(), 9u);
  EXPECT_EQ(w.base.order(), 27u);
  EXPECT_EQ(w.base.index(), 3u);
  EXPECT_TRUE(is_normal(*w.group, w.base));
  EXPECT_TRUE(derived_subgroup(w.base.as_group()).is_trivial());
  EXPECT_EQ(quotient_group(w.group, derived_subgroup(w.group)).group->order(), 9u);
}

TEST(Families, WreathOfOrder8IsDihedral) {
  auto w = wreath_cyclic(2);
  EXPECT_EQ(w.group->order(), 8u);
  EXPECT_EQ(exponent(*w.group), 4u);
  EXPECT_EQ(center(w.group).order(), 2u);
  EXPECT_EQ(w.group->classes().count(), 5u);
  // Dihedral rather than quaternion: five involutions.
  std::size_t involutions = 0;
  for (ElementIndex e = 0; e < 8; ++e) involutions += w.group->element_order(e) == 2;
  EXPECT_EQ(involutions, 5u);
}

TEST(Families, WreathLimits) {
  EXPECT_THROW(wreath_cyclic(5), UnsupportedPrime);
  EXPECT_THROW(wreath_cyclic(7, true), UnsupportedPrime);
  EXPECT_THROW(wreath_cyclic(4), UnsupportedPrime);
}

TEST(Products, OrdersEmbeddingsAndClasses) {
  auto a = extraspecial(3, ExtraspecialKind::ExponentP);
  auto b = cyclic(2);
  auto dp = direct_product(a, b);
  EXPECT_EQ(dp.group->order(), 54u);
  EXPECT_EQ(dp.group->classes().count(), 22u);
  for (ElementIndex x = 0; x < a->order(); ++x) {
    for (ElementIndex y = 0; y < a->order(); ++y) {
      EXPECT_EQ(dp.group->mult(dp.embed_left[x], dp.embed_left[y]), dp.embed_left[a->mult(x, y)]);
    }
  }
  for (ElementIndex e = 0; e < dp.group->order(); ++e) {
    EXPECT_EQ(dp.group->mult(dp.embed_left[dp.left_component[e]], dp.embed_right[dp.right_component[e]]),
              e);
  }
  auto with_trivial = direct_product(a, cyclic(1));
  EXPECT_EQ(with_trivial.group->order(), a->order());
  EXPECT_EQ(with_trivial.group->classes().count(), a->classes().count());
  EXPECT_THROW(direct_product(a, a, 500), ClosureTooLarge);
}

TEST(Products, SquareOfExtraspecial) {
  auto built = build_group("extraspecial:p=3,exp=p*extraspecial:p=3,exp=p");
  EXPECT_EQ(built.group->order(), 729u);
  EXPECT_EQ(built.group->classes().count(), 121u);
  ASSERT_TRUE(built.product);
  EXPECT_EQ(built.left->group->order(), 27u);
}

TEST(Parser, Dispatch) {
  EXPECT_EQ(build_group("extraspecial:p=3,exp=p").group->order(), 27u);
  EXPECT_EQ(build_group("wreath:p=3").group->order(), 81u);
  auto c3 = build_group("perm:degree=3;gens=(0 1 2)");
  EXPECT_EQ(c3.group->order(), 3u);
  EXPECT_EQ(build_group("abelian:2x3x5").group->order(), 30u);
  EXPECT_EQ(build_group("cyclic:4*cyclic:3*cyclic:5").group->order(), 60u);
  auto w = build_group("wreath:p=3");
  ASSERT_TRUE(w.wreath_base);
  EXPECT_EQ(w.wreath_base->order(), 27u);
}

TEST(Parser, ProductIsLeftAssociative) {
  auto spec = parse_group_spec("cyclic:2*cyclic:3*cyclic:5");
  const auto& outer = std::get<GroupSpec::Product>(spec.kind);
  EXPECT_TRUE(std::holds_alternative<GroupSpec::Product>(outer.left->kind));
  EXPECT_TRUE(std::holds_alternative<GroupSpec::Cyclic>(outer.right->kind));
}

TEST(Parser, CanonicalTextRoundTrips) {
  for (auto text : {"cyclic:9", "abelian:3x3", "extraspecial:p=5,exp=p2", "wreath:p=2",
                    "perm:degree=4;gens=(0 1 2 3);(0 1)", "extraspecial:p=3,exp=p*cyclic:2",
                    "perm:degree=8;gens=(0 1 4 5)(2 7 6 3);(0 2 4 6)(1 3 5 7)"}) {
    auto spec = parse_group_spec(text);
    EXPECT_EQ(spec.to_string(), text);
    EXPECT_EQ(parse_group_spec(spec.to_string()).to_string(), spec.to_string());
  }
  EXPECT_EQ(parse_group_spec("  cyclic:9 ").to_string(), "cyclic:9");
}

TEST(Parser, ErrorsCarryPositions) {
  auto position_of = [](std::string_view text) -> std::size_t {
    try {
      parse_group_spec(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("bogus:3"), 0u);
  EXPECT_EQ(position_of("cyclic:x"), 7u);
  EXPECT_EQ(position_of("extraspecial:p=3,exp=q"), 21u);
  EXPECT_GT(position_of("cyclic:3*"), 8u - 1);
  EXPECT_THROW(parse_group_spec("perm:degree=3;gens=(0 1 3)"), UsageError);
  EXPECT_THROW(parse_group_spec("wreath:p="), ParseError);
  EXPECT_THROW(build_group("cyclic:3 cyclic:3"), ParseError);
}
