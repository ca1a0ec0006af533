#include <gtest/gtest.h>

#include <random>

#include "charforge/charops.hpp"
#include "charforge/constructions.hpp"
#include "charforge/error.hpp"

using namespace charforge;

namespace {

struct Fixture {
  BuiltGroup built;
  CharacterTable table;
  explicit Fixture(std::string_view spec)
      : built(build_group(spec)), table(character_table(built)) {}
  const GroupPtr& group() const { return built.group; }
  ClassFunction row(std::size_t i) const { return ClassFunction::from_row(table, i); }
  std::vector<std::size_t> rows_of_degree(std::uint64_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table.degree(i) == d) out.push_back(i);
    }
    return out;
  }
};

const Fixture& es27() {
  static const Fixture f("extraspecial:p=3,exp=p");
  return f;
}

const Fixture& wreath81() {
  static const Fixture f("wreath:p=3");
  return f;
}

/// Abelian maximal subgroup of index p.
Subgroup abelian_maximal(const GroupPtr& g) {
  for (auto& h : maximal_subgroups_index_p(g)) {
    if (derived_subgroup(h.as_group()).is_trivial()) return h;
  }
  throw std::runtime_error("no abelian maximal subgroup");
}

const char* const kPGroups[] = {
    "wreath:p=2",
    "perm:degree=8;gens=(0 1 4 5)(2 7 6 3);(0 2 4 6)(1 3 5 7)",
    "extraspecial:p=3,exp=p",
    "extraspecial:p=3,exp=p2",
    "extraspecial:p=5,exp=p",
    "extraspecial:p=5,exp=p2",
    "wreath:p=3",
};

}  // namespace

TEST(Product, TrivialAndDegrees) {
  const auto& f = es27();
  auto one = ClassFunction::trivial(f.group());
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    EXPECT_EQ(product(f.row(i), one), f.row(i));
    for (std::size_t j = 0; j < f.table.size(); ++j) {
      EXPECT_EQ(product(f.row(i), f.row(j)).degree(), f.table.degree(i) * f.table.degree(j));
    }
  }
}

TEST(Product, SelfConjugateVanishesOffCenter) {
  const auto& f = es27();
  auto z = center(f.group());
  const auto& cc = f.group()->classes();
  for (auto phi : f.rows_of_degree(3)) {
    auto h = product(f.row(phi), conjugate_char(f.row(phi)));
    for (ClassIndex c = 0; c < cc.count(); ++c) {
      EXPECT_EQ(h[c].is_zero(), !z.contains(cc.representatives[c]));
    }
  }
}

TEST(Product, RejectsMixedGroups) {
  EXPECT_THROW(product(es27().row(1), wreath81().row(1)), GroupMismatch);
  EXPECT_THROW(inner_product(es27().row(1), wreath81().row(1)), GroupMismatch);
  EXPECT_THROW(decompose(es27().row(1), wreath81().table), GroupMismatch);
}

TEST(Conjugate, Behaviour) {
  const auto& f = es27();
  auto deg3 = f.rows_of_degree(3);
  ASSERT_EQ(deg3.size(), 2u);
  auto conj = conjugate_char(f.row(deg3[0]));
  EXPECT_EQ(conj, f.row(deg3[1]));
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    EXPECT_EQ(conjugate_char(conjugate_char(f.row(i))), f.row(i));
  }
  const auto& d8 = *new Fixture("wreath:p=2");
  for (std::size_t i = 0; i < d8.table.size(); ++i) EXPECT_EQ(conjugate_char(d8.row(i)), d8.row(i));
  delete &d8;
}

TEST(InnerProduct, Orthonormality) {
  for (const auto* f : {&es27(), &wreath81()}) {
    for (std::size_t i = 0; i < f->table.size(); ++i) {
      for (std::size_t j = 0; j < f->table.size(); ++j) {
        EXPECT_EQ(inner_product(f->row(i), f->row(j)), Rational(i == j ? 1 : 0));
      }
    }
  }
  const auto& f = es27();
  auto phi = f.row(f.rows_of_degree(3)[0]);
  auto h = product(phi, conjugate_char(phi));
  EXPECT_EQ(inner_product(h, ClassFunction::trivial(f.group())), 1);
  for (auto mu : f.rows_of_degree(1)) EXPECT_EQ(inner_product(h, f.row(mu)), 1);
}

TEST(Decompose, ExtraspecialProducts) {
  const auto& f = es27();
  auto deg3 = f.rows_of_degree(3);
  auto phi = f.row(deg3[0]);
  auto d = decompose(product(phi, conjugate_char(phi)), f.table);
  EXPECT_EQ(d.eta(), 9u);
  for (const auto& c : d.constituents) {
    EXPECT_EQ(f.table.degree(c.row), 1u);
    EXPECT_EQ(c.multiplicity, 1u);
  }
  auto sq = decompose(product(phi, phi), f.table);
  ASSERT_EQ(sq.eta(), 1u);
  EXPECT_EQ(f.table.degree(sq.constituents[0].row), 3u);
  EXPECT_EQ(sq.constituents[0].multiplicity, 3u);
}

TEST(Decompose, RejectsNonCharacters) {
  const auto& f = es27();
  EXPECT_THROW(decompose(f.row(9) * Rational(1, 2), f.table), NotACharacter);
  auto diff = f.row(1) * Rational(-1);
  EXPECT_THROW(decompose(diff, f.table), NotACharacter);
  EXPECT_THROW(ClassFunction::from_row(f.table, 99), RowOutOfRange);
  EXPECT_THROW((f.row(9) * Rational(1, 2)).degree(), NotACharacter);
}

TEST(Decompose, RecomposesEveryRowProduct) {
  for (auto spec : {"wreath:p=2", "extraspecial:p=3,exp=p2", "wreath:p=3",
                    "perm:degree=4;gens=(0 1 2 3);(0 1)"}) {
    Fixture f(spec);
    for (std::size_t i = 0; i < f.table.size(); ++i) {
      for (std::size_t j = i; j < f.table.size(); ++j) {
        auto h = product(f.row(i), f.row(j));
        auto d = decompose(h, f.table);
        EXPECT_EQ(recompose(d, f.table), h) << spec;
        std::uint64_t degree = 0;
        for (const auto& c : d.constituents) degree += c.multiplicity * f.table.degree(c.row);
        EXPECT_EQ(degree, h.degree());
      }
    }
  }
}

TEST(Induction, TrivialCharacterDegree) {
  const auto& f = wreath81();
  for (const auto& h : maximal_subgroups_index_p(f.group())) {
    auto ind = induce(f.group(), h, ClassFunction::trivial(h.as_group()));
    EXPECT_EQ(ind.degree(), h.index());
  }
  auto z = center(f.group());
  EXPECT_EQ(induce(f.group(), z, ClassFunction::trivial(z.as_group())).degree(), 27u);
}

TEST(Induction, FrobeniusReciprocity) {
  std::mt19937 rng(5);
  for (const auto* f : {&es27(), &wreath81()}) {
    std::vector<Subgroup> subgroups = maximal_subgroups_index_p(f->group());
    subgroups.push_back(center(f->group()));
    for (const auto& h : subgroups) {
      auto h_table = character_table(h.as_group());
      std::uniform_int_distribution<std::size_t> pick_h(0, h_table.size() - 1);
      std::uniform_int_distribution<std::size_t> pick_g(0, f->table.size() - 1);
      for (int k = 0; k < 6; ++k) {
        auto lambda = ClassFunction::from_row(h_table, pick_h(rng));
        auto chi = f->row(pick_g(rng));
        EXPECT_EQ(inner_product(induce(f->group(), h, lambda), chi),
                  inner_product(lambda, restrict(chi, h)));
      }
    }
  }
}

TEST(Induction, RejectsForeignSubgroups) {
  const auto& f = es27();
  auto other = center(wreath81().group());
  EXPECT_THROW(induce(f.group(), other, ClassFunction::trivial(other.as_group())), SubgroupMismatch);
  auto z = center(f.group());
  EXPECT_THROW(induce(f.group(), z, ClassFunction::trivial(f.group())), SubgroupMismatch);
  EXPECT_THROW(restrict(f.row(1), other), SubgroupMismatch);
}

TEST(Restriction, WholeGroupAndMaximalAbelian) {
  const auto& f = es27();
  auto whole = whole_group(f.group());
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    auto r = restrict(f.row(i), whole);
    ASSERT_EQ(r.values().size(), f.table.classes().count());
    for (std::size_t c = 0; c < r.values().size(); ++c) {
      EXPECT_EQ(r.at_element(whole.to_local(f.group()->classes().representatives[c])),
                f.table.value(i, static_cast<ClassIndex>(c)));
    }
  }
  auto h = abelian_maximal(f.group());
  auto lin = linear_characters(h.as_group());
  for (auto phi : f.rows_of_degree(3)) {
    auto r = restrict(f.row(phi), h);
    std::size_t distinct = 0;
    for (const auto& xi : lin) {
      auto m = inner_product(r, xi);
      EXPECT_TRUE(m == 0 || m == 1);
      distinct += m == 1;
    }
    EXPECT_EQ(distinct, 3u);
  }
}

TEST(Restriction, CentralRestrictionIsAMultipleOfALinear) {
  for (auto spec : kPGroups) {
    Fixture f(spec);
    const auto p = *p_group_prime(*f.group());
    auto z = center(f.group());
    auto lin = linear_characters(z.as_group());
    for (auto chi : f.rows_of_degree(p)) {
      auto r = restrict(f.row(chi), z);
      std::size_t hits = 0;
      for (const auto& xi : lin) {
        if (r == xi * Rational(static_cast<long>(p))) ++hits;
      }
      EXPECT_EQ(hits, 1u) << spec;
    }
  }
}

TEST(InducedProduct, MatchesProductOfCharacters) {
  for (auto spec : {"extraspecial:p=3,exp=p", "wreath:p=3", "extraspecial:p=5,exp=p2"}) {
    Fixture f(spec);
    const auto p = *p_group_prime(*f.group());
    MonomialSourceFinder finder(f.group());
    for (auto chi : f.rows_of_degree(p)) {
      auto src = finder.find(f.row(chi));
      for (std::size_t psi = 0; psi < f.table.size(); ++psi) {
        auto lhs = induce(f.group(), src.subgroup, product(src.linear, restrict(f.row(psi), src.subgroup)));
        EXPECT_EQ(lhs, product(f.row(chi), f.row(psi))) << spec;
      }
    }
  }
}

TEST(Kernels, TrivialAndFaithful) {
  const auto& f = es27();
  EXPECT_EQ(kernel(ClassFunction::trivial(f.group())).order(), 27u);
  for (auto phi : f.rows_of_degree(3)) {
    EXPECT_TRUE(is_faithful(f.row(phi)));
    EXPECT_EQ(character_center(f.row(phi)), center(f.group()));
  }
  for (auto mu : f.rows_of_degree(1)) {
    EXPECT_FALSE(is_faithful(f.row(mu)));
    EXPECT_EQ(character_center(f.row(mu)).order(), 27u);
  }
}

TEST(Kernels, ProductKernelContainsIntersection) {
  const auto& f = wreath81();
  for (std::size_t i = 0; i < f.table.size(); ++i) {
    auto ki = kernel(f.row(i));
    for (std::size_t j = i; j < f.table.size(); ++j) {
      auto kj = kernel(f.row(j));
      auto kp = kernel(product(f.row(i), f.row(j)));
      for (auto x : ki.members()) {
        if (kj.contains(x)) EXPECT_TRUE(kp.contains(x));
      }
    }
  }
}

TEST(Lifting, LinearCharacters) {
  const auto& f = es27();
  auto q = quotient_group(f.group(), center(f.group()));
  auto qt = character_table(q.group);
  EXPECT_EQ(lift_character(q, ClassFunction::trivial(q.group)), ClassFunction::trivial(f.group()));
  const auto z_group = center(f.group());
  for (std::size_t i = 0; i < qt.size(); ++i) {
    auto lifted = lift_character(q, ClassFunction::from_row(qt, i));
    auto k = kernel(lifted);
    for (auto z : z_group.members()) EXPECT_TRUE(k.contains(z));
  }
  EXPECT_THROW(lift_character(q, f.row(0)), GroupMismatch);
  for (const auto* fx : {&es27(), &wreath81()}) {
    auto lin = linear_characters(fx->group());
    auto linear_rows = fx->rows_of_degree(1);
    ASSERT_EQ(lin.size(), linear_rows.size());
    for (std::size_t i = 0; i < lin.size(); ++i) EXPECT_EQ(lin[i], fx->row(linear_rows[i]));
  }
  EXPECT_EQ(linear_characters(es27().group()).size(), 9u);
}

TEST(MonomialSources, InduceBackOnEveryPGroup) {
  for (auto spec : kPGroups) {
    Fixture f(spec);
    const auto p = *p_group_prime(*f.group());
    MonomialSourceFinder finder(f.group());
    for (auto chi : f.rows_of_degree(p)) {
      auto src = finder.find(f.row(chi));
      EXPECT_EQ(src.subgroup.index(), p);
      EXPECT_TRUE(is_normal(*f.group(), src.subgroup));
      EXPECT_EQ(src.linear.degree(), 1u);
      EXPECT_EQ(induce(f.group(), src.subgroup, src.linear), f.row(chi)) << spec;
    }
  }
}

TEST(MonomialSources, ExtraspecialSourcesAreAbelianOfOrderNine) {
  const auto& f = es27();
  for (auto phi : f.rows_of_degree(3)) {
    auto src = monomial_source(f.group(), f.row(phi));
    EXPECT_EQ(src.subgroup.order(), 9u);
    EXPECT_TRUE(derived_subgroup(src.subgroup.as_group()).is_trivial());
  }
}

TEST(MonomialSources, WreathSourceLiesOverTheBase) {
  auto w = wreath_cyclic(3);
  auto t = character_table(w.group);
  const auto& base = w.base;
  for (const auto& lambda : linear_characters(base.as_group())) {
    auto chi = induce(w.group, base, lambda);
    if (inner_product(chi, chi) != 1) continue;
    auto src = monomial_source(w.group, chi);
    EXPECT_EQ(induce(w.group, src.subgroup, src.linear), chi);
    // The base itself carries a source in the orbit of lambda.
    auto r = restrict(chi, base);
    EXPECT_EQ(inner_product(r, lambda), 1);
    if (src.subgroup == base) {
      // Compare as functions on the parent's elements, since the source
      // subgroup carries its own local numbering.
      bool in_orbit = false;
      for (ElementIndex shift = 0; shift < w.group->order() && !in_orbit; ++shift) {
        bool same = true;
        for (auto n : base.members()) {
          auto conj = w.group->conjugate(n, shift);
          if (src.linear.at_element(src.subgroup.to_local(n)) != lambda.at_element(base.to_local(conj))) {
            same = false;
            break;
          }
        }
        in_orbit = same;
      }
      EXPECT_TRUE(in_orbit);
    }
  }
}

TEST(MonomialSources, Errors) {
  const auto& f = es27();
  EXPECT_THROW(monomial_source(f.group(), f.row(1)), HypothesisViolation);
  auto mixed = build_group("extraspecial:p=3,exp=p*cyclic:2").group;
  EXPECT_THROW(MonomialSourceFinder{mixed}, HypothesisViolation);
}

TEST(Inertia, Stabilizers) {
  auto w = wreath_cyclic(3);
  const auto& base = w.base;
  auto lin = linear_characters(base.as_group());
  EXPECT_EQ(inertia_group(w.group, base, lin[0]).order(), 81u);
  auto t = character_table(w.group);
  std::size_t nontrivial_orbits = 0;
  for (std::size_t k = 1; k < lin.size(); ++k) {
    auto inertia = inertia_group(w.group, base, lin[k]);
    EXPECT_TRUE(inertia.order() == 27u || inertia.order() == 81u);
    for (auto x : base.members()) EXPECT_TRUE(inertia.contains(x));
    auto induced = induce(w.group, base, lin[k]);
    if (inertia == base) {
      ++nontrivial_orbits;
      EXPECT_EQ(inner_product(induced, induced), 1);
    }
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (inner_product(restrict(ClassFunction::from_row(t, i), base), lin[k]) != 0) {
        EXPECT_EQ(t.degree(i) % inertia.index(), 0u);
      }
    }
  }
  EXPECT_EQ(nontrivial_orbits, 24u);
  auto g = es27().group();
  std::vector<ElementIndex> one{g->generator_indices()[0]};
  auto not_normal = subgroup_generated(g, one);
  EXPECT_THROW(inertia_group(g, not_normal, ClassFunction::trivial(not_normal.as_group())), NotNormal);
}
