#include <gtest/gtest.h>

#include "charforge/constructions.hpp"
#include "charforge/error.hpp"
#include "charforge/harness.hpp"

using namespace charforge;

namespace {

struct Loaded {
  BuiltGroup built;
  CharacterTable table;
  explicit Loaded(std::string_view spec) : built(build_group(spec)), table(character_table(built)) {}

  std::vector<std::size_t> rows_of_degree(std::uint64_t d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < table.size(); ++i) {
      if (table.degree(i) == d) out.push_back(i);
    }
    return out;
  }
};

const Loaded& es27() {
  static const Loaded l("extraspecial:p=3,exp=p");
  return l;
}

const Loaded& wreath81() {
  static const Loaded l("wreath:p=3");
  return l;
}

struct CorpusEntry {
  const char* spec;
  std::uint64_t p;
};

const CorpusEntry kCorpus[] = {
    {"wreath:p=2", 2},
    {"perm:degree=8;gens=(0 1 4 5)(2 7 6 3);(0 2 4 6)(1 3 5 7)", 2},
    {"extraspecial:p=3,exp=p", 3},
    {"extraspecial:p=3,exp=p2", 3},
    {"extraspecial:p=5,exp=p", 5},
    {"extraspecial:p=5,exp=p2", 5},
    {"wreath:p=3", 3},
    {"extraspecial:p=3,exp=p*cyclic:2", 3},
};

std::size_t conjugate_row(const CharacterTable& t, std::size_t i) {
  std::vector<Cyclotomic> v;
  for (const auto& x : t.row(i)) v.push_back(x.conjugate());
  return *t.find_row(v);
}

}  // namespace

TEST(Classify, ExtraspecialProducts) {
  const auto& l = es27();
  auto deg3 = l.rows_of_degree(3);
  ASSERT_EQ(deg3.size(), 2u);
  auto phi = deg3[0];
  auto phi_bar = conjugate_row(l.table, phi);
  EXPECT_NE(phi, phi_bar);

  auto c = classify_product(l.table, phi, phi_bar, 3);
  EXPECT_EQ(c.tag, TheoremCase::SumOfLinears);
  EXPECT_EQ(c.eta, 9u);
  EXPECT_EQ(c.degree_histogram, (std::map<std::uint64_t, std::size_t>{{1, 9}}));

  auto sq = classify_product(l.table, phi, phi, 3);
  EXPECT_EQ(sq.tag, TheoremCase::AllDegreeP);
  EXPECT_EQ(sq.eta, 1u);
  ASSERT_EQ(sq.constituents.constituents.size(), 1u);
  EXPECT_EQ(sq.constituents.constituents[0].multiplicity, 3u);
  EXPECT_EQ(case_label(sq.tag), "iii");
  EXPECT_EQ(case_label(c.tag), "i");
}

TEST(Classify, HypothesisChecks) {
  const auto& l = es27();
  auto phi = l.rows_of_degree(3)[0];
  EXPECT_THROW(classify_product(l.table, 1, phi, 3), HypothesisViolation);
  EXPECT_THROW(classify_product(l.table, phi, 0, 3), HypothesisViolation);
  EXPECT_THROW(classify_product(l.table, phi, phi, 2), HypothesisViolation);
  EXPECT_THROW(classify_product(l.table, 99, phi, 3), RowOutOfRange);

  Loaded s3("perm:degree=3;gens=(0 1 2);(0 1)");
  auto two = s3.rows_of_degree(2);
  ASSERT_EQ(two.size(), 1u);
  EXPECT_THROW(classify_product(s3.table, two[0], two[0], 2), HypothesisViolation);
  ProductContext ctx(s3.table);
  EXPECT_FALSE(ctx.nilpotent());
  EXPECT_THROW(verify_theorem_A(ctx, 2), HypothesisViolation);

  Loaded s4("perm:degree=4;gens=(0 1 2 3);(0 1)");
  ProductContext ctx4(s4.table);
  EXPECT_THROW(verify_self_product_lemma(ctx4, s4.rows_of_degree(3)[0]), HypothesisViolation);
}

TEST(Sweep, ExtraspecialPairCounts) {
  ProductContext ctx(es27().table);
  auto report = verify_theorem_A(ctx, 3, "es27");
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.ordered_pairs, 4u);
  EXPECT_EQ(report.pairs.size(), 3u);
  std::size_t folded = 0;
  for (const auto& pr : report.pairs) {
    folded += pr.ordered;
    ASSERT_TRUE(pr.result);
  }
  EXPECT_EQ(folded, 4u);
}

TEST(Sweep, WreathCaseProfile) {
  ProductContext ctx(wreath81().table);
  auto report = verify_theorem_A(ctx, 3, "wreath81");
  ASSERT_TRUE(report.pass());
  EXPECT_EQ(report.ordered_pairs, 64u);
  std::map<std::pair<TheoremCase, std::size_t>, std::size_t> profile;
  for (const auto& pr : report.pairs) profile[{pr.result->tag, pr.result->eta}] += pr.ordered;
  // Frozen from the sweep and cross-checked against the Clifford count on the base.
  std::map<std::pair<TheoremCase, std::size_t>, std::size_t> expected{
      {{TheoremCase::SumOfLinears, 9}, 2},
      {{TheoremCase::MixedLinearAndDegreeP, 5}, 18},
      {{TheoremCase::AllDegreeP, 1}, 2},
      {{TheoremCase::AllDegreeP, 2}, 18},
      {{TheoremCase::AllDegreeP, 3}, 24},
  };
  EXPECT_EQ(profile, expected);
}

TEST(Sweep, DihedralIsAllLinear) {
  Loaded d8("wreath:p=2");
  ProductContext ctx(d8.table);
  auto report = verify_theorem_A(ctx, 2);
  ASSERT_TRUE(report.pass());
  EXPECT_EQ(report.ordered_pairs, 1u);
  EXPECT_EQ(report.pairs[0].result->tag, TheoremCase::SumOfLinears);
  EXPECT_EQ(report.pairs[0].result->eta, 4u);
}

TEST(Sweep, CorpusBoundHolds) {
  for (const auto& entry : kCorpus) {
    Loaded l(entry.spec);
    ProductContext ctx(l.table);
    auto report = verify_theorem_A(ctx, entry.p);
    EXPECT_TRUE(report.pass()) << entry.spec;
    const std::uint64_t p = entry.p;
    for (const auto& pr : report.pairs) {
      ASSERT_TRUE(pr.result) << entry.spec;
      const auto& r = *pr.result;
      std::uint64_t degree = 0;
      for (const auto& c : r.constituents.constituents) {
        degree += c.multiplicity * l.table.degree(c.row);
      }
      EXPECT_EQ(degree, l.table.degree(pr.chi) * l.table.degree(pr.psi));
      if (r.tag == TheoremCase::AllDegreeP) {
        EXPECT_TRUE(r.eta == 1 || (2 * r.eta >= p + 1 && r.eta <= p)) << entry.spec << " eta " << r.eta;
      }
    }
  }
}

TEST(Sweep, DeterministicAcrossJobCounts) {
  ProductContext ctx(wreath81().table);
  auto a = verify_theorem_A(ctx, 3, "w", 1);
  auto b = verify_theorem_A(ctx, 3, "w", 3);
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t i = 0; i < a.pairs.size(); ++i) {
    EXPECT_EQ(a.pairs[i].chi, b.pairs[i].chi);
    EXPECT_EQ(a.pairs[i].psi, b.pairs[i].psi);
    EXPECT_EQ(a.pairs[i].result->tag, b.pairs[i].result->tag);
    EXPECT_EQ(a.pairs[i].result->constituents, b.pairs[i].result->constituents);
  }
}

TEST(Routes, ModularMatchesExact) {
  for (const auto* l : {&es27(), &wreath81()}) {
    ProductContext exact(l->table, ProductContext::Route::Exact);
    ProductContext modular(l->table, ProductContext::Route::Modular);
    for (std::size_t i = 0; i < l->table.size(); ++i) {
      for (std::size_t j = i; j < l->table.size(); ++j) {
        EXPECT_EQ(exact.decompose_product(i, j), modular.decompose_product(i, j));
      }
    }
  }
}

TEST(Routes, LargeProductUsesTensorRows) {
  Loaded qq("extraspecial:p=3,exp=p*extraspecial:p=3,exp=p");
  ASSERT_TRUE(qq.table.factor_rows());
  ProductContext ctx(qq.table);
  ProductContext exact(qq.table, ProductContext::Route::Exact);
  auto deg3 = qq.rows_of_degree(3);
  for (std::size_t k = 0; k + 1 < deg3.size(); k += 7) {
    EXPECT_EQ(ctx.decompose_product(deg3[k], deg3[k + 1]), exact.decompose_product(deg3[k], deg3[k + 1]));
  }
  auto report = verify_theorem_A(ctx, 3, "QxQ");
  EXPECT_TRUE(report.pass());
  EXPECT_EQ(report.ordered_pairs, 1296u);
  EXPECT_EQ(report.pairs.size(), 666u);
}

TEST(SelfProduct, CorpusShapes) {
  for (const auto& entry : kCorpus) {
    Loaded l(entry.spec);
    ProductContext ctx(l.table);
    for (auto chi : l.rows_of_degree(entry.p)) {
      EXPECT_NO_THROW(verify_self_product_lemma(ctx, chi)) << entry.spec << " row " << chi;
    }
  }
  ProductContext ctx(es27().table);
  for (auto chi : es27().rows_of_degree(3)) {
    EXPECT_EQ(verify_self_product_lemma(ctx, chi), SelfProductShape::AllLinear);
  }
  ProductContext wctx(wreath81().table);
  std::map<SelfProductShape, std::size_t> shapes;
  for (auto chi : wreath81().rows_of_degree(3)) ++shapes[verify_self_product_lemma(wctx, chi)];
  EXPECT_EQ(shapes[SelfProductShape::AllLinear], 2u);
  EXPECT_EQ(shapes[SelfProductShape::LinearAndDegreeP], 6u);
  EXPECT_THROW(verify_self_product_lemma(ctx, 0), HypothesisViolation);
}

TEST(LinearShift, ExtraspecialAndVacuousCase) {
  const auto& l = es27();
  ProductContext ctx(l.table);
  auto phi = l.rows_of_degree(3)[0];
  auto r = verify_linear_shift_lemma(ctx, phi, conjugate_row(l.table, phi));
  EXPECT_TRUE(r.pass);
  EXPECT_EQ(r.linear_constituents, 9u);
  auto vacuous = verify_linear_shift_lemma(ctx, phi, phi);
  EXPECT_TRUE(vacuous.pass);
  EXPECT_EQ(vacuous.linear_constituents, 0u);
}

TEST(LinearShift, HoldsOnEveryCorpusPair) {
  for (const auto& entry : kCorpus) {
    Loaded l(entry.spec);
    ProductContext ctx(l.table);
    for (auto chi : l.rows_of_degree(entry.p)) {
      for (std::size_t psi = 0; psi < l.table.size(); ++psi) {
        auto r = verify_linear_shift_lemma(ctx, chi, psi);
        EXPECT_TRUE(r.pass) << entry.spec << ": " << r.witness;
        // A linear constituent forces psi = conj(chi) * alpha, so psi(1) = chi(1).
        if (r.linear_constituents > 0) EXPECT_EQ(l.table.degree(psi), entry.p);
      }
    }
  }
}

TEST(Spectrum, Values) {
  auto keys = [](const std::map<std::size_t, EtaWitness>& m) {
    std::vector<std::size_t> out;
    for (const auto& [eta, w] : m) out.push_back(eta);
    return out;
  };
  ProductContext es(es27().table);
  auto s = eta_spectrum(es, 3);
  EXPECT_EQ(keys(s), (std::vector<std::size_t>{1, 9}));
  EXPECT_EQ(s.at(1).ordered_pairs + s.at(9).ordered_pairs, 4u);

  Loaded es125("extraspecial:p=5,exp=p");
  ProductContext ctx125(es125.table);
  EXPECT_EQ(keys(eta_spectrum(ctx125, 5)), (std::vector<std::size_t>{1, 25}));

  Loaded d8("wreath:p=2");
  ProductContext ctx8(d8.table);
  EXPECT_EQ(keys(eta_spectrum(ctx8, 2)), (std::vector<std::size_t>{4}));

  Loaded c9("abelian:3x3");
  ProductContext ctx9(c9.table);
  EXPECT_TRUE(eta_spectrum(ctx9, 3).empty());

  ProductContext w(wreath81().table);
  auto ws = eta_spectrum(w, 3);
  EXPECT_EQ(keys(ws), (std::vector<std::size_t>{1, 2, 3, 5, 9}));
  std::size_t total = 0;
  for (const auto& [eta, wit] : ws) total += wit.ordered_pairs;
  EXPECT_EQ(total, 64u);
}

TEST(Nilpotent, ProductWithCyclicFactor) {
  Loaded l("extraspecial:p=3,exp=p*cyclic:2");
  ASSERT_TRUE(l.table.factor_rows());
  ProductContext ctx(l.table);
  ProductContext es(es27().table);
  const auto& factors = *l.table.factor_rows();
  for (auto a : l.rows_of_degree(3)) {
    for (auto b : l.rows_of_degree(3)) {
      auto big = classify_product(ctx, a, b, 3);
      auto small = classify_product(es, factors[a].left, factors[b].left, 3);
      EXPECT_EQ(big.tag, small.tag);
      EXPECT_EQ(big.eta, small.eta);
    }
  }
}

TEST(Examples, PrimeThree) {
  auto report = reproduce_examples(3);
  ASSERT_EQ(report.checks.size(), 4u);
  std::map<std::string, bool> outcome;
  for (const auto& c : report.checks) outcome[c.id] = c.pass;
  EXPECT_TRUE(outcome.at("i"));
  EXPECT_TRUE(outcome.at("iii-a"));
  EXPECT_TRUE(outcome.at("iv"));
  // With lambda^2 = conj(lambda) the two induced characters are conjugate,
  // so their product has a linear constituent and cannot be three degree-3
  // irreducibles.
  EXPECT_FALSE(outcome.at("iii-b"));
  EXPECT_FALSE(report.pass());
  EXPECT_THROW(reproduce_examples(5), UnsupportedPrime);
  EXPECT_THROW(reproduce_examples(7, true), UnsupportedPrime);
}
