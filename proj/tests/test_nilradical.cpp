#include <gtest/gtest.h>

#include "flagflux/errors.hpp"
#include "flagflux/isomorphism.hpp"
#include "flagflux/nilradical.hpp"
#include "oracles.hpp"

using namespace flagflux;

namespace {

std::vector<std::vector<int>> all_thetas(int rank) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << rank); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < rank; ++i)
      if (mask & (1u << i)) theta.push_back(i + 1);
    out.push_back(theta);
  }
  return out;
}

}  // namespace

TEST(Nilradical, MaximalFlagA2) {
  const Nilradical nil = nilradical_presentation(FlagSpec{"A", 2, {}});
  EXPECT_EQ(print_malcev(nil.presentation), "(0,0,-e^{12})");
  ASSERT_EQ(nil.legend.size(), 3u);
  EXPECT_EQ(nil.legend[2].unit, (std::pair<int, int>{1, 3}));
}

TEST(Nilradical, MaximalFlagA3RootSpaceBasis) {
  const Nilradical nil = nilradical_presentation(FlagSpec{"A", 3, {}});
  EXPECT_EQ(print_malcev(nil.presentation),
            "(0,0,0,-e^{12},-e^{23},-e^{15}+e^{34})");
}

TEST(Nilradical, MaximalFlagA3SharesInvariantsWithReferenceTuple) {
  // The reference tuple has [e1,[e1,e2]] != 0, which no root-space basis of
  // sl(4) can produce (2a1 + a2 is not a root). Only the invariants agree,
  // and no signed permutation relates the two presentations.
  const auto ours = nilradical_presentation(FlagSpec{"A", 3, {}}).presentation;
  const auto reference = parse_malcev("(0,0,0,-e^{12},-e^{23},-e^{14}+e^{35})");
  EXPECT_EQ(fingerprint(ours), fingerprint(reference));
  const IsoResult iso = iso_small(ours, reference);
  EXPECT_FALSE(iso.witness.has_value());
  EXPECT_TRUE(iso.exhausted);
}

TEST(Nilradical, PartialFlagA5MatchesReferenceTupleUpToSignedPermutation) {
  const Nilradical nil = nilradical_presentation(FlagSpec{"A", 5, {1, 3, 5}});
  const auto reference = parse_malcev(
      "(0,0,0,0,0,0,0,0,e^{15}-e^{36},e^{17}-e^{38},e^{46}-e^{25},e^{48}-e^{27})");
  ASSERT_EQ(nil.presentation.dim(), 12);
  const IsoResult iso = iso_small(nil.presentation, reference);
  ASSERT_TRUE(iso.witness.has_value());
  EXPECT_EQ(MalcevPresentation(iso.witness->apply(nil.presentation)), reference);
}

TEST(Nilradical, BracketsLandInLaterSummands) {
  const Nilradical nil = nilradical_presentation(FlagSpec{"A", 5, {1, 3, 5}});
  EXPECT_EQ(nil.summand_slots(1), (std::vector<int>{1, 2, 3, 4}));
  EXPECT_EQ(nil.summand_slots(3), (std::vector<int>{9, 10, 11, 12}));
  for (int k = 1; k <= 12; ++k) {
    const Form& d = nil.presentation.differential(k);
    if (k <= 8) {
      EXPECT_TRUE(d.is_zero()) << k;
      continue;
    }
    for (const auto& [idx, c] : d.terms()) {
      EXPECT_LE(idx[0], 4);
      EXPECT_GE(idx[1], 5);
      EXPECT_LE(idx[1], 8);
    }
  }
}

TEST(Nilradical, UnsupportedSeries) {
  EXPECT_THROW(nilradical_presentation(FlagSpec{"C", 3, {}}), DomainError);
}

TEST(WeylConstants, MatrixUnitBrackets) {
  const WeylConstants w(3);
  const auto t = w.bracket({1, 2}, {2, 4});
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->coefficient, 1);
  EXPECT_EQ(t->unit, (std::pair<int, int>{1, 4}));
  const auto s = w.bracket({2, 4}, {1, 2});
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(s->coefficient, -1);
  EXPECT_FALSE(w.bracket({1, 2}, {3, 4}).has_value());
  EXPECT_FALSE(w.bracket({1, 2}, {1, 3}).has_value());
}

TEST(WeylConstants, JacobiOnTheWholeTable) {
  // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 on strictly upper units of sl(5)
  const int n = 5;
  const WeylConstants w(n - 1);
  std::vector<std::pair<int, int>> units;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) units.emplace_back(i, j);
  auto nested = [&](auto a, auto b, auto c, std::map<std::pair<int, int>, int>& acc) {
    if (auto ab = w.bracket(a, b)) {
      if (auto abc = w.bracket(ab->unit, c)) acc[abc->unit] += ab->coefficient * abc->coefficient;
    }
  };
  for (auto a : units)
    for (auto b : units)
      for (auto c : units) {
        std::map<std::pair<int, int>, int> acc;
        nested(a, b, c, acc);
        nested(b, c, a, acc);
        nested(c, a, b, acc);
        for (const auto& [u, v] : acc) EXPECT_EQ(v, 0);
      }
}

TEST(Jacobi, Examples) {
  EXPECT_TRUE(jacobi_check(parse_malcev("(0,0,-e^{12})")).passed);
  EXPECT_TRUE(jacobi_check(MalcevPresentation::abelian(6)).passed);
  const auto bad = jacobi_check(parse_malcev("(0,0,-e^{12},-e^{13},e^{34})"));
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.first_failure, 5);
  EXPECT_FALSE(bad.residual.is_zero());
}

TEST(Jacobi, BruteForceAgreesWithBracketOracle) {
  // All tuples (0,0,a e^{12}, b e^{13}+c e^{23}, d e^{14}+f e^{24}+g e^{34})
  // with coefficients in {-1,0,1}.
  int failures = 0;
  std::optional<std::string> first_bad;
  for (int code = 0; code < 729; ++code) {
    int rest = code;
    auto next = [&] {
      const int c = rest % 3 - 1;
      rest /= 3;
      return c;
    };
    std::vector<Form> d(5, Form(2));
    d[2].add_term({1, 2}, next());
    d[3].add_term({1, 3}, next());
    d[3].add_term({2, 3}, next());
    d[4].add_term({1, 4}, next());
    d[4].add_term({2, 4}, next());
    d[4].add_term({3, 4}, next());
    const MalcevPresentation p(d);
    const bool ok = jacobi_check(p).passed;
    EXPECT_EQ(ok, oracle::jacobi_holds(p)) << print_malcev(p);
    if (!ok) {
      ++failures;
      if (!first_bad) first_bad = print_malcev(p);
    }
  }
  EXPECT_GT(failures, 0);
  ASSERT_TRUE(first_bad.has_value());
}

TEST(NilradicalProperties, EveryFlagUpToRank6) {
  for (int l = 1; l <= 6; ++l) {
    for (const auto& theta : all_thetas(l)) {
      const FlagSpec spec{"A", l, theta};
      const Nilradical nil = nilradical_presentation(spec);
      EXPECT_TRUE(jacobi_check(nil.presentation).passed);
      EXPECT_EQ(nil.presentation.dim(), flag_dimension(spec));
      const bool maximal_parabolic = static_cast<int>(theta.size()) == l - 1;
      EXPECT_EQ(nil.presentation.is_abelian(),
                maximal_parabolic || static_cast<int>(theta.size()) == l)
          << l;
    }
  }
}

TEST(NilradicalProperties, DifferentialsMatchBracketOracle) {
  const Nilradical nil = nilradical_presentation(FlagSpec{"A", 4, {2}});
  for (const BasisEntry& a : nil.legend)
    for (const BasisEntry& b : nil.legend) {
      if (a.index >= b.index) continue;
      const auto expected = oracle::bracket(nil.presentation, a.index, b.index);
      const auto term = WeylConstants(4).bracket(a.unit, b.unit);
      if (!term) {
        EXPECT_TRUE(expected.empty());
        continue;
      }
      ASSERT_EQ(expected.size(), 1u);
      const BasisEntry& c = nil.legend[expected.begin()->first - 1];
      EXPECT_EQ(c.unit, term->unit);
      EXPECT_EQ(expected.begin()->second, term->coefficient);
    }
}

TEST(NilradicalProperties, ThreeSummandSupport) {
  for (int l = 2; l <= 6; ++l)
    for (int p = 1; p <= l; ++p)
      for (int q = p + 1; q <= l; ++q) {
        std::vector<int> theta;
        for (int i = 1; i <= l; ++i)
          if (i != p && i != q) theta.push_back(i);
        const Nilradical nil = nilradical_presentation(FlagSpec{"A", l, theta});
        const auto m1 = nil.summand_slots(1), m2 = nil.summand_slots(2);
        for (int k = 1; k <= nil.presentation.dim(); ++k) {
          const Form& d = nil.presentation.differential(k);
          if (nil.legend[k - 1].summand != 3) {
            EXPECT_TRUE(d.is_zero());
            continue;
          }
          for (const auto& [idx, c] : d.terms()) {
            EXPECT_NE(std::find(m1.begin(), m1.end(), idx[0]), m1.end());
            EXPECT_NE(std::find(m2.begin(), m2.end(), idx[1]), m2.end());
          }
        }
      }
}
