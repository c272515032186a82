#include <gtest/gtest.h>

#include <random>

#include "mdpb/mdpb.hpp"
#include "oracles.hpp"

using namespace mdpb;

namespace {

Instance single(Money l, Money u) {
  return fixtures::unanimous({{0, 5}}, 5, 1, {l}, {u});
}

ErrorCode first_code(const Instance& inst) {
  try {
    validate_instance(inst);
  } catch (const InvalidInstance& e) {
    return e.code();
  }
  ADD_FAILURE() << "instance unexpectedly valid";
  return ErrorCode::kParseError;
}

GeneratorConfig small_config() { return GeneratorConfig{}; }

}  // namespace

TEST(Validation, MinimalInstanceIsAccepted) { EXPECT_NO_THROW(validate_instance(single(0, 5))); }

TEST(Validation, RejectsBoundOutsidePermissibleCosts) {
  EXPECT_EQ(first_code(single(3, 5)), ErrorCode::kBoundNotPermissible);
}

TEST(Validation, RejectsLowerAboveUpper) { EXPECT_EQ(first_code(single(5, 0)), ErrorCode::kBoundOrderViolation); }

TEST(Validation, RejectsMalformedCostLists) {
  auto inst = single(0, 5);
  inst.projects[0].costs = {1, 5};
  inst.lower_bounds = {{1}};
  EXPECT_EQ(first_code(inst), ErrorCode::kNonzeroBaseCost);

  inst = single(0, 5);
  inst.projects[0].costs = {0, 5, 5};
  EXPECT_EQ(first_code(inst), ErrorCode::kNonIncreasingCosts);
}

TEST(Validation, RejectsShapeAndSignErrors) {
  auto inst = single(0, 5);
  inst.upper_bounds[0].push_back(0);
  EXPECT_EQ(first_code(inst), ErrorCode::kShapeMismatch);

  inst = single(0, 5);
  inst.budget = -1;
  EXPECT_EQ(first_code(inst), ErrorCode::kNegativeValue);
}

TEST(Validation, ReportsEveryViolationWithPosition) {
  auto inst = fixtures::two_voter_example();
  inst.lower_bounds[1][0] = 3;
  inst.upper_bounds[0][1] = 1;
  const auto v = find_violations(inst);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].voter, 0u);
  EXPECT_EQ(v[0].project, 1u);
  EXPECT_EQ(v[1].voter, 1u);
  EXPECT_EQ(v[1].project, 0u);
}

TEST(Validation, AcceptsZeroVoters) {
  auto inst = fixtures::unanimous({{0, 2}}, 3, 0, {0}, {0});
  EXPECT_NO_THROW(validate_instance(inst));
}

TEST(Utility, TwoVoterExample) {
  const auto e1 = fixtures::two_voter_example();
  EXPECT_EQ(utility(RuleId::kCardinal, e1, 0, (Allocation{{1, 1}})), 2);
  EXPECT_EQ(utility(RuleId::kDistance, e1, 1, (Allocation{{1, 0}})), 5);
  EXPECT_EQ(utility(RuleId::kCostCapped, e1, 0, (Allocation{{2, 1}})), 7);
  for (std::size_t i = 0; i < 2; ++i) EXPECT_EQ(utility(RuleId::kCardinal, e1, i, Allocation::unfunded(2)), 0);
}

TEST(Utility, UnfundedProjectNeverCountsForCardinal) {
  // l = u = 0 still gives nothing for an unfunded project.
  const auto inst = fixtures::unanimous({{0, 2}}, 2, 1, {0}, {0});
  EXPECT_EQ(utility(RuleId::kCardinal, inst, 0, (Allocation{{0}})), 0);
}

TEST(Utility, CappedOvershootEarnsUpperBound) {
  const auto inst = fixtures::unanimous({{0, 1, 2, 3}}, 3, 1, {1}, {2});
  EXPECT_EQ(utility(RuleId::kCostCapped, inst, 0, (Allocation{{3}})), 2);
  EXPECT_EQ(utility(RuleId::kCost, inst, 0, (Allocation{{3}})), 0);
}

TEST(TotalValue, SumsVoters) {
  const auto e1 = fixtures::two_voter_example();
  EXPECT_EQ(total_value(RuleId::kCardinal, e1, (Allocation{{1, 1}})), 3);
  EXPECT_EQ(total_value(RuleId::kCost, e1, (Allocation{{2, 0}})), 8);
  const auto empty = fixtures::unanimous({{0, 2}}, 3, 0, {0}, {0});
  for (auto rule : kAllRules) EXPECT_EQ(total_value(rule, empty, (Allocation{{1}})), 0);
}

TEST(TotalValue, RejectsMalformedAllocation) {
  const auto e1 = fixtures::two_voter_example();
  EXPECT_THROW(total_value(RuleId::kCost, e1, Allocation{{1}}), Error);
  EXPECT_THROW(total_value(RuleId::kCost, e1, Allocation{{3, 0}}), Error);
}

TEST(ScoreTable, TwoVoterExample) {
  const auto e1 = fixtures::two_voter_example();
  using Rows = std::vector<std::vector<Score>>;
  EXPECT_EQ(score_table(RuleId::kCardinal, e1).entries, (Rows{{0, 1, 2}, {0, 2}}));
  EXPECT_EQ(score_table(RuleId::kCost, e1).entries, (Rows{{0, 2, 8}, {0, 6}}));
  EXPECT_EQ(score_table(RuleId::kDistance, e1).entries, (Rows{{6, 2, 0}, {3, 0}}));
  EXPECT_EQ(score_table(RuleId::kDistance, e1).orientation, Orientation::kMinimize);
  EXPECT_EQ(score_table(RuleId::kCost, e1).orientation, Orientation::kMaximize);
}

TEST(ConsensusRange, TwoVoterExample) {
  const auto tau = consensus_ranges(fixtures::two_voter_example());
  EXPECT_EQ(tau.tau[0], std::vector<Money>{4});
  EXPECT_EQ(tau.tau[1], std::vector<Money>{3});
  EXPECT_EQ(tau.tau_max(0), 4);
}

TEST(ConsensusRange, SingleVoterAndDisjointRanges) {
  const auto one = fixtures::unanimous({{0, 1, 2, 3}}, 3, 1, {1}, {2});
  EXPECT_EQ(consensus_ranges(one).tau[0], (std::vector<Money>{1, 2}));

  auto two = fixtures::unanimous({{0, 1, 2, 3}}, 3, 2, {0}, {1});
  two.lower_bounds[1] = {2};
  two.upper_bounds[1] = {3};
  EXPECT_TRUE(consensus_ranges(two).empty(0));
  EXPECT_FALSE(consensus_ranges(two).tau_max(0).has_value());
}

TEST(ConsensusRange, IncludesZeroWhenAllLowerBoundsAreZero) {
  const auto inst = fixtures::unanimous({{0, 4}}, 4, 2, {0}, {4});
  EXPECT_EQ(consensus_ranges(inst).tau[0], (std::vector<Money>{0, 4}));
}

TEST(ScalableLimit, Examples) {
  const auto a = fixtures::unanimous({{0, 10, 20}, {0, 30}}, 50, 1, {0, 0}, {20, 30});
  const auto sa = scalable_limit(a);
  EXPECT_EQ(sa.gcd, 10);
  EXPECT_EQ(sa.delta, 3);
  EXPECT_EQ(sa.scaled.projects[0].costs, (std::vector<Money>{0, 1, 2}));
  EXPECT_EQ(sa.scaled.budget, 5);
  EXPECT_EQ(sa.scaled.upper_bounds[0], (std::vector<Money>{2, 3}));

  const auto b = fixtures::unanimous({{0, 6}, {0, 9}}, 12, 1, {0, 0}, {6, 9});
  EXPECT_EQ(scalable_limit(b).gcd, 3);
  EXPECT_EQ(scalable_limit(b).delta, 3);

  const auto e1 = fixtures::two_voter_example();
  const auto se1 = scalable_limit(e1);
  EXPECT_EQ(se1.gcd, 1);
  EXPECT_EQ(se1.delta, 4);
  EXPECT_EQ(se1.scaled, e1);
}

TEST(ScalableLimit, AllCostsZeroIsAnError) {
  const auto inst = fixtures::unanimous({{0}}, 4, 1, {0}, {0});
  try {
    scalable_limit(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kAllCostsZero);
  }
}

TEST(VarianceCoefficient, Examples) {
  EXPECT_TRUE(variance_coefficient(fixtures::two_voter_example()).degenerate);

  const auto e2 = fixtures::two_voter_tight_example();
  using Rows = std::vector<std::vector<Score>>;
  EXPECT_EQ(score_table(RuleId::kDistance, e2).entries, (Rows{{6, 2, 2}, {6, 0}}));
  const auto v = variance_coefficient(e2);
  EXPECT_FALSE(v.degenerate);
  EXPECT_EQ(v.q_sigma, 2);
  EXPECT_EQ(v.q_max, 6);
  EXPECT_EQ(v.ratio(), (Fraction{3, 1}));

  const auto bracket = fixtures::unanimous({{0, 2, 5}}, 5, 1, {0}, {5});
  EXPECT_TRUE(variance_coefficient(bracket).degenerate);
}

TEST(ModelProperties, SeparabilityMatchesDirectEvaluation) {
  std::mt19937_64 rng(7);
  int pairs = 0;
  for (std::uint64_t seed = 0; pairs < 1200; ++seed) {
    const auto inst = generate_instance(small_config(), seed);
    const auto all = oracle::all_allocations(inst);
    for (int k = 0; k < 4; ++k, ++pairs) {
      const auto& a = all[rng() % all.size()];
      for (auto rule : kAllRules) {
        const auto expected = oracle::welfare(rule, inst, a);
        ASSERT_EQ(total_value(rule, inst, a), expected);
        ASSERT_EQ(score_table(rule, inst).total(a), expected);
      }
    }
  }
}

TEST(ModelProperties, UtilityBoundsAndMonotoneCap) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto inst = generate_instance(small_config(), seed);
    const auto m = static_cast<Score>(inst.num_projects());
    for (const auto& a : oracle::all_allocations(inst)) {
      if (!is_valid(inst, a)) continue;
      const auto c = allocation_cost(inst, a);
      for (std::size_t i = 0; i < inst.num_voters; ++i) {
        const auto card = utility(RuleId::kCardinal, inst, i, a);
        EXPECT_GE(card, 0);
        EXPECT_LE(card, m);
        EXPECT_LE(utility(RuleId::kCost, inst, i, a), c);
        EXPECT_LE(utility(RuleId::kCostCapped, inst, i, a), c);
        EXPECT_LE(c, inst.budget);
        EXPECT_GE(utility(RuleId::kDistance, inst, i, a), 0);
      }
    }
    for (std::size_t i = 0; i < inst.num_voters; ++i) {
      for (std::size_t j = 0; j < inst.num_projects(); ++j) {
        auto a = Allocation::unfunded(inst.num_projects());
        Score previous = 0;
        for (std::size_t t = 0; t < inst.projects[j].num_degrees(); ++t) {
          a.degree_of[j] = t;
          const auto now = oracle::project_term(RuleId::kCostCapped, inst.projects[j].costs[t], inst.lower(i, j),
                                                inst.upper(i, j));
          EXPECT_GE(now, previous);
          previous = now;
        }
      }
    }
  }
}

TEST(ModelProperties, ConsensusRangeSoundness) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto inst = generate_instance(small_config(), seed);
    const auto tau = consensus_ranges(inst);
    for (std::size_t j = 0; j < inst.num_projects(); ++j) {
      for (Money c : inst.projects[j].costs) {
        bool all = true;
        for (std::size_t i = 0; i < inst.num_voters; ++i) all = all && inst.lower(i, j) <= c && c <= inst.upper(i, j);
        EXPECT_EQ(tau.contains(j, c), all) << "seed " << seed << " project " << j << " cost " << c;
      }
    }
  }
}

TEST(ModelProperties, ScalingPreservesOptimalDegreeSets) {
  GeneratorConfig config;
  config.max_cost = 6;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto inst = generate_instance(config, seed);
    const Money g = 2 + static_cast<Money>(seed % 3);
    for (auto& p : inst.projects) {
      for (auto& c : p.costs) c *= g;
    }
    inst.budget *= g;
    for (auto* matrix : {&inst.lower_bounds, &inst.upper_bounds}) {
      for (auto& row : *matrix) {
        for (auto& b : row) b *= g;
      }
    }
    const auto scaled = scalable_limit(inst);
    EXPECT_EQ(scaled.gcd % g, 0);
    for (auto rule : kAllRules) {
      EXPECT_EQ(oracle::optimum(rule, inst).argopt, oracle::optimum(rule, scaled.scaled).argopt)
          << "seed " << seed << " rule " << to_string(rule);
    }
  }
}

TEST(Fraction, ReducesAndPrints) {
  EXPECT_EQ((Fraction{6, 4}.reduced()), (Fraction{3, 2}));
  EXPECT_EQ((Fraction{1, 2}.str()), "1/2");
}
