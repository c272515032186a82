// Approximation schemes: score rounding for the cost and capped-cost rules,
// and disutility rounding parameterized by the variance coefficient for the
// distance rule. All rounding is exact integer arithmetic.

#ifndef MDPB_APPROX_HPP
#define MDPB_APPROX_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "mdpb/exact.hpp"
#include "mdpb/model.hpp"

namespace mdpb {

/// Instance restricted to degrees that fit the budget on their own. Bounds
/// are copied verbatim and may name pruned costs, so `view` is a solver
/// input only and is not revalidated.
struct PrunedInstance {
  Instance view;
  std::vector<std::vector<std::size_t>> kept;  // kept[j][t'] = original degree

  Allocation to_original(const Allocation& pruned) const {
    Allocation out;
    out.degree_of.resize(pruned.degree_of.size());
    for (std::size_t j = 0; j < pruned.degree_of.size(); ++j) out.degree_of[j] = kept[j][pruned.degree_of[j]];
    return out;
  }

  ScoreTable restrict(const ScoreTable& full) const {
    ScoreTable out{{}, full.orientation};
    out.entries.resize(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
      for (auto t : kept[j]) out.entries[j].push_back(full.entries[j][t]);
    }
    return out;
  }
};

inline PrunedInstance eliminate_infeasible(const Instance& inst) {
  PrunedInstance out{inst, {}};
  out.kept.resize(inst.num_projects());
  for (std::size_t j = 0; j < inst.num_projects(); ++j) {
    const auto& costs = inst.projects[j].costs;
    auto& kept_costs = out.view.projects[j].costs;
    kept_costs.clear();
    for (std::size_t t = 0; t < costs.size(); ++t) {
      if (t == 0 || costs[t] <= inst.budget) {
        kept_costs.push_back(costs[t]);
        out.kept[j].push_back(t);
      }
    }
  }
  return out;
}

struct RoundedScores {
  ScoreTable base;
  ScoreTable rounded;
  Fraction epsilon;
  Score scale_anchor = 0;  // M for maximization, q_sigma for minimization
  std::size_t num_projects = 0;
};

namespace detail {

inline void check_epsilon(const Fraction& eps, bool allow_one) {
  const bool ok = eps.num > 0 && eps.den > 0 && (allow_one ? eps.num <= eps.den : eps.num < eps.den);
  if (!ok) {
    throw Error(ErrorCode::kInvalidEpsilon,
                "epsilon " + eps.str() + (allow_one ? " must lie in (0,1]" : " must lie in (0,1)"));
  }
}

// floor(value * m / (eps * anchor)) with eps = num/den.
inline Score round_down(Score value, std::size_t m, const Fraction& eps, Score anchor) {
  const __int128 top = static_cast<__int128>(value) * static_cast<__int128>(m) * eps.den;
  const __int128 bottom = static_cast<__int128>(eps.num) * anchor;
  return static_cast<Score>(top / bottom);
}

inline RoundedScores round_with_anchor(const ScoreTable& base, const Fraction& eps, Score anchor) {
  RoundedScores out{base, base, eps, anchor, base.entries.size()};
  for (auto& row : out.rounded.entries) {
    for (auto& s : row) s = round_down(s, out.num_projects, eps, anchor);
  }
  return out;
}

}  // namespace detail

/// Rounds maximization scores against M, their largest entry.
inline RoundedScores round_scores_max(const ScoreTable& base, const Fraction& eps) {
  detail::check_epsilon(eps, false);
  Score anchor = 0;
  for (const auto& row : base.entries) {
    for (Score s : row) anchor = std::max(anchor, s);
  }
  if (anchor == 0) return RoundedScores{base, base, eps, 0, base.entries.size()};
  return detail::round_with_anchor(base, eps, anchor);
}

/// Rounds disutility contributions against q_sigma, the sum of per-project
/// minima. Throws DegenerateVarianceCoefficient when q_sigma == 0.
inline RoundedScores round_scores_min(const ScoreTable& base, const Fraction& eps) {
  detail::check_epsilon(eps, true);
  Score anchor = 0;
  for (const auto& row : base.entries) anchor += *std::min_element(row.begin(), row.end());
  if (anchor == 0) {
    throw Error(ErrorCode::kDegenerateVarianceCoefficient, "q_sigma is zero; rounding is undefined");
  }
  return detail::round_with_anchor(base, eps, anchor);
}

/// (1 - eps)-approximation for the cost and capped-cost rules.
inline SolveResult fptas_max(RuleId rule, const Instance& inst, const Fraction& eps,
                             const SolverLimits& limits = {}) {
  if (rule != RuleId::kCost && rule != RuleId::kCostCapped) {
    throw Error(ErrorCode::kUnsupportedRule, "score rounding applies to the cost and capped rules only");
  }
  detail::check_epsilon(eps, false);
  const auto pruned = eliminate_infeasible(inst);
  const auto base = pruned.restrict(score_table(rule, inst));
  const auto rounded = round_scores_max(base, eps);

  SolveResult result;
  if (rounded.scale_anchor == 0) {
    result.allocation = Allocation::unfunded(inst.num_projects());
    result.zero_anchor = true;
  } else {
    auto dp = dp_solve(rounded.rounded, pruned.view, DpOptions{std::nullopt, limits});
    result.allocation = pruned.to_original(dp.allocation);
    result.table_stats = dp.table_stats;
  }
  result.algorithm = Algorithm::kFptas;
  result.epsilon = eps;
  result.optimal_value = total_value(rule, inst, result.allocation);
  return result;
}

/// (1 + eps)-approximation for the distance rule, parameterized by gamma.
inline SolveResult fptas_min_distance(const Instance& inst, const Fraction& eps, const SolverLimits& limits = {}) {
  const auto rounded = round_scores_min(score_table(RuleId::kDistance, inst), eps);
  auto result = dp_solve(rounded.rounded, inst, DpOptions{std::nullopt, limits});
  result.algorithm = Algorithm::kParamFptas;
  result.epsilon = eps;
  result.optimal_value = total_value(RuleId::kDistance, inst, result.allocation);
  return result;
}

/// fptas_min_distance, falling back to the exact DP on raw disutilities when
/// gamma is degenerate.
inline SolveResult approximate_distance(const Instance& inst, const Fraction& eps, const SolverLimits& limits = {}) {
  detail::check_epsilon(eps, true);
  if (!variance_coefficient(inst).degenerate) return fptas_min_distance(inst, eps, limits);
  auto result = solve_exact(RuleId::kDistance, inst, limits);
  result.exact_fallback = true;
  result.epsilon = eps;
  return result;
}

}  // namespace mdpb

#endif  // MDPB_APPROX_HPP
