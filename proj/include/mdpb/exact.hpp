// Exact solvers: exhaustive enumeration and the score-indexed dynamic
// program shared by all four rules.

#ifndef MDPB_EXACT_HPP
#define MDPB_EXACT_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mdpb/model.hpp"

namespace mdpb {

enum class Algorithm { kBruteForce, kDp, kScaledDp, kFptas, kParamFptas };

inline std::string_view to_string(Algorithm algo) {
  switch (algo) {
    case Algorithm::kBruteForce: return "BruteForce";
    case Algorithm::kDp: return "DP";
    case Algorithm::kScaledDp: return "ScaledDP";
    case Algorithm::kFptas: return "Fptas";
    case Algorithm::kParamFptas: return "ParamFptas";
  }
  return "Unknown";
}

struct TableStats {
  std::size_t rows = 0;
  std::size_t columns = 0;   // highest score column; the table stores columns + 1 cells per row
  std::uint64_t cells = 0;   // recurrence transitions evaluated
  bool operator==(const TableStats&) const = default;
};

struct SolveResult {
  Score optimal_value = 0;
  Allocation allocation;
  Algorithm algorithm = Algorithm::kDp;
  std::optional<Fraction> epsilon;
  TableStats table_stats;
  bool exact_fallback = false;  // degenerate gamma: raw disutilities were optimized exactly
  bool zero_anchor = false;     // no affordable degree earns utility; guarantee is vacuous
};

struct SolverLimits {
  std::uint64_t max_allocations = 10'000'000;
  std::uint64_t max_cells = 100'000'000;
};

// ---------------------------------------------------------------------------
// Brute force

struct BruteForceResult {
  SolveResult best;
  std::vector<Allocation> all_optimal;  // lexicographic order
};

inline std::uint64_t search_space_size(const Instance& inst) {
  std::uint64_t total = 1;
  for (const auto& p : inst.projects) {
    const auto k = static_cast<std::uint64_t>(p.num_degrees());
    if (k != 0 && total > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= k;
  }
  return total;
}

/// Calls fn(alloc) for every allocation, valid or not, in lexicographic order.
template <typename Fn>
void for_each_allocation(const Instance& inst, Fn&& fn) {
  const auto m = inst.num_projects();
  Allocation alloc = Allocation::unfunded(m);
  while (true) {
    fn(static_cast<const Allocation&>(alloc));
    std::size_t j = m;
    while (true) {
      if (j == 0) return;
      --j;
      if (++alloc.degree_of[j] < inst.projects[j].num_degrees()) break;
      alloc.degree_of[j] = 0;
    }
  }
}

/// Enumerates every valid allocation and keeps all extremal ones.
inline BruteForceResult brute_force(RuleId rule, const Instance& inst, const SolverLimits& limits = {}) {
  const auto space = search_space_size(inst);
  if (space > limits.max_allocations) {
    throw Error(ErrorCode::kSearchSpaceTooLarge,
                std::to_string(space) + " allocations exceed the cap of " +
                    std::to_string(limits.max_allocations));
  }
  BruteForceResult out;
  out.best.algorithm = Algorithm::kBruteForce;
  bool found = false;
  for_each_allocation(inst, [&](const Allocation& alloc) {
    if (!is_valid(inst, alloc)) return;
    const Score value = total_value(rule, inst, alloc);
    if (!found || better(rule, value, out.best.optimal_value)) {
      found = true;
      out.best.optimal_value = value;
      out.best.allocation = alloc;
      out.all_optimal.clear();
    }
    if (value == out.best.optimal_value) out.all_optimal.push_back(alloc);
  });
  out.best.table_stats.cells = space;
  return out;
}

// ---------------------------------------------------------------------------
// Dynamic program

/// min_cost[x][y]: cheapest cost of choosing one degree for each of the
/// first x projects with total score exactly y (kUnreachable otherwise).
/// choice[x][y]: degree picked for project x - 1 on that cheapest path.
struct DpTables {
  static constexpr Money kUnreachable = std::numeric_limits<Money>::max();

  std::vector<std::vector<Money>> min_cost;
  std::vector<std::vector<std::uint32_t>> choice;
  std::size_t columns = 0;
  std::uint64_t cells = 0;

  /// The partial allocation stored at (x, y); only defined when reachable.
  std::vector<std::size_t> partial_allocation(const ScoreTable& scores, std::size_t x, Score y) const {
    std::vector<std::size_t> degrees(x, 0);
    for (std::size_t row = x; row > 0; --row) {
      const auto t = choice[row][static_cast<std::size_t>(y)];
      degrees[row - 1] = t;
      y -= scores.entries[row - 1][t];
    }
    return degrees;
  }
};

struct DpOptions {
  // Columns above this score are never needed (e.g. n * budget for the cost
  // rules). Applied only when smaller than the natural width.
  std::optional<Score> column_cap;
  SolverLimits limits;
};

inline DpTables build_dp_tables(const ScoreTable& scores, const Instance& inst, const DpOptions& options = {}) {
  const auto m = inst.num_projects();
  Score width = 0;
  Score unfunded_total = 0;
  for (const auto& row : scores.entries) {
    for (Score s : row) {
      if (s < 0) throw Error(ErrorCode::kNegativeValue, "scores must be non-negative");
    }
    width += *std::max_element(row.begin(), row.end());
    unfunded_total += row.front();
  }
  // The all-unfunded allocation is always valid and prefix scores only grow,
  // so a minimizer never needs columns beyond its score.
  if (scores.orientation == Orientation::kMinimize) width = std::min(width, unfunded_total);
  if (options.column_cap) width = std::min(width, *options.column_cap);

  const auto cols = static_cast<std::uint64_t>(width) + 1;
  if (cols > options.limits.max_cells / (m + 1)) {
    throw Error(ErrorCode::kTableTooLarge, std::to_string(m + 1) + " x " + std::to_string(cols) +
                                               " table exceeds the cell cap");
  }

  DpTables tables;
  tables.columns = static_cast<std::size_t>(width);
  tables.min_cost.assign(m + 1, std::vector<Money>(cols, DpTables::kUnreachable));
  tables.choice.assign(m + 1, std::vector<std::uint32_t>(cols, 0));
  tables.min_cost[0][0] = 0;

  for (std::size_t x = 1; x <= m; ++x) {
    const auto& prev = tables.min_cost[x - 1];
    auto& cur = tables.min_cost[x];
    auto& pick = tables.choice[x];
    const auto& costs = inst.projects[x - 1].costs;
    const auto& row = scores.entries[x - 1];
    for (std::size_t y = 0; y < cols; ++y) {
      // Degree 0 first, then ascending: only strict improvements replace,
      // so ties keep the skip branch and then the lowest degree.
      for (std::size_t t = 0; t < costs.size(); ++t) {
        ++tables.cells;
        const auto s = static_cast<std::size_t>(row[t]);
        if (s > y) continue;
        const Money base = prev[y - s];
        if (base == DpTables::kUnreachable) continue;
        const Money candidate = base + costs[t];
        if (candidate < cur[y]) {
          cur[y] = candidate;
          pick[y] = static_cast<std::uint32_t>(t);
        }
      }
    }
  }
  return tables;
}

/// Optimizes a separable score table subject to the budget. The returned
/// optimal_value is the table score of the chosen allocation.
inline SolveResult dp_solve(const ScoreTable& scores, const Instance& inst, const DpOptions& options = {}) {
  const auto tables = build_dp_tables(scores, inst, options);
  const auto m = inst.num_projects();
  const auto& last = tables.min_cost[m];

  std::optional<std::size_t> best;
  for (std::size_t y = 0; y < last.size(); ++y) {
    if (last[y] > inst.budget) continue;
    if (!best || scores.orientation == Orientation::kMaximize) best = y;
    if (scores.orientation == Orientation::kMinimize) break;
  }
  if (!best) throw Error(ErrorCode::kTableTooLarge, "column cap excludes every valid allocation");
  SolveResult result;
  result.algorithm = Algorithm::kDp;
  result.optimal_value = static_cast<Score>(*best);
  result.allocation.degree_of = tables.partial_allocation(scores, m, static_cast<Score>(*best));
  result.table_stats = TableStats{m, tables.columns, tables.cells};
  return result;
}

namespace detail {

inline std::optional<Score> natural_column_cap(RuleId rule, const Instance& inst) {
  // Per-voter utility never exceeds the chosen cost, so a valid prefix
  // scores at most n * budget.
  if (rule == RuleId::kCost || rule == RuleId::kCostCapped) {
    return static_cast<Score>(inst.num_voters) * inst.budget;
  }
  return std::nullopt;
}

}  // namespace detail

inline SolveResult solve_exact(RuleId rule, const Instance& inst, const SolverLimits& limits = {}) {
  DpOptions options{detail::natural_column_cap(rule, inst), limits};
  auto result = dp_solve(score_table(rule, inst), inst, options);
  result.algorithm = Algorithm::kDp;
  return result;
}

/// Solves the gcd-scaled instance and reports the value on the original.
inline SolveResult solve_scaled(RuleId rule, const Instance& inst, const SolverLimits& limits = {}) {
  const auto scaled = scalable_limit(inst);
  auto result = solve_exact(rule, scaled.scaled, limits);
  result.algorithm = Algorithm::kScaledDp;
  result.optimal_value = total_value(rule, inst, result.allocation);
  return result;
}

/// All (project, degree >= 1) pairs funded by some optimal allocation.
inline std::set<std::pair<std::size_t, std::size_t>> winners(RuleId rule, const Instance& inst,
                                                             const SolverLimits& limits = {}) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const auto& alloc : brute_force(rule, inst, limits).all_optimal) {
    for (std::size_t j = 0; j < alloc.degree_of.size(); ++j) {
      if (alloc.degree_of[j] != 0) out.emplace(j, alloc.degree_of[j]);
    }
  }
  return out;
}

}  // namespace mdpb

#endif  // MDPB_EXACT_HPP
