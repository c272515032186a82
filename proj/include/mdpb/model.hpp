// Core data model for participatory budgeting with multi-degree projects
// and ranged approval ballots.
//
// A project is funded at exactly one of its permissible cost levels
// ("degrees"); degree 0 always costs 0 and means the project is unfunded.
// Every voter reports, per project, a lower and an upper bound drawn from
// that project's permissible costs.

#ifndef MDPB_MODEL_HPP
#define MDPB_MODEL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mdpb {

using Money = std::int64_t;
using Score = std::int64_t;

enum class ErrorCode {
  kBoundNotPermissible,
  kBoundOrderViolation,
  kNonzeroBaseCost,
  kNonIncreasingCosts,
  kShapeMismatch,
  kNegativeValue,
  kMalformedAllocation,
  kAllCostsZero,
  kSearchSpaceTooLarge,
  kTableTooLarge,
  kDegenerateVarianceCoefficient,
  kInvalidEpsilon,
  kUnsupportedRule,
  kInfeasibleConfig,
  kParseError,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBoundNotPermissible: return "BoundNotPermissible";
    case ErrorCode::kBoundOrderViolation: return "BoundOrderViolation";
    case ErrorCode::kNonzeroBaseCost: return "NonzeroBaseCost";
    case ErrorCode::kNonIncreasingCosts: return "NonIncreasingCosts";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNegativeValue: return "NegativeValue";
    case ErrorCode::kMalformedAllocation: return "MalformedAllocation";
    case ErrorCode::kAllCostsZero: return "AllCostsZero";
    case ErrorCode::kSearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::kTableTooLarge: return "TableTooLarge";
    case ErrorCode::kDegenerateVarianceCoefficient: return "DegenerateVarianceCoefficient";
    case ErrorCode::kInvalidEpsilon: return "InvalidEpsilon";
    case ErrorCode::kUnsupportedRule: return "UnsupportedRule";
    case ErrorCode::kInfeasibleConfig: return "InfeasibleConfig";
    case ErrorCode::kParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Exact non-negative fraction, used for approximation parameters.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Fraction reduced() const {
    const auto g = std::gcd(num, den);
    return g == 0 ? *this : Fraction{num / g, den / g};
  }
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return static_cast<__int128>(a.num) * b.den == static_cast<__int128>(b.num) * a.den;
  }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

struct ProjectDegrees {
  std::string name;
  std::vector<Money> costs;  // costs[0] == 0, strictly increasing

  std::size_t num_degrees() const { return costs.size(); }
  std::size_t max_degree() const { return costs.empty() ? 0 : costs.size() - 1; }

  /// Degree index whose cost equals `cost`, if permissible.
  std::optional<std::size_t> degree_of_cost(Money cost) const {
    auto it = std::lower_bound(costs.begin(), costs.end(), cost);
    if (it == costs.end() || *it != cost) return std::nullopt;
    return static_cast<std::size_t>(it - costs.begin());
  }

  bool operator==(const ProjectDegrees&) const = default;
};

/// Matrices are indexed [voter][project].
struct Instance {
  std::size_t num_voters = 0;
  std::vector<ProjectDegrees> projects;
  Money budget = 0;
  std::vector<std::vector<Money>> lower_bounds;
  std::vector<std::vector<Money>> upper_bounds;

  std::size_t num_projects() const { return projects.size(); }
  Money lower(std::size_t voter, std::size_t project) const { return lower_bounds[voter][project]; }
  Money upper(std::size_t voter, std::size_t project) const { return upper_bounds[voter][project]; }

  /// t* = max_j t_j.
  std::size_t max_degree() const {
    std::size_t t = 0;
    for (const auto& p : projects) t = std::max(t, p.max_degree());
    return t;
  }
  Money max_cost() const {
    Money c = 0;
    for (const auto& p : projects) c = std::max(c, p.costs.empty() ? 0 : p.costs.back());
    return c;
  }

  bool operator==(const Instance&) const = default;
};

/// One chosen degree per project; degree 0 is "not funded".
struct Allocation {
  std::vector<std::size_t> degree_of;

  static Allocation unfunded(std::size_t num_projects) {
    return Allocation{std::vector<std::size_t>(num_projects, 0)};
  }

  auto operator<=>(const Allocation&) const = default;
  bool operator==(const Allocation&) const = default;
};

enum class RuleId { kCardinal, kCost, kCostCapped, kDistance };

inline constexpr RuleId kAllRules[] = {RuleId::kCardinal, RuleId::kCost, RuleId::kCostCapped,
                                       RuleId::kDistance};

inline std::string_view to_string(RuleId rule) {
  switch (rule) {
    case RuleId::kCardinal: return "cardinal";
    case RuleId::kCost: return "cost";
    case RuleId::kCostCapped: return "capped";
    case RuleId::kDistance: return "distance";
  }
  return "unknown";
}

inline std::optional<RuleId> parse_rule(std::string_view name) {
  for (auto rule : kAllRules) {
    if (to_string(rule) == name) return rule;
  }
  return std::nullopt;
}

/// Distance is minimized; the other three rules are maximized.
inline bool is_minimization(RuleId rule) { return rule == RuleId::kDistance; }

enum class Orientation { kMaximize, kMinimize };

/// Separable per-degree objective: entries[j][t] is the contribution of
/// funding project j at degree t.
struct ScoreTable {
  std::vector<std::vector<Score>> entries;
  Orientation orientation = Orientation::kMaximize;

  Score total(const Allocation& alloc) const {
    Score s = 0;
    for (std::size_t j = 0; j < entries.size(); ++j) s += entries[j][alloc.degree_of[j]];
    return s;
  }
  bool operator==(const ScoreTable&) const = default;
};

/// Per project, the permissible costs every voter accepts.
struct ConsensusRange {
  std::vector<std::vector<Money>> tau;  // ascending

  bool empty(std::size_t j) const { return tau[j].empty(); }
  bool contains(std::size_t j, Money cost) const {
    return std::binary_search(tau[j].begin(), tau[j].end(), cost);
  }
  std::optional<Money> tau_min(std::size_t j) const {
    if (tau[j].empty()) return std::nullopt;
    return tau[j].front();
  }
  std::optional<Money> tau_max(std::size_t j) const {
    if (tau[j].empty()) return std::nullopt;
    return tau[j].back();
  }
};

struct Violation {
  ErrorCode code;
  std::optional<std::size_t> voter;
  std::optional<std::size_t> project;
  std::string detail;
};

class InvalidInstance : public Error {
 public:
  explicit InvalidInstance(std::vector<Violation> violations)
      : Error(violations.front().code, summarize(violations)), violations_(std::move(violations)) {}

  const std::vector<Violation>& violations() const noexcept { return violations_; }

 private:
  static std::string summarize(const std::vector<Violation>& v) {
    std::string s = v.front().detail;
    if (v.size() > 1) s += " (+" + std::to_string(v.size() - 1) + " more)";
    return s;
  }
  std::vector<Violation> violations_;
};

// ---------------------------------------------------------------------------
// Validation

/// Every violated instance invariant, in (project, voter) scan order.
inline std::vector<Violation> find_violations(const Instance& inst) {
  std::vector<Violation> out;
  const auto m = inst.num_projects();
  if (inst.budget < 0) out.push_back({ErrorCode::kNegativeValue, {}, {}, "budget is negative"});
  for (std::size_t j = 0; j < m; ++j) {
    const auto& costs = inst.projects[j].costs;
    const auto where = "project " + std::to_string(j);
    if (costs.empty() || costs.front() != 0) {
      out.push_back({ErrorCode::kNonzeroBaseCost, {}, j, where + ": first cost must be 0"});
    }
    for (std::size_t t = 1; t < costs.size(); ++t) {
      if (costs[t] <= costs[t - 1]) {
        out.push_back({ErrorCode::kNonIncreasingCosts, {}, j,
                       where + ": cost at degree " + std::to_string(t) + " is not above degree " +
                           std::to_string(t - 1)});
        break;
      }
    }
  }
  if (inst.lower_bounds.size() != inst.num_voters || inst.upper_bounds.size() != inst.num_voters) {
    out.push_back({ErrorCode::kShapeMismatch, {}, {}, "bound matrices must have one row per voter"});
    return out;
  }
  for (std::size_t i = 0; i < inst.num_voters; ++i) {
    if (inst.lower_bounds[i].size() != m || inst.upper_bounds[i].size() != m) {
      out.push_back({ErrorCode::kShapeMismatch, i, {},
                     "voter " + std::to_string(i) + ": expected " + std::to_string(m) + " bounds"});
      continue;
    }
    for (std::size_t j = 0; j < m; ++j) {
      const auto l = inst.lower(i, j);
      const auto u = inst.upper(i, j);
      const auto where = "voter " + std::to_string(i) + ", project " + std::to_string(j);
      const auto& costs = inst.projects[j].costs;
      if (!std::binary_search(costs.begin(), costs.end(), l)) {
        out.push_back({ErrorCode::kBoundNotPermissible, i, j,
                       where + ": lower bound " + std::to_string(l) + " is not a permissible cost"});
      }
      if (!std::binary_search(costs.begin(), costs.end(), u)) {
        out.push_back({ErrorCode::kBoundNotPermissible, i, j,
                       where + ": upper bound " + std::to_string(u) + " is not a permissible cost"});
      }
      if (l > u) {
        out.push_back({ErrorCode::kBoundOrderViolation, i, j,
                       where + ": lower bound " + std::to_string(l) + " exceeds upper bound " +
                           std::to_string(u)});
      }
    }
  }
  return out;
}

/// Returns the instance unchanged when it is well formed; throws
/// InvalidInstance listing every violation otherwise.
inline Instance validate_instance(Instance raw) {
  auto violations = find_violations(raw);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  return raw;
}

// ---------------------------------------------------------------------------
// Allocations

inline void check_shape(const Instance& inst, const Allocation& alloc) {
  if (alloc.degree_of.size() != inst.num_projects()) {
    throw Error(ErrorCode::kMalformedAllocation, "allocation has " +
                                                     std::to_string(alloc.degree_of.size()) +
                                                     " entries for " +
                                                     std::to_string(inst.num_projects()) + " projects");
  }
  for (std::size_t j = 0; j < alloc.degree_of.size(); ++j) {
    if (alloc.degree_of[j] >= inst.projects[j].num_degrees()) {
      throw Error(ErrorCode::kMalformedAllocation,
                  "degree " + std::to_string(alloc.degree_of[j]) + " out of range for project " +
                      std::to_string(j));
    }
  }
}

inline Money chosen_cost(const Instance& inst, const Allocation& alloc, std::size_t j) {
  return inst.projects[j].costs[alloc.degree_of[j]];
}

inline Money allocation_cost(const Instance& inst, const Allocation& alloc) {
  Money total = 0;
  for (std::size_t j = 0; j < inst.num_projects(); ++j) total += chosen_cost(inst, alloc, j);
  return total;
}

inline bool is_valid(const Instance& inst, const Allocation& alloc) {
  return allocation_cost(inst, alloc) <= inst.budget;
}

// ---------------------------------------------------------------------------
// Utilities

/// Per-voter utility, or disutility for the distance rule. Budget validity
/// is not required.
inline Score utility(RuleId rule, const Instance& inst, std::size_t voter, const Allocation& alloc) {
  check_shape(inst, alloc);
  Score total = 0;
  for (std::size_t j = 0; j < inst.num_projects(); ++j) {
    const Money c = chosen_cost(inst, alloc, j);
    const Money l = inst.lower(voter, j);
    const Money u = inst.upper(voter, j);
    const bool in_range = l <= c && c <= u;
    switch (rule) {
      case RuleId::kCardinal:
        if (c != 0 && in_range) total += 1;
        break;
      case RuleId::kCost:
        if (in_range) total += c;
        break;
      case RuleId::kCostCapped:
        if (c < l) {
        } else if (c <= u) {
          total += c;
        } else {
          total += u;
        }
        break;
      case RuleId::kDistance:
        if (c < l) {
          total += l - c;
        } else if (c > u) {
          total += c - u;
        }
        break;
    }
  }
  return total;
}

inline Score total_value(RuleId rule, const Instance& inst, const Allocation& alloc) {
  Score total = 0;
  for (std::size_t i = 0; i < inst.num_voters; ++i) total += utility(rule, inst, i, alloc);
  return total;
}

/// Whether `a` is strictly better than `b` under the rule's orientation.
inline bool better(RuleId rule, Score a, Score b) { return is_minimization(rule) ? a < b : a > b; }

// ---------------------------------------------------------------------------
// Score tables

inline ScoreTable score_table(RuleId rule, const Instance& inst) {
  ScoreTable table;
  table.orientation = is_minimization(rule) ? Orientation::kMinimize : Orientation::kMaximize;
  table.entries.resize(inst.num_projects());
  for (std::size_t j = 0; j < inst.num_projects(); ++j) {
    const auto& costs = inst.projects[j].costs;
    auto& row = table.entries[j];
    row.assign(costs.size(), 0);
    for (std::size_t t = 0; t < costs.size(); ++t) {
      const Money c = costs[t];
      Score approving = 0;
      Score capped = 0;
      Score below = 0;
      Score above = 0;
      for (std::size_t i = 0; i < inst.num_voters; ++i) {
        const Money l = inst.lower(i, j);
        const Money u = inst.upper(i, j);
        if (l <= c && c <= u) ++approving;
        if (c >= l) capped += std::min(c, u);
        if (c < l) below += l - c;
        if (c > u) above += c - u;
      }
      switch (rule) {
        case RuleId::kCardinal: row[t] = t == 0 ? 0 : approving; break;
        case RuleId::kCost: row[t] = approving * c; break;
        case RuleId::kCostCapped: row[t] = capped; break;
        case RuleId::kDistance: row[t] = below + above; break;
      }
    }
  }
  return table;
}

// ---------------------------------------------------------------------------
// Derived statistics

inline ConsensusRange consensus_ranges(const Instance& inst) {
  ConsensusRange range;
  range.tau.resize(inst.num_projects());
  for (std::size_t j = 0; j < inst.num_projects(); ++j) {
    for (Money c : inst.projects[j].costs) {
      bool all = true;
      for (std::size_t i = 0; i < inst.num_voters && all; ++i) {
        all = inst.lower(i, j) <= c && c <= inst.upper(i, j);
      }
      if (all) range.tau[j].push_back(c);
    }
  }
  return range;
}

struct ScaledInstance {
  Money gcd = 1;
  Money delta = 0;  // scalable limit: max cost / gcd
  Instance scaled;
};

/// Divides every cost, bound and the budget by the gcd of all nonzero
/// costs and the budget.
inline ScaledInstance scalable_limit(const Instance& inst) {
  Money g = 0;
  for (const auto& p : inst.projects) {
    for (Money c : p.costs) {
      if (c != 0) g = std::gcd(g, c);
    }
  }
  if (g == 0) throw Error(ErrorCode::kAllCostsZero, "no project has a fundable degree");
  g = std::gcd(g, inst.budget);

  ScaledInstance out{g, inst.max_cost() / g, inst};
  for (auto& p : out.scaled.projects) {
    for (auto& c : p.costs) c /= g;
  }
  out.scaled.budget /= g;
  for (auto* matrix : {&out.scaled.lower_bounds, &out.scaled.upper_bounds}) {
    for (auto& row : *matrix) {
      for (auto& b : row) b /= g;
    }
  }
  return out;
}

/// gamma = q_m / q_sigma for the distance rule. `degenerate` is set when
/// q_sigma == 0, in which case `ratio` is meaningless.
struct VarianceCoefficient {
  Score q_max = 0;
  Score q_sigma = 0;
  bool degenerate = true;

  Fraction ratio() const { return Fraction{q_max, q_sigma}.reduced(); }
};

inline VarianceCoefficient variance_coefficient(const Instance& inst) {
  const auto q = score_table(RuleId::kDistance, inst);
  VarianceCoefficient v;
  for (const auto& row : q.entries) {
    v.q_max = std::max(v.q_max, *std::max_element(row.begin(), row.end()));
    v.q_sigma += *std::min_element(row.begin(), row.end());
  }
  v.degenerate = v.q_sigma == 0;
  return v;
}

}  // namespace mdpb

#endif  // MDPB_MODEL_HPP
