// Per-instance checkers for eight budgeting axioms, witness replay, and a
// seeded counterexample search.
//
// A rule is modelled as a selector: a callable mapping an instance to the
// set of allocations it selects. For the four utilitarian rules that set is
// every welfare-optimal valid allocation (the rules are irresolute), obtained
// by exhaustive enumeration. Checkers accept any selector so deliberately
// broken rules can be exercised too.

#ifndef MDPB_AXIOMS_HPP
#define MDPB_AXIOMS_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mdpb/exact.hpp"
#include "mdpb/generator.hpp"
#include "mdpb/model.hpp"

namespace mdpb {

enum class AxiomId {
  kShrinkResistant,
  kRangeAbiding,
  kRangeConverging,
  kRangeUnanimous,
  kDegreeEfficient,
  kLowerBoundSensitive,
  kUpperBoundSensitive,
  kDiscountProof,
};

inline constexpr AxiomId kAllAxioms[] = {
    AxiomId::kShrinkResistant,     AxiomId::kRangeAbiding,        AxiomId::kRangeConverging,
    AxiomId::kRangeUnanimous,      AxiomId::kDegreeEfficient,     AxiomId::kLowerBoundSensitive,
    AxiomId::kUpperBoundSensitive, AxiomId::kDiscountProof,
};

inline std::string_view to_string(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::kShrinkResistant: return "shrink-resistant";
    case AxiomId::kRangeAbiding: return "range-abiding";
    case AxiomId::kRangeConverging: return "range-converging";
    case AxiomId::kRangeUnanimous: return "range-unanimous";
    case AxiomId::kDegreeEfficient: return "degree-efficient";
    case AxiomId::kLowerBoundSensitive: return "lower-bound-sensitive";
    case AxiomId::kUpperBoundSensitive: return "upper-bound-sensitive";
    case AxiomId::kDiscountProof: return "discount-proof";
  }
  return "unknown";
}

inline std::optional<AxiomId> parse_axiom(std::string_view name) {
  for (auto a : kAllAxioms) {
    if (to_string(a) == name) return a;
  }
  return std::nullopt;
}

enum class MutationKind { kShrinkLower, kShrinkUpper, kBudgetIncrease, kCostDiscount };

inline std::string_view to_string(MutationKind kind) {
  switch (kind) {
    case MutationKind::kShrinkLower:
    case MutationKind::kShrinkUpper: return "ShrinkBounds";
    case MutationKind::kBudgetIncrease: return "BudgetIncrease";
    case MutationKind::kCostDiscount: return "CostDiscount";
  }
  return "Unknown";
}

/// A single-coordinate edit of an instance.
///  - kShrinkLower / kShrinkUpper: voter's bound on project moves to `to`.
///  - kBudgetIncrease: budget grows by `to - from`.
///  - kCostDiscount: cost of (project, degree) drops from `from` to `to`;
///    every bound equal to `from` on that project follows.
struct Mutation {
  MutationKind kind = MutationKind::kBudgetIncrease;
  std::optional<std::size_t> voter;
  std::optional<std::size_t> project;
  std::optional<std::size_t> degree;
  Money from = 0;
  Money to = 0;
};

inline Instance apply(const Mutation& mutation, const Instance& inst) {
  Instance out = inst;
  switch (mutation.kind) {
    case MutationKind::kShrinkLower:
      out.lower_bounds[*mutation.voter][*mutation.project] = mutation.to;
      break;
    case MutationKind::kShrinkUpper:
      out.upper_bounds[*mutation.voter][*mutation.project] = mutation.to;
      break;
    case MutationKind::kBudgetIncrease:
      out.budget += mutation.to - mutation.from;
      break;
    case MutationKind::kCostDiscount: {
      const auto j = *mutation.project;
      out.projects[j].costs[*mutation.degree] = mutation.to;
      for (std::size_t i = 0; i < out.num_voters; ++i) {
        if (out.lower_bounds[i][j] == mutation.from) out.lower_bounds[i][j] = mutation.to;
        if (out.upper_bounds[i][j] == mutation.from) out.upper_bounds[i][j] = mutation.to;
      }
      break;
    }
  }
  return out;
}

/// Concrete evidence that a selector violates an axiom on `instance`.
struct Witness {
  Instance instance;
  std::optional<Mutation> mutation;
  Allocation selected;              // S
  std::optional<Allocation> other;  // S', or the allocation that should have been selected
  std::optional<std::size_t> voter;
  std::optional<std::size_t> project;
  std::optional<std::size_t> degree;
};

enum class Verdict { kSatisfied, kViolated };

struct AxiomReport {
  AxiomId axiom = AxiomId::kShrinkResistant;
  Verdict verdict = Verdict::kSatisfied;
  std::optional<Witness> witness;
  std::size_t skipped_mutations = 0;     // discount collisions
  std::optional<std::uint64_t> trials;   // set by search_counterexamples
  std::optional<std::uint64_t> trial_index;

  bool violated() const { return verdict == Verdict::kViolated; }
};

using Selector = std::function<std::vector<Allocation>(const Instance&)>;

/// Selects every optimal valid allocation under `rule`.
inline Selector rule_selector(RuleId rule, SolverLimits limits = {}) {
  return [rule, limits](const Instance& inst) { return brute_force(rule, inst, limits).all_optimal; };
}

namespace detail {

inline std::vector<Allocation> selected_sorted(const Selector& select, const Instance& inst) {
  auto out = select(inst);
  std::sort(out.begin(), out.end());
  return out;
}

inline bool contains(const std::vector<Allocation>& sorted, const Allocation& a) {
  return std::binary_search(sorted.begin(), sorted.end(), a);
}

inline AxiomReport violated(AxiomId axiom, Witness w) {
  AxiomReport r;
  r.axiom = axiom;
  r.verdict = Verdict::kViolated;
  r.witness = std::move(w);
  return r;
}

inline AxiomReport satisfied(AxiomId axiom) {
  AxiomReport r;
  r.axiom = axiom;
  return r;
}

inline Allocation with_degree(Allocation a, std::size_t j, std::size_t t) {
  a.degree_of[j] = t;
  return a;
}

/// The allocation funding every project at its consensus maximum, if every
/// consensus range is nonempty.
inline std::optional<Allocation> consensus_max_allocation(const Instance& inst, const ConsensusRange& tau) {
  Allocation a = Allocation::unfunded(inst.num_projects());
  for (std::size_t j = 0; j < inst.num_projects(); ++j) {
    const auto top = tau.tau_max(j);
    if (!top) return std::nullopt;
    a.degree_of[j] = *inst.projects[j].degree_of_cost(*top);
  }
  return a;
}

inline Money abs_diff(Money a, Money b) { return a > b ? a - b : b - a; }

/// Range-converging predicate for one (S, S') pair: true when some project
/// with a nonempty consensus range satisfies the implication.
inline bool converges(const Instance& inst, const ConsensusRange& tau, const Allocation& s,
                      const Allocation& s_prime) {
  bool any_nonempty = false;
  for (std::size_t j = 0; j < inst.num_projects(); ++j) {
    if (tau.empty(j)) continue;
    any_nonempty = true;
    const Money c = chosen_cost(inst, s, j);
    if (tau.contains(j, c)) return true;
    const Money anchor = *tau.tau_min(j);
    // S' is priced in the same cost lists; only the budget differs.
    if (abs_diff(c, anchor) > abs_diff(chosen_cost(inst, s_prime, j), anchor)) return true;
  }
  return !any_nonempty;
}

/// Whether every voter's bound on project j lies strictly beyond `nearer`,
/// with `farther` strictly further on the same side.
inline bool strict_chain_below_lower(const Instance& inst, std::size_t j, Money farther, Money nearer) {
  if (!(farther < nearer)) return false;
  for (std::size_t i = 0; i < inst.num_voters; ++i) {
    if (!(nearer < inst.lower(i, j))) return false;
  }
  return true;
}

inline bool strict_chain_above_upper(const Instance& inst, std::size_t j, Money farther, Money nearer) {
  if (!(farther > nearer)) return false;
  for (std::size_t i = 0; i < inst.num_voters; ++i) {
    if (!(nearer > inst.upper(i, j))) return false;
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Checkers

/// Moving one voter's lower bound up, or upper bound down, by one
/// permissible cost toward c_j(S) (never past it) keeps S selected.
inline AxiomReport check_shrink_resistant(const Selector& select, const Instance& inst) {
  const auto axiom = AxiomId::kShrinkResistant;
  const auto selected = detail::selected_sorted(select, inst);
  for (const auto& s : selected) {
    for (std::size_t i = 0; i < inst.num_voters; ++i) {
      for (std::size_t j = 0; j < inst.num_projects(); ++j) {
        const auto& costs = inst.projects[j].costs;
        const Money c = chosen_cost(inst, s, j);
        const Money l = inst.lower(i, j);
        const Money u = inst.upper(i, j);
        std::vector<Mutation> steps;
        if (l < c) {
          const Money next = costs[*inst.projects[j].degree_of_cost(l) + 1];
          if (next <= c && next <= u) steps.push_back({MutationKind::kShrinkLower, i, j, {}, l, next});
        }
        if (u > c) {
          const Money prev = costs[*inst.projects[j].degree_of_cost(u) - 1];
          if (prev >= c && prev >= l) steps.push_back({MutationKind::kShrinkUpper, i, j, {}, u, prev});
        }
        for (const auto& step : steps) {
          const auto mutated = apply(step, inst);
          if (!detail::contains(detail::selected_sorted(select, mutated), s)) {
            return detail::violated(axiom, Witness{inst, step, s, std::nullopt, i, j, std::nullopt});
          }
        }
      }
    }
  }
  return detail::satisfied(axiom);
}

/// No selected allocation funds a project above its consensus maximum.
inline AxiomReport check_range_abiding(const Selector& select, const Instance& inst) {
  const auto axiom = AxiomId::kRangeAbiding;
  const auto tau = consensus_ranges(inst);
  for (const auto& s : detail::selected_sorted(select, inst)) {
    for (std::size_t j = 0; j < inst.num_projects(); ++j) {
      const auto top = tau.tau_max(j);
      if (top && chosen_cost(inst, s, j) > *top) {
        return detail::violated(axiom, Witness{inst, std::nullopt, s, std::nullopt, std::nullopt, j,
                                               std::nullopt});
      }
    }
  }
  return detail::satisfied(axiom);
}

/// Default budget increments 1..max(1, sum of max costs - budget).
inline std::vector<Money> default_budget_increments(const Instance& inst) {
  Money total = 0;
  for (const auto& p : inst.projects) total += p.costs.back();
  const Money last = std::max<Money>(1, total - inst.budget);
  std::vector<Money> out;
  for (Money d = 1; d <= last; ++d) out.push_back(d);
  return out;
}

/// For every selected S, budget increment, and S' != S selected afterwards,
/// some project with a consensus range either already has c_j(S) inside it
/// or moves strictly closer to its minimum.
inline AxiomReport check_range_converging(const Selector& select, const Instance& inst,
                                          const std::vector<Money>& increments) {
  const auto axiom = AxiomId::kRangeConverging;
  const auto tau = consensus_ranges(inst);
  bool any_nonempty = false;
  for (std::size_t j = 0; j < inst.num_projects(); ++j) any_nonempty |= !tau.empty(j);
  if (!any_nonempty) return detail::satisfied(axiom);

  const auto before = detail::selected_sorted(select, inst);
  for (Money delta : increments) {
    const Mutation grow{MutationKind::kBudgetIncrease, {}, {}, {}, inst.budget, inst.budget + delta};
    const auto after = detail::selected_sorted(select, apply(grow, inst));
    for (const auto& s : before) {
      for (const auto& s_prime : after) {
        if (s_prime == s) continue;
        if (!detail::converges(inst, tau, s, s_prime)) {
          return detail::violated(axiom, Witness{inst, grow, s, s_prime, std::nullopt, std::nullopt,
                                                 std::nullopt});
        }
      }
    }
  }
  return detail::satisfied(axiom);
}

inline AxiomReport check_range_converging(const Selector& select, const Instance& inst) {
  return check_range_converging(select, inst, default_budget_increments(inst));
}

/// When every consensus range is nonempty and their maxima fit the budget,
/// the allocation of those maxima is selected.
inline AxiomReport check_range_unanimous(const Selector& select, const Instance& inst) {
  const auto axiom = AxiomId::kRangeUnanimous;
  const auto tau = consensus_ranges(inst);
  const auto target = detail::consensus_max_allocation(inst, tau);
  if (!target || !is_valid(inst, *target)) return detail::satisfied(axiom);
  const auto selected = detail::selected_sorted(select, inst);
  if (detail::contains(selected, *target)) return detail::satisfied(axiom);
  Witness w{inst, std::nullopt, *target, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (!selected.empty()) w.other = selected.front();
  return detail::violated(axiom, std::move(w));
}

/// No selected allocation can raise one project to a higher degree within
/// budget.
inline AxiomReport check_degree_efficient(const Selector& select, const Instance& inst) {
  const auto axiom = AxiomId::kDegreeEfficient;
  for (const auto& s : detail::selected_sorted(select, inst)) {
    const Money spent = allocation_cost(inst, s);
    for (std::size_t j = 0; j < inst.num_projects(); ++j) {
      const auto& costs = inst.projects[j].costs;
      for (std::size_t k = s.degree_of[j] + 1; k < costs.size(); ++k) {
        if (spent - chosen_cost(inst, s, j) + costs[k] <= inst.budget) {
          return detail::violated(axiom, Witness{inst, std::nullopt, s, detail::with_degree(s, j, k),
                                                 std::nullopt, j, k});
        }
      }
    }
  }
  return detail::satisfied(axiom);
}

namespace detail {

// Shared driver for both bound-sensitivity axioms: S selected, S' valid and
// differing from S only at project j, with the strict chain holding for
// every voter.
template <typename Chain>
AxiomReport check_bound_sensitive(AxiomId axiom, const Selector& select, const Instance& inst, Chain chain) {
  for (const auto& s : selected_sorted(select, inst)) {
    for (std::size_t j = 0; j < inst.num_projects(); ++j) {
      const Money c = chosen_cost(inst, s, j);
      const auto& costs = inst.projects[j].costs;
      for (std::size_t t = 0; t < costs.size(); ++t) {
        if (t == s.degree_of[j] || !chain(inst, j, c, costs[t])) continue;
        const auto s_prime = with_degree(s, j, t);
        if (!is_valid(inst, s_prime)) continue;
        return violated(axiom, Witness{inst, std::nullopt, s, s_prime, std::nullopt, j, t});
      }
    }
  }
  return satisfied(axiom);
}

}  // namespace detail

/// No selected S has c_j(S) < c_j(S') < l_ij for all voters, for a valid S'
/// that agrees with S off project j.
inline AxiomReport check_lower_bound_sensitive(const Selector& select, const Instance& inst) {
  return detail::check_bound_sensitive(AxiomId::kLowerBoundSensitive, select, inst,
                                       detail::strict_chain_below_lower);
}

/// Mirror image: c_j(S) > c_j(S') > u_ij for all voters.
inline AxiomReport check_upper_bound_sensitive(const Selector& select, const Instance& inst) {
  return detail::check_bound_sensitive(AxiomId::kUpperBoundSensitive, select, inst,
                                       detail::strict_chain_above_upper);
}

/// Lowering the chosen cost of a funded project by one unit keeps S
/// selected. Discounts that would collide with the next-lower degree are
/// skipped and counted.
inline AxiomReport check_discount_proof(const Selector& select, const Instance& inst) {
  const auto axiom = AxiomId::kDiscountProof;
  std::size_t skipped = 0;
  for (const auto& s : detail::selected_sorted(select, inst)) {
    for (std::size_t j = 0; j < inst.num_projects(); ++j) {
      const auto x = s.degree_of[j];
      if (x == 0) continue;
      const auto& costs = inst.projects[j].costs;
      if (costs[x] - 1 == costs[x - 1]) {
        ++skipped;
        continue;
      }
      const Mutation discount{MutationKind::kCostDiscount, std::nullopt, j, x, costs[x], costs[x] - 1};
      if (!detail::contains(detail::selected_sorted(select, apply(discount, inst)), s)) {
        auto r = detail::violated(axiom, Witness{inst, discount, s, std::nullopt, std::nullopt, j, x});
        r.skipped_mutations = skipped;
        return r;
      }
    }
  }
  auto r = detail::satisfied(axiom);
  r.skipped_mutations = skipped;
  return r;
}

inline AxiomReport check_axiom(AxiomId axiom, const Selector& select, const Instance& inst) {
  switch (axiom) {
    case AxiomId::kShrinkResistant: return check_shrink_resistant(select, inst);
    case AxiomId::kRangeAbiding: return check_range_abiding(select, inst);
    case AxiomId::kRangeConverging: return check_range_converging(select, inst);
    case AxiomId::kRangeUnanimous: return check_range_unanimous(select, inst);
    case AxiomId::kDegreeEfficient: return check_degree_efficient(select, inst);
    case AxiomId::kLowerBoundSensitive: return check_lower_bound_sensitive(select, inst);
    case AxiomId::kUpperBoundSensitive: return check_upper_bound_sensitive(select, inst);
    case AxiomId::kDiscountProof: return check_discount_proof(select, inst);
  }
  return detail::satisfied(axiom);
}

inline AxiomReport check_axiom(AxiomId axiom, RuleId rule, const Instance& inst, const SolverLimits& limits = {}) {
  return check_axiom(axiom, rule_selector(rule, limits), inst);
}

// ---------------------------------------------------------------------------
// Witness replay

/// Re-derives a violation from the raw definition at the witness's
/// coordinates, without searching. Returns true iff the witness holds.
inline bool replay_witness(const Selector& select, const AxiomReport& report) {
  if (!report.violated() || !report.witness) return false;
  const auto& w = *report.witness;
  const auto& inst = w.instance;
  if (!find_violations(inst).empty()) return false;
  const auto selected = detail::selected_sorted(select, inst);
  const auto is_selected = [&](const Allocation& a) { return detail::contains(selected, a); };

  switch (report.axiom) {
    case AxiomId::kShrinkResistant: {
      if (!w.mutation || !w.project || !w.voter || !is_selected(w.selected)) return false;
      const auto& mu = *w.mutation;
      const auto j = *w.project;
      const auto i = *w.voter;
      const Money c = chosen_cost(inst, w.selected, j);
      const auto mutated = apply(mu, inst);
      if (!find_violations(mutated).empty()) return false;
      const auto& costs = inst.projects[j].costs;
      if (mu.kind == MutationKind::kShrinkLower) {
        const auto d = inst.projects[j].degree_of_cost(inst.lower(i, j));
        if (!d || *d + 1 >= costs.size() || costs[*d + 1] != mu.to || mu.to > c) return false;
      } else if (mu.kind == MutationKind::kShrinkUpper) {
        const auto d = inst.projects[j].degree_of_cost(inst.upper(i, j));
        if (!d || *d == 0 || costs[*d - 1] != mu.to || mu.to < c) return false;
      } else {
        return false;
      }
      return !detail::contains(detail::selected_sorted(select, mutated), w.selected);
    }
    case AxiomId::kRangeAbiding: {
      if (!w.project || !is_selected(w.selected)) return false;
      const auto top = consensus_ranges(inst).tau_max(*w.project);
      return top && chosen_cost(inst, w.selected, *w.project) > *top;
    }
    case AxiomId::kRangeConverging: {
      if (!w.mutation || w.mutation->kind != MutationKind::kBudgetIncrease || !w.other) return false;
      if (w.mutation->to <= w.mutation->from || !is_selected(w.selected) || *w.other == w.selected) return false;
      const auto after = detail::selected_sorted(select, apply(*w.mutation, inst));
      if (!detail::contains(after, *w.other)) return false;
      const auto tau = consensus_ranges(inst);
      bool any_nonempty = false;
      for (std::size_t j = 0; j < inst.num_projects(); ++j) any_nonempty |= !tau.empty(j);
      return any_nonempty && !detail::converges(inst, tau, w.selected, *w.other);
    }
    case AxiomId::kRangeUnanimous: {
      const auto tau = consensus_ranges(inst);
      const auto target = detail::consensus_max_allocation(inst, tau);
      return target && *target == w.selected && is_valid(inst, *target) && !is_selected(*target);
    }
    case AxiomId::kDegreeEfficient: {
      if (!w.project || !w.degree || !is_selected(w.selected)) return false;
      const auto j = *w.project;
      const auto k = *w.degree;
      if (k <= w.selected.degree_of[j] || k >= inst.projects[j].num_degrees()) return false;
      return is_valid(inst, detail::with_degree(w.selected, j, k));
    }
    case AxiomId::kLowerBoundSensitive:
    case AxiomId::kUpperBoundSensitive: {
      if (!w.project || !w.other || !is_selected(w.selected) || !is_valid(inst, *w.other)) return false;
      const auto j = *w.project;
      for (std::size_t k = 0; k < inst.num_projects(); ++k) {
        if (k != j && w.other->degree_of[k] != w.selected.degree_of[k]) return false;
      }
      const Money c = chosen_cost(inst, w.selected, j);
      const Money c_prime = chosen_cost(inst, *w.other, j);
      return report.axiom == AxiomId::kLowerBoundSensitive
                 ? detail::strict_chain_below_lower(inst, j, c, c_prime)
                 : detail::strict_chain_above_upper(inst, j, c, c_prime);
    }
    case AxiomId::kDiscountProof: {
      if (!w.mutation || w.mutation->kind != MutationKind::kCostDiscount || !w.project || !w.degree) return false;
      const auto j = *w.project;
      const auto x = *w.degree;
      if (!is_selected(w.selected) || w.selected.degree_of[j] != x || x == 0) return false;
      const Money c = inst.projects[j].costs[x];
      if (w.mutation->from != c || w.mutation->to != c - 1) return false;
      const auto mutated = apply(*w.mutation, inst);
      if (!find_violations(mutated).empty()) return false;
      return !detail::contains(detail::selected_sorted(select, mutated), w.selected);
    }
  }
  return false;
}

inline bool replay_witness(RuleId rule, const AxiomReport& report, const SolverLimits& limits = {}) {
  return replay_witness(rule_selector(rule, limits), report);
}

// ---------------------------------------------------------------------------
// Counterexample search

/// Runs the checker on `trials` generated instances; returns the first
/// violation in trial order, else a Satisfied report carrying the count.
inline AxiomReport search_counterexamples(const Selector& select, AxiomId axiom, const GeneratorConfig& config,
                                          std::uint64_t trials, std::uint64_t seed) {
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto inst = generate_instance(config, trial_seed(seed, t));
    auto report = check_axiom(axiom, select, inst);
    if (report.violated()) {
      report.trials = t + 1;
      report.trial_index = t;
      return report;
    }
  }
  auto report = detail::satisfied(axiom);
  report.trials = trials;
  return report;
}

inline AxiomReport search_counterexamples(RuleId rule, AxiomId axiom, const GeneratorConfig& config,
                                          std::uint64_t trials, std::uint64_t seed,
                                          const SolverLimits& limits = {}) {
  return search_counterexamples(rule_selector(rule, limits), axiom, config, trials, seed);
}

}  // namespace mdpb

#endif  // MDPB_AXIOMS_HPP
