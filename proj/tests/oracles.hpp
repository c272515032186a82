// Reference implementations used only by tests. Each one recomputes a
// quantity straight from the definitions, sharing no code with the library
// beyond the plain data types.

#ifndef MDPB_TESTS_ORACLES_HPP
#define MDPB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "mdpb/model.hpp"
#include "mdpb/reductions.hpp"

namespace oracle {

using mdpb::Allocation;
using mdpb::Instance;
using mdpb::Money;
using mdpb::RuleId;
using mdpb::Score;

/// Every allocation, valid or not, via recursion over projects.
inline std::vector<Allocation> all_allocations(const Instance& inst) {
  std::vector<Allocation> out;
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == inst.projects.size()) {
      out.push_back(Allocation{current});
      return;
    }
    for (std::size_t t = 0; t < inst.projects[j].costs.size(); ++t) {
      current.push_back(t);
      rec(j + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

inline Money cost_of(const Instance& inst, const Allocation& a) {
  Money total = 0;
  for (std::size_t j = 0; j < a.degree_of.size(); ++j) total += inst.projects[j].costs[a.degree_of[j]];
  return total;
}

/// One voter's utility (or disutility) from one project at cost c.
inline Score project_term(RuleId rule, Money c, Money l, Money u) {
  const bool inside = l <= c && c <= u;
  switch (rule) {
    case RuleId::kCardinal:
      return (c != 0 && inside) ? 1 : 0;
    case RuleId::kCost:
      return inside ? c : 0;
    case RuleId::kCostCapped:
      if (c < l) return 0;
      return c > u ? u : c;
    case RuleId::kDistance:
      if (c < l) return l - c;
      if (c > u) return c - u;
      return 0;
  }
  return 0;
}

inline Score voter_value(RuleId rule, const Instance& inst, std::size_t i, const Allocation& a) {
  Score s = 0;
  for (std::size_t j = 0; j < a.degree_of.size(); ++j) {
    s += project_term(rule, inst.projects[j].costs[a.degree_of[j]], inst.lower_bounds[i][j], inst.upper_bounds[i][j]);
  }
  return s;
}

inline Score welfare(RuleId rule, const Instance& inst, const Allocation& a) {
  Score s = 0;
  for (std::size_t i = 0; i < inst.num_voters; ++i) s += voter_value(rule, inst, i, a);
  return s;
}

struct Optimum {
  Score value = 0;
  std::vector<Allocation> argopt;  // sorted
};

inline Optimum optimum(RuleId rule, const Instance& inst) {
  const bool minimize = rule == RuleId::kDistance;
  Optimum best;
  bool found = false;
  for (const auto& a : all_allocations(inst)) {
    if (cost_of(inst, a) > inst.budget) continue;
    const auto v = welfare(rule, inst, a);
    if (!found || (minimize ? v < best.value : v > best.value)) {
      best = {v, {a}};
      found = true;
    } else if (v == best.value) {
      best.argopt.push_back(a);
    }
  }
  std::sort(best.argopt.begin(), best.argopt.end());
  return best;
}

/// max over S with c(S) <= b of sum_i c(S & A_i), by subset enumeration.
inline Score approval_welfare(const mdpb::ApprovalInstance& a) {
  const auto m = a.costs.size();
  Score best = 0;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    Money cost = 0;
    for (std::size_t j = 0; j < m; ++j) {
      if (mask >> j & 1u) cost += a.costs[j];
    }
    if (cost > a.budget) continue;
    Score w = 0;
    for (const auto& approved : a.approvals) {
      for (auto j : approved) {
        if (mask >> j & 1u) w += a.costs[j];
      }
    }
    best = std::max(best, w);
  }
  return best;
}

/// Small random approval instance: up to 4 projects costing 1..8, up to 3
/// voters, budget 0..15.
inline mdpb::ApprovalInstance random_approval(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  mdpb::ApprovalInstance a;
  const auto m = 1 + rng() % 4;
  const auto n = 1 + rng() % 3;
  for (std::size_t j = 0; j < m; ++j) {
    a.names.push_back("P" + std::to_string(j + 1));
    a.costs.push_back(static_cast<Money>(1 + rng() % 8));
  }
  a.approvals.resize(n);
  for (auto& approved : a.approvals) {
    for (std::size_t j = 0; j < m; ++j) {
      if (rng() % 2) approved.push_back(j);
    }
  }
  a.budget = static_cast<Money>(rng() % 16);
  return a;
}

/// Both sides of the rounding sandwich for one entry, eps = num/den:
///   rounded <= base * m / (eps * anchor)          (upper)
///   base    <= eps * anchor * (rounded + 1) / m   (lower)
/// cross-multiplied into integers.
inline bool rounding_sandwich(Score base, Score rounded, std::size_t m, const mdpb::Fraction& eps, Score anchor) {
  using Wide = __int128;
  const Wide lhs_upper = Wide(rounded) * eps.num * anchor;
  const Wide rhs_upper = Wide(base) * Wide(m) * eps.den;
  const Wide lhs_lower = Wide(base) * Wide(m) * eps.den;
  const Wide rhs_lower = Wide(eps.num) * anchor * (Wide(rounded) + 1);
  return lhs_upper <= rhs_upper && lhs_lower <= rhs_lower;
}

/// value >= (1 - eps) * opt
inline bool within_lower_factor(Score value, Score opt, const mdpb::Fraction& eps) {
  return __int128(value) * eps.den >= __int128(opt) * (eps.den - eps.num);
}

/// value <= (1 + eps) * opt
inline bool within_upper_factor(Score value, Score opt, const mdpb::Fraction& eps) {
  return __int128(value) * eps.den <= __int128(opt) * (eps.den + eps.num);
}

}  // namespace oracle

#endif  // MDPB_TESTS_ORACLES_HPP
