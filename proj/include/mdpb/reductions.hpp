// Embeddings of single-cost approval-ballot budgeting into the multi-degree
// model, one per objective.

#ifndef MDPB_REDUCTIONS_HPP
#define MDPB_REDUCTIONS_HPP

#include <string>
#include <vector>

#include "mdpb/model.hpp"

namespace mdpb {

/// Approval-ballot budgeting: each project has one cost, each voter approves
/// a subset of projects.
struct ApprovalInstance {
  std::vector<std::string> names;
  std::vector<Money> costs;
  std::vector<std::vector<std::size_t>> approvals;  // per voter, project indices
  Money budget = 0;

  std::size_t num_projects() const { return costs.size(); }
  std::size_t num_voters() const { return approvals.size(); }
  bool operator==(const ApprovalInstance&) const = default;
};

inline void validate_approval(const ApprovalInstance& a) {
  if (a.names.size() != a.costs.size()) {
    throw Error(ErrorCode::kShapeMismatch, "one name per project is required");
  }
  if (a.budget < 0) throw Error(ErrorCode::kNegativeValue, "budget is negative");
  for (std::size_t j = 0; j < a.costs.size(); ++j) {
    if (a.costs[j] <= 0) {
      throw Error(ErrorCode::kNonIncreasingCosts, "project " + std::to_string(j) + " must have a positive cost");
    }
  }
  for (std::size_t i = 0; i < a.approvals.size(); ++i) {
    std::vector<bool> seen(a.costs.size(), false);
    for (auto j : a.approvals[i]) {
      if (j >= a.costs.size()) {
        throw Error(ErrorCode::kShapeMismatch,
                    "voter " + std::to_string(i) + " approves unknown project " + std::to_string(j));
      }
      if (seen[j]) {
        throw Error(ErrorCode::kShapeMismatch,
                    "voter " + std::to_string(i) + " approves project " + std::to_string(j) + " twice");
      }
      seen[j] = true;
    }
  }
}

namespace detail {

inline Instance two_degree_skeleton(const ApprovalInstance& a) {
  validate_approval(a);
  Instance inst;
  inst.num_voters = a.num_voters();
  inst.budget = a.budget;
  for (std::size_t j = 0; j < a.num_projects(); ++j) inst.projects.push_back({a.names[j], {0, a.costs[j]}});
  inst.lower_bounds.assign(inst.num_voters, std::vector<Money>(a.num_projects(), 0));
  inst.upper_bounds.assign(inst.num_voters, std::vector<Money>(a.num_projects(), 0));
  return inst;
}

}  // namespace detail

/// Costs [0, c(j)]; lower bounds 0; upper bound c(j) exactly where approved.
/// Cost-rule welfare on the image equals approval welfare sum_i c(S & A_i).
inline Instance reduce_from_approval_cost(const ApprovalInstance& a) {
  auto inst = detail::two_degree_skeleton(a);
  for (std::size_t i = 0; i < a.num_voters(); ++i) {
    for (auto j : a.approvals[i]) inst.upper_bounds[i][j] = a.costs[j];
  }
  return inst;
}

struct DistanceReduction {
  Instance instance;
  Score z = 0;  // sum_i c(A_i)
};

/// Costs [0, c(j)]; upper bounds c(j) everywhere; lower bound c(j) exactly
/// where approved. Distance on the image equals z minus approval welfare.
inline DistanceReduction reduce_from_approval_distance(const ApprovalInstance& a) {
  DistanceReduction out{detail::two_degree_skeleton(a), 0};
  for (std::size_t i = 0; i < a.num_voters(); ++i) {
    for (std::size_t j = 0; j < a.num_projects(); ++j) out.instance.upper_bounds[i][j] = a.costs[j];
    for (auto j : a.approvals[i]) {
      out.instance.lower_bounds[i][j] = a.costs[j];
      out.z += a.costs[j];
    }
  }
  return out;
}

}  // namespace mdpb

#endif  // MDPB_REDUCTIONS_HPP
