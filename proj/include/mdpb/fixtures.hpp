// Small hand-built instances used as regression fixtures for the axiom
// checkers and as worked examples.

#ifndef MDPB_FIXTURES_HPP
#define MDPB_FIXTURES_HPP

#include <string>
#include <vector>

#include "mdpb/model.hpp"

namespace mdpb::fixtures {

/// Every voter reports the same [lower, upper] per project.
inline Instance unanimous(std::vector<std::vector<Money>> costs, Money budget, std::size_t voters,
                          const std::vector<Money>& lower, const std::vector<Money>& upper) {
  Instance inst;
  inst.num_voters = voters;
  inst.budget = budget;
  for (std::size_t j = 0; j < costs.size(); ++j) {
    inst.projects.push_back({"P" + std::to_string(j + 1), std::move(costs[j])});
  }
  inst.lower_bounds.assign(voters, lower);
  inst.upper_bounds.assign(voters, upper);
  return inst;
}

/// Two voters, D1 = [0,2,4], D2 = [0,3], b = 5; voter 1 reports
/// [2,4] and [0,3], voter 2 reports [4,4] and [3,3].
inline Instance two_voter_example() {
  Instance inst;
  inst.num_voters = 2;
  inst.budget = 5;
  inst.projects = {{"P1", {0, 2, 4}}, {"P2", {0, 3}}};
  inst.lower_bounds = {{2, 0}, {4, 3}};
  inst.upper_bounds = {{4, 3}, {4, 3}};
  return inst;
}

/// two_voter_example with voter 1 narrowed to [2,2] and [3,3]; every
/// project has a positive minimum disutility.
inline Instance two_voter_tight_example() {
  auto inst = two_voter_example();
  inst.lower_bounds = {{2, 3}, {4, 3}};
  inst.upper_bounds = {{2, 3}, {4, 3}};
  return inst;
}

/// One project with costs [0, floor((b-1)/n), b]. All voters accept only the
/// middle cost except one, whose range extends to b. The cost rules fund b.
inline Instance lone_overshoot(Money budget = 11, std::size_t voters = 2) {
  const Money mid = (budget - 1) / static_cast<Money>(voters);
  Instance inst = unanimous({{0, mid, budget}}, budget, voters, {mid}, {mid});
  inst.upper_bounds[0][0] = budget;
  return inst;
}

/// One project, costs [0,3,6], b = 10, every voter accepts exactly 3: the
/// favourite degree leaves room for a higher one.
inline Instance affordable_upgrade(std::size_t voters = 3) {
  return unanimous({{0, 3, 6}}, 10, voters, {3}, {3});
}

/// D1 = [0,1,2,b-3], D2 = [0,b-2], everyone wants exactly b-3 and b-2,
/// which together exceed b. Requires b >= 6.
inline Instance lower_bound_gap(Money budget = 10, std::size_t voters = 3) {
  return unanimous({{0, 1, 2, budget - 3}, {0, budget - 2}}, budget, voters, {budget - 3, budget - 2},
                   {budget - 3, budget - 2});
}

/// D1 = [0,1,2,3], D2 = [0,b-3], everyone wants exactly 1 and b-3. Under
/// capped utility every funded degree of project 1 is worth the same.
inline Instance capped_plateau(Money budget = 10, std::size_t voters = 3) {
  return unanimous({{0, 1, 2, 3}, {0, budget - 3}}, budget, voters, {1, budget - 3}, {1, budget - 3});
}

/// Two identical projects costing 2, budget 2, everyone wants both at 2.
inline Instance twin_projects(std::size_t voters = 3) {
  return unanimous({{0, 2}, {0, 2}}, 2, voters, {2, 2}, {2, 2});
}

}  // namespace mdpb::fixtures

#endif  // MDPB_FIXTURES_HPP
