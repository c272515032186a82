// Seeded random instance generation.

#ifndef MDPB_GENERATOR_HPP
#define MDPB_GENERATOR_HPP

#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "mdpb/model.hpp"

namespace mdpb {

struct GeneratorConfig {
  std::size_t min_projects = 1;
  std::size_t max_projects = 4;
  std::size_t max_degrees = 3;  // nonzero degrees per project, drawn from 1..max_degrees
  std::size_t min_voters = 1;
  std::size_t max_voters = 4;
  Money max_cost = 8;
  Money min_budget = 1;
  Money max_budget = 12;
};

inline void check_config(const GeneratorConfig& c) {
  auto fail = [](const std::string& why) { throw Error(ErrorCode::kInfeasibleConfig, why); };
  if (c.min_projects > c.max_projects) fail("min_projects exceeds max_projects");
  if (c.min_voters > c.max_voters) fail("min_voters exceeds max_voters");
  if (c.max_voters == 0) fail("at least one voter is required");
  if (c.max_degrees == 0) fail("max_degrees must be positive");
  if (c.max_cost < 1) fail("max_cost must be positive");
  if (static_cast<Money>(c.max_degrees) > c.max_cost) {
    fail("max_degrees " + std::to_string(c.max_degrees) + " exceeds the " + std::to_string(c.max_cost) +
         " distinct nonzero costs available");
  }
  if (c.min_budget < 0 || c.min_budget > c.max_budget) fail("budget range is empty or negative");
}

/// Per-trial seed derived from (seed, index) with a splitmix64 step.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

namespace detail {

// Modulo draw rather than std::uniform_int_distribution, whose output is
// library-specific; the slight bias is irrelevant here.
inline std::uint64_t draw(std::mt19937_64& rng, std::uint64_t lo, std::uint64_t hi) {
  return lo + rng() % (hi - lo + 1);
}

}  // namespace detail

inline Instance generate_instance(const GeneratorConfig& config, std::uint64_t seed) {
  check_config(config);
  std::mt19937_64 rng(seed);
  Instance inst;
  const auto m = detail::draw(rng, config.min_projects, config.max_projects);
  inst.num_voters = detail::draw(rng, std::max<std::size_t>(1, config.min_voters), config.max_voters);
  inst.budget = static_cast<Money>(detail::draw(rng, config.min_budget, config.max_budget));

  std::vector<Money> pool(static_cast<std::size_t>(config.max_cost));
  std::iota(pool.begin(), pool.end(), Money{1});
  for (std::size_t j = 0; j < m; ++j) {
    const auto degrees = detail::draw(rng, 1, config.max_degrees);
    for (std::size_t k = 0; k < degrees; ++k) {
      std::swap(pool[k], pool[detail::draw(rng, k, pool.size() - 1)]);
    }
    std::vector<Money> costs(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(degrees));
    std::sort(costs.begin(), costs.end());
    costs.insert(costs.begin(), 0);
    inst.projects.push_back({"P" + std::to_string(j + 1), std::move(costs)});
  }

  inst.lower_bounds.assign(inst.num_voters, std::vector<Money>(m, 0));
  inst.upper_bounds.assign(inst.num_voters, std::vector<Money>(m, 0));
  for (std::size_t i = 0; i < inst.num_voters; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto& costs = inst.projects[j].costs;
      auto a = costs[detail::draw(rng, 0, costs.size() - 1)];
      auto b = costs[detail::draw(rng, 0, costs.size() - 1)];
      if (a > b) std::swap(a, b);
      inst.lower_bounds[i][j] = a;
      inst.upper_bounds[i][j] = b;
    }
  }
  return inst;
}

}  // namespace mdpb

#endif  // MDPB_GENERATOR_HPP
