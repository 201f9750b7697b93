#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "gridmatch/grid_graph.hpp"
#include "gridmatch/match_engine.hpp"
#include "gridmatch/monoid_element.hpp"

namespace gridmatch {

/// The monoid element of a whole graph: the fold of its slice elements. A
/// single-column graph is evaluated directly from the definition.
MonoidElement element_of(const GridGraph& g, EvalLimits limits = {});

/// a^k for k >= 1.
MonoidElement power(const MonoidElement& a, std::size_t k);

/// Eventual periodicity of the powers of an element: a^(index + period) ==
/// a^index with index and period minimal. cycle[i] = a^(index + i).
struct PowerProfile {
  MonoidElement base;
  std::size_t index = 1;
  std::size_t period = 1;
  std::vector<MonoidElement> cycle;
};

inline constexpr std::size_t kDefaultPowerCap = 10'000;

/// Throws PreconditionError for Zero or an element with X != Y, and
/// BoundExceeded if no repeat shows up among the first `cap` powers.
PowerProfile power_profile(const MonoidElement& a, std::size_t cap = kDefaultPowerCap);

/// The cyclic group carried by the power cycle of an element.
struct CyclicGroup {
  MonoidElement identity;           // the idempotent a^identity_exponent
  std::size_t identity_exponent = 0;
  std::size_t order = 0;            // equals the period
  std::size_t prime = 0;            // smallest prime factor of order
  MonoidElement prime_generator;    // identity * a^(order / prime), of exact order `prime`
  std::size_t generator_exponent = 0;
  std::vector<MonoidElement> elements;  // identity * a^i for i in [0, order)
};

/// None when the period is 1 (the group is trivial).
std::optional<CyclicGroup> extract_group(const PowerProfile& profile);
std::optional<CyclicGroup> extract_group(const MonoidElement& a, std::size_t cap = kDefaultPowerCap);

/// Multiplication-table check of closure, identity, inverses and associativity.
bool is_group(std::span<const MonoidElement> elements, const MonoidElement& identity);

struct Closure {
  std::vector<MonoidElement> elements;  // generators first, then in discovery order
  bool truncated = false;
};

inline constexpr std::size_t kDefaultClosureBudget = 100'000;

/// Everything reachable from the generators by left multiplication, capped at
/// `budget` distinct elements.
Closure closure(std::span<const MonoidElement> generators, std::size_t budget = kDefaultClosureBudget);

bool is_prime(std::size_t n);
/// 0 for n < 2.
std::size_t smallest_prime_factor(std::size_t n);
/// Smallest odd prime factor, or 0 when n is a power of two.
std::size_t smallest_odd_prime_factor(std::size_t n);

/// Order of g inside the group whose identity is e, i.e. the least t >= 1
/// with g^t == e, provided e*g == g*e == g. nullopt otherwise or past `cap`.
std::optional<std::size_t> order_relative_to(const MonoidElement& g, const MonoidElement& e,
                                             std::size_t cap = kDefaultPowerCap);

}  // namespace gridmatch
