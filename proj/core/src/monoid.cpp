#include "gridmatch/monoid.hpp"

#include <bit>
#include <deque>
#include <unordered_map>
#include <unordered_set>

#include "gridmatch/errors.hpp"

namespace gridmatch {

namespace {

/// A single column is both boundaries at once; (X', Y') is in R iff the
/// column minus (X \ X') and minus Y' is perfectly matchable by its vertical edges.
MonoidElement single_column_element(const GridGraph& g) {
  const RowMask occ = g.column(0);
  const int k = std::popcount(occ);
  if (k > kMaxBoundaryVertices) throw BoundExceeded("column too tall for a relation");
  std::unordered_set<RowMask> matchable;
  for (const Transition& t : slice_transitions(occ, 0, 0, g.edges_from_column(0))) matchable.insert(t.left_cover);
  Relation r(k, k);
  for (std::size_t x = 0; x < r.rows(); ++x) {
    const RowMask kept = subset_rows(occ, x);
    for (std::size_t y = 0; y < r.cols(); ++y) {
      const RowMask remaining = kept & ~subset_rows(occ, y);
      if (matchable.contains(remaining)) r.set(x, y);
    }
  }
  return MonoidElement::rel(occ, occ, std::move(r));
}

}  // namespace

MonoidElement element_of(const GridGraph& g, EvalLimits limits) {
  if (g.width() > std::min(limits.max_width, kEvalMaxWidth)) {
    throw BoundExceeded("element_of limited to width " + std::to_string(limits.max_width));
  }
  if (g.length() == 1) return single_column_element(g);
  return slice_range_element(g, 0, g.length() - 1);
}

MonoidElement power(const MonoidElement& a, std::size_t k) {
  if (k == 0) throw PreconditionError("power exponent must be positive");
  MonoidElement result = MonoidElement::one();
  MonoidElement base = a;
  while (k > 0) {
    if (k & 1U) result = compose(result, base);
    k >>= 1;
    if (k > 0) base = compose(base, base);
  }
  return result;
}

PowerProfile power_profile(const MonoidElement& a, std::size_t cap) {
  if (a.is_zero()) throw PreconditionError("power_profile of Zero");
  if (a.is_rel() && a.left() != a.right()) throw PreconditionError("element is not composable with itself");
  std::unordered_map<MonoidElement, std::size_t, MonoidElementHash> seen;
  std::vector<MonoidElement> powers;  // powers[i] = a^(i+1)
  MonoidElement current = a;
  for (std::size_t exponent = 1; exponent <= cap; ++exponent) {
    if (auto it = seen.find(current); it != seen.end()) {
      PowerProfile p;
      p.base = a;
      p.index = it->second;
      p.period = exponent - it->second;
      p.cycle.assign(powers.begin() + static_cast<std::ptrdiff_t>(p.index - 1), powers.end());
      return p;
    }
    seen.emplace(current, exponent);
    powers.push_back(current);
    current = compose(current, a);
  }
  throw BoundExceeded("no repeated power within cap " + std::to_string(cap));
}

std::optional<CyclicGroup> extract_group(const PowerProfile& profile) {
  if (profile.period <= 1) return std::nullopt;
  const std::size_t rho = profile.period;
  const std::size_t lambda = profile.index;
  CyclicGroup g;
  g.order = rho;
  g.identity_exponent = ((lambda + rho - 1) / rho) * rho;
  auto cycle_at = [&](std::size_t exponent) -> const MonoidElement& {
    return profile.cycle[(exponent - lambda) % rho];
  };
  g.identity = cycle_at(g.identity_exponent);
  g.prime = smallest_prime_factor(rho);
  g.generator_exponent = g.identity_exponent + rho / g.prime;
  g.prime_generator = cycle_at(g.generator_exponent);
  for (std::size_t i = 0; i < rho; ++i) g.elements.push_back(cycle_at(g.identity_exponent + i));
  return g;
}

std::optional<CyclicGroup> extract_group(const MonoidElement& a, std::size_t cap) {
  return extract_group(power_profile(a, cap));
}

bool is_group(std::span<const MonoidElement> elements, const MonoidElement& identity) {
  std::unordered_map<MonoidElement, std::size_t, MonoidElementHash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], i);
  if (index.size() != elements.size() || !index.contains(identity)) return false;
  const std::size_t n = elements.size();
  std::vector<std::size_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = index.find(compose(elements[i], elements[j]));
      if (it == index.end()) return false;
      table[i * n + j] = it->second;
    }
  }
  const std::size_t e = index.at(identity);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[e * n + i] != i || table[i * n + e] != i) return false;
    bool has_inverse = false;
    for (std::size_t j = 0; j < n && !has_inverse; ++j) has_inverse = table[i * n + j] == e && table[j * n + i] == e;
    if (!has_inverse) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        if (table[table[i * n + j] * n + k] != table[i * n + table[j * n + k]]) return false;
      }
    }
  }
  return true;
}

Closure closure(std::span<const MonoidElement> generators, std::size_t budget) {
  Closure out;
  std::unordered_set<MonoidElement, MonoidElementHash> seen;
  std::deque<std::size_t> frontier;
  auto admit = [&](const MonoidElement& m) {
    if (seen.contains(m)) return;
    if (out.elements.size() >= budget) {
      out.truncated = true;
      return;
    }
    seen.insert(m);
    out.elements.push_back(m);
    frontier.push_back(out.elements.size() - 1);
  };
  for (const MonoidElement& g : generators) admit(g);
  while (!frontier.empty() && !out.truncated) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (const MonoidElement& g : generators) {
      admit(compose(g, out.elements[i]));
      if (out.truncated) break;
    }
  }
  return out;
}

bool is_prime(std::size_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

std::size_t smallest_prime_factor(std::size_t n) {
  if (n < 2) return 0;
  for (std::size_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

std::size_t smallest_odd_prime_factor(std::size_t n) {
  if (n == 0) return 0;
  while (n % 2 == 0) n /= 2;
  return smallest_prime_factor(n);
}

std::optional<std::size_t> order_relative_to(const MonoidElement& g, const MonoidElement& e, std::size_t cap) {
  if (compose(e, e) != e || compose(e, g) != g || compose(g, e) != g) return std::nullopt;
  MonoidElement current = g;
  for (std::size_t t = 1; t <= cap; ++t) {
    if (current == e) return t;
    current = compose(current, g);
  }
  return std::nullopt;
}

}  // namespace gridmatch
