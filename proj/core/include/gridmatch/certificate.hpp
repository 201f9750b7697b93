#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gridmatch/grid_graph.hpp"
#include "gridmatch/monoid.hpp"
#include "gridmatch/monoid_element.hpp"

namespace gridmatch {

/// Equal-length graphs A and B where A's element generates a cyclic group of
/// prime order p whose identity is B's element.
struct GroupCertificate {
  GridGraph a;
  GridGraph b;
  std::size_t p = 0;
  MonoidElement generator;  // element_of(a)
  MonoidElement identity;   // element_of(b)
};

/// Outcome of re-deriving every certificate property from the two graphs.
struct CertificateCheck {
  bool same_shape = false;          // equal width and length
  bool concatenable = false;        // all four boundary columns alike, no boundary vertical edges
  bool elements_match = false;      // stored elements equal element_of(a), element_of(b)
  bool identity_idempotent = false;
  bool generator_differs = false;
  bool generator_in_group = false;  // e*g == g*e == g
  bool order_exact = false;         // g^p == e and g^i != e for 0 < i < p
  bool prime = false;
  bool odd = false;
  std::string failure;              // first failed property, empty when ok()

  /// Everything except oddness: a valid prime-order group witness.
  bool group_ok() const {
    return same_shape && concatenable && elements_match && identity_idempotent && generator_differs &&
           generator_in_group && order_exact && prime;
  }
  bool ok() const { return group_ok() && odd; }
};

CertificateCheck check_certificate(const GroupCertificate& cert);

/// Builds a certificate from graphs, computing both elements. Does not check it.
GroupCertificate make_certificate(GridGraph a, GridGraph b, std::size_t p);

/// Extends every vertex of the last column by a horizontal path through
/// `added_cols` new columns. `added_cols` must be even and g must have at least
/// two columns; the element is unchanged.
GridGraph pad_even_tail(const GridGraph& g, int added_cols);

/// Brings A and B to the same length while keeping B's element and keeping
/// A's element a generator of the same order: pad the shorter one when the
/// length difference is even, otherwise first replace the even-length graph
/// G by G.G. Throws PreconditionError if A does not generate a nontrivial
/// group with identity B, and InvariantError if squaring A destroys its order.
std::pair<GridGraph, GridGraph> equalize_lengths(const GridGraph& a, const GridGraph& b);

/// Product of pool graphs along a word, joined with concat.
GridGraph word_graph(std::span<const GridGraph> pool, std::span<const std::size_t> word);

struct ObservedGroup {
  std::size_t order = 0;
  std::vector<std::size_t> word;  // pool indices whose product carries the group
};

struct DiscoveryStats {
  std::size_t elements = 0;   // distinct nonzero elements reached
  std::size_t profiled = 0;   // power profiles computed
  std::size_t aperiodic = 0;  // profiles with period 1
  std::map<std::size_t, std::size_t> group_orders;  // order -> number of distinct groups
  std::size_t equalize_failures = 0;  // groups whose generator lost its order when squared
  bool budget_exhausted = false;
};

struct DiscoveryResult {
  std::optional<GroupCertificate> certificate;
  DiscoveryStats stats;
  std::vector<ObservedGroup> groups;  // one per distinct (identity, order)
};

struct DiscoveryOptions {
  std::size_t budget = kDefaultClosureBudget;
  std::size_t power_cap = kDefaultPowerCap;
  bool stop_at_first = true;
  /// When false, groups of even order also yield certificates (p = 2 allowed).
  bool odd_only = true;
};

/// Breadth-first search over words in the pool. Every reached element is
/// power-profiled; the first group whose order has an odd prime factor q is
/// materialised as graphs (generator of order q and its identity), equalised
/// in length and re-verified. Groups that equalize_lengths cannot handle are
/// counted and skipped. Pool graphs must share `width`, have equal left
/// and right occupancy, and no vertical edges in their boundary columns.
DiscoveryResult discover_certificate(int width, std::span<const GridGraph> pool, DiscoveryOptions options = {});

// Certificate text format:
//
//   cert p=<p>
//   A
//   <graph A in the graph format>
//   B
//   <graph B in the graph format>

std::string serialize_certificate(const GroupCertificate& cert, std::span<const std::string> comments = {});
/// Recomputes both elements; does not run check_certificate.
GroupCertificate parse_certificate(std::string_view text);

}  // namespace gridmatch
