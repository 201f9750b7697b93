#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gridmatch/certificate.hpp"
#include "gridmatch/grid_graph.hpp"

namespace gridmatch {

/// Throws PreconditionError unless every character is '0' or '1'.
void require_bitstring(std::string_view s);

std::size_t count_ones(std::string_view s);

/// y1 y1 y2 y2 ... yn yn.
std::string bit_double(std::string_view s);

/// 0 bd(0 x1 0 x2 ... 0 xn 0) 0, an even-length string read as 2-bit pairs.
std::string parity_source(std::string_view x);

/// Splits into 2-bit pairs. Throws PreconditionError on odd length.
std::vector<std::string> constituent_pairs(std::string_view pairs);

/// True iff no pair is 11, every 01 is followed by 10 and every 10 follows a 01.
bool pair_invariants_hold(std::string_view pairs);

/// Block kind per pair. Throws PreconditionError on a 11 pair.
std::vector<BlockKind> constituent_blocks(std::string_view pairs);

/// Width-6 gadget graph: one block per pair of parity_source(x), joined left
/// to right. Has a perfect matching iff x has an even number of ones.
GridGraph parity_to_graph(std::string_view x);

/// Builds the gadget graph for an arbitrary block sequence.
GridGraph blocks_to_graph(const std::vector<BlockKind>& blocks);

/// True iff the number of ones is not a multiple of p.
bool modp_membership(std::string_view z, std::size_t p);

/// B followed by A for every 1 and B for every 0, joined with concat.
GridGraph h_graph(std::string_view z, const GroupCertificate& cert);

/// g shifted right by one column with one extra column on each side. A
/// pendant vertex is hung to the left of every left-boundary vertex outside
/// `left_kept` and to the right of every right-boundary vertex in
/// `right_exposed`. Has a perfect matching iff (left_kept, right_exposed) is
/// in the relation of element_of(g). g must have at least two columns.
GridGraph pendant_variant(const GridGraph& g, RowMask left_kept, RowMask right_exposed);

/// Side by side union, separated by one empty column, of the pendant variants
/// of h_graph(z) for every pair in the identity's relation. Has a perfect
/// matching iff z is not in Mod_p.
GridGraph modp_to_graph(std::string_view z, const GroupCertificate& cert);

/// Number of union parts modp_to_graph produces for `cert`.
std::size_t modp_part_count(const GroupCertificate& cert);

}  // namespace gridmatch
