#include "gridmatch/reductions.hpp"

#include <algorithm>
#include <bit>

#include "gridmatch/errors.hpp"
#include "gridmatch/monoid.hpp"

namespace gridmatch {

void require_bitstring(std::string_view s) {
  const auto bad = s.find_first_not_of("01");
  if (bad != std::string_view::npos) {
    throw PreconditionError("not a bitstring: unexpected '" + std::string(1, s[bad]) + "' at position " +
                            std::to_string(bad));
  }
}

std::size_t count_ones(std::string_view s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '1'));
}

std::string bit_double(std::string_view s) {
  std::string out;
  out.reserve(2 * s.size());
  for (char c : s) out.append(2, c);
  return out;
}

std::string parity_source(std::string_view x) {
  require_bitstring(x);
  std::string inner = "0";
  for (char c : x) {
    inner += c;
    inner += '0';
  }
  return "0" + bit_double(inner) + "0";
}

std::vector<std::string> constituent_pairs(std::string_view pairs) {
  if (pairs.size() % 2 != 0) throw PreconditionError("pair string has odd length");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < pairs.size(); i += 2) out.emplace_back(pairs.substr(i, 2));
  return out;
}

bool pair_invariants_hold(std::string_view pairs) {
  if (pairs.size() % 2 != 0) return false;
  const auto ps = constituent_pairs(pairs);
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (ps[i] == "11") return false;
    if (ps[i] == "01" && (i + 1 == ps.size() || ps[i + 1] != "10")) return false;
    if (ps[i] == "10" && (i == 0 || ps[i - 1] != "01")) return false;
  }
  return true;
}

std::vector<BlockKind> constituent_blocks(std::string_view pairs) {
  require_bitstring(pairs);
  std::vector<BlockKind> out;
  for (const std::string& p : constituent_pairs(pairs)) {
    if (p == "00") {
      out.push_back(BlockKind::B00);
    } else if (p == "01") {
      out.push_back(BlockKind::B01);
    } else if (p == "10") {
      out.push_back(BlockKind::B10);
    } else {
      throw PreconditionError("constituent pair 11 has no block");
    }
  }
  return out;
}

GridGraph blocks_to_graph(const std::vector<BlockKind>& blocks) {
  if (blocks.empty()) throw PreconditionError("no blocks");
  GridGraph g = make_block(blocks.front());
  for (std::size_t i = 1; i < blocks.size(); ++i) {
    g = join_block(std::move(g), block_shape(blocks[i - 1]).right_ports, blocks[i]);
  }
  return g;
}

GridGraph parity_to_graph(std::string_view x) {
  const std::string pairs = parity_source(x);
  if (!pair_invariants_hold(pairs)) throw InvariantError("parity_source produced an invalid pair string");
  return blocks_to_graph(constituent_blocks(pairs));
}

bool modp_membership(std::string_view z, std::size_t p) {
  if (p == 0) throw PreconditionError("modulus must be positive");
  return count_ones(z) % p != 0;
}

GridGraph h_graph(std::string_view z, const GroupCertificate& cert) {
  require_bitstring(z);
  GridGraph out = cert.b;
  for (char c : z) out = concat(out, c == '1' ? cert.a : cert.b);
  return out;
}

GridGraph pendant_variant(const GridGraph& g, RowMask left_kept, RowMask right_exposed) {
  if (g.length() < 2) throw PreconditionError("pendant_variant needs at least two columns");
  const int last = g.length() - 1;
  const RowMask left = g.column(0);
  const RowMask right = g.column(last);
  if ((left_kept & ~left) != 0 || (right_exposed & ~right) != 0) {
    throw PreconditionError("pendant_variant: profile rows are not boundary vertices");
  }
  GridGraph out(g.width(), g.length() + 2);
  out.paste(g, 1);
  for (RowMask m = left & ~left_kept; m != 0; m &= m - 1) {
    const int row = std::countr_zero(m);
    out.add_vertex({0, row});
    out.add_edge({0, row}, {1, row});
  }
  for (RowMask m = right_exposed; m != 0; m &= m - 1) {
    const int row = std::countr_zero(m);
    out.add_vertex({last + 2, row});
    out.add_edge({last + 1, row}, {last + 2, row});
  }
  return out;
}

std::size_t modp_part_count(const GroupCertificate& cert) {
  return cert.identity.is_rel() ? cert.identity.pairs().size() : 0;
}

GridGraph modp_to_graph(std::string_view z, const GroupCertificate& cert) {
  if (!cert.identity.is_rel()) throw PreconditionError("certificate identity has no boundary relation");
  const GridGraph h = h_graph(z, cert);
  const auto pairs = cert.identity.pairs();
  if (pairs.empty()) throw PreconditionError("certificate identity has an empty relation");
  const int part_len = h.length() + 2;
  const int parts = static_cast<int>(pairs.size());
  GridGraph out(h.width(), parts * part_len + (parts - 1));
  for (int i = 0; i < parts; ++i) {
    out.paste(pendant_variant(h, pairs[i].first, pairs[i].second), i * (part_len + 1));
  }
  return out;
}

}  // namespace gridmatch
