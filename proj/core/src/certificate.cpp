#include "gridmatch/certificate.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

#include "gridmatch/errors.hpp"
#include "gridmatch/graph_format.hpp"

namespace gridmatch {

namespace {

bool has_boundary_vertical(const GridGraph& g) {
  for (int col : {0, g.length() - 1}) {
    for (const Edge& e : g.edges_from_column(col)) {
      if (e.vertical()) return true;
    }
  }
  return false;
}

}  // namespace

GroupCertificate make_certificate(GridGraph a, GridGraph b, std::size_t p) {
  MonoidElement g = element_of(a);
  MonoidElement e = element_of(b);
  return GroupCertificate{std::move(a), std::move(b), p, std::move(g), std::move(e)};
}

CertificateCheck check_certificate(const GroupCertificate& cert) {
  CertificateCheck c;
  auto fail = [&c](bool ok, const char* what) {
    if (!ok && c.failure.empty()) c.failure = what;
    return ok;
  };
  const GridGraph& a = cert.a;
  const GridGraph& b = cert.b;
  c.same_shape = fail(a.width() == b.width() && a.length() == b.length(), "A and B differ in width or length");
  const RowMask occ = a.column(0);
  c.concatenable = fail(a.column(a.length() - 1) == occ && b.column(0) == occ && b.column(b.length() - 1) == occ &&
                            !has_boundary_vertical(a) && !has_boundary_vertical(b),
                        "boundary columns are not concatenable");
  const MonoidElement g = element_of(a);
  const MonoidElement e = element_of(b);
  c.elements_match = fail(g == cert.generator && e == cert.identity, "stored elements disagree with the graphs");
  c.identity_idempotent = fail(e.is_rel() && compose(e, e) == e, "identity is not idempotent");
  c.generator_differs = fail(g != e, "generator equals identity");
  c.generator_in_group = fail(compose(e, g) == g && compose(g, e) == g, "generator is not in the identity's group");
  bool exact = cert.p >= 1;
  if (exact) {
    MonoidElement cur = g;
    for (std::size_t i = 1; i < cert.p && exact; ++i) {
      if (cur == e) exact = false;
      cur = compose(cur, g);
    }
    exact = exact && cur == e;
  }
  c.order_exact = fail(exact, "generator order differs from p");
  c.prime = fail(is_prime(cert.p), "p is not prime");
  c.odd = fail(cert.p % 2 == 1, "p is even");
  return c;
}

GridGraph pad_even_tail(const GridGraph& g, int added_cols) {
  if (added_cols < 0 || added_cols % 2 != 0) {
    throw PreconditionError("pad_even_tail needs a non-negative even column count, got " + std::to_string(added_cols));
  }
  GridGraph out = g;
  if (added_cols == 0) return out;
  if (g.length() < 2) throw PreconditionError("pad_even_tail needs at least two columns");
  const int last = g.length() - 1;
  out.extend(added_cols);
  for (RowMask m = g.column(last); m != 0; m &= m - 1) {
    const int row = std::countr_zero(m);
    for (int c = last + 1; c <= last + added_cols; ++c) {
      out.add_vertex({c, row});
      out.add_edge({c - 1, row}, {c, row});
    }
  }
  return out;
}

std::pair<GridGraph, GridGraph> equalize_lengths(const GridGraph& a, const GridGraph& b) {
  const MonoidElement g = element_of(a);
  const MonoidElement e = element_of(b);
  const auto order = order_relative_to(g, e);
  if (!order || *order < 2) {
    throw PreconditionError("equalize_lengths: A does not generate a nontrivial group with identity B");
  }
  GridGraph a2 = a;
  GridGraph b2 = b;
  const int diff = a.length() - b.length();
  if (diff % 2 != 0) {
    if (a.length() % 2 == 1) {
      b2 = concat(b, b);
    } else {
      a2 = concat(a, a);
    }
  }
  if (a2.length() < b2.length()) {
    a2 = pad_even_tail(a2, b2.length() - a2.length());
  } else if (b2.length() < a2.length()) {
    b2 = pad_even_tail(b2, a2.length() - b2.length());
  }
  if (element_of(b2) != e) throw InvariantError("equalize_lengths changed the identity element");
  const MonoidElement g2 = element_of(a2);
  if (g2 != g && g2 != compose(g, g)) throw InvariantError("equalize_lengths: new generator is neither g nor g^2");
  if (order_relative_to(g2, e) != order) {
    throw InvariantError("equalize_lengths: squaring the generator changed its order from " +
                         std::to_string(*order));
  }
  return {std::move(a2), std::move(b2)};
}

GridGraph word_graph(std::span<const GridGraph> pool, std::span<const std::size_t> word) {
  if (word.empty()) throw PreconditionError("empty word");
  GridGraph out = pool[word.front()];
  for (std::size_t i = 1; i < word.size(); ++i) out = concat(out, pool[word[i]]);
  return out;
}

namespace {

struct SearchNode {
  MonoidElement element;
  std::size_t parent;  // npos for roots
  std::size_t letter;
};

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

std::vector<std::size_t> word_of(const std::vector<SearchNode>& nodes, std::size_t i) {
  std::vector<std::size_t> word;
  for (; i != kNoParent; i = nodes[i].parent) word.push_back(nodes[i].letter);
  return {word.rbegin(), word.rend()};
}

GridGraph repeat(const GridGraph& w, std::size_t times) {
  GridGraph out = w;
  for (std::size_t i = 1; i < times; ++i) out = concat(out, w);
  return out;
}

struct GroupKey {
  MonoidElement identity;
  std::size_t order;
  friend bool operator==(const GroupKey&, const GroupKey&) = default;
};

struct GroupKeyHash {
  std::size_t operator()(const GroupKey& k) const { return k.identity.hash() * 31 + k.order; }
};

}  // namespace

DiscoveryResult discover_certificate(int width, std::span<const GridGraph> pool, DiscoveryOptions options) {
  for (const GridGraph& g : pool) {
    if (g.width() != width) throw PreconditionError("pool graph width differs from the requested width");
    if (g.column(0) != g.column(g.length() - 1)) throw PreconditionError("pool graph is not self-composable");
    if (has_boundary_vertical(g)) throw PreconditionError("pool graph has a vertical edge in a boundary column");
  }

  DiscoveryResult result;
  std::vector<MonoidElement> letters;
  letters.reserve(pool.size());
  for (const GridGraph& g : pool) letters.push_back(element_of(g));

  std::vector<SearchNode> nodes;
  std::unordered_set<MonoidElement, MonoidElementHash> seen;
  std::unordered_set<GroupKey, GroupKeyHash> groups_seen;
  std::deque<std::size_t> frontier;

  // Returns true when the search should stop.
  auto visit = [&](std::size_t i) -> bool {
    ++result.stats.profiled;
    PowerProfile profile;
    try {
      profile = power_profile(nodes[i].element, options.power_cap);
    } catch (const BoundExceeded&) {
      return false;
    }
    auto group = extract_group(profile);
    if (!group) {
      ++result.stats.aperiodic;
      return false;
    }
    if (groups_seen.insert(GroupKey{group->identity, group->order}).second) {
      ++result.stats.group_orders[group->order];
      result.groups.push_back(ObservedGroup{group->order, word_of(nodes, i)});
    }
    const std::size_t q =
        options.odd_only ? smallest_odd_prime_factor(group->order) : smallest_prime_factor(group->order);
    if (q == 0 || result.certificate) return false;

    const auto word = word_of(nodes, i);
    const GridGraph base = word_graph(pool, word);
    GridGraph a = repeat(base, group->identity_exponent + group->order / q);
    GridGraph b = repeat(base, group->identity_exponent);
    std::pair<GridGraph, GridGraph> equal{GridGraph(1, 1), GridGraph(1, 1)};
    try {
      equal = equalize_lengths(a, b);
    } catch (const InvariantError&) {
      ++result.stats.equalize_failures;
      return false;
    }
    GroupCertificate cert = make_certificate(std::move(equal.first), std::move(equal.second), q);
    const CertificateCheck check = check_certificate(cert);
    if (!(options.odd_only ? check.ok() : check.group_ok())) {
      throw InvariantError("discovered certificate fails verification: " + check.failure);
    }
    result.certificate = std::move(cert);
    return options.stop_at_first;
  };

  auto admit = [&](MonoidElement m, std::size_t parent, std::size_t letter) -> bool {
    if (m.is_zero() || seen.contains(m)) return false;
    if (nodes.size() >= options.budget) {
      result.stats.budget_exhausted = true;
      return true;
    }
    seen.insert(m);
    nodes.push_back(SearchNode{std::move(m), parent, letter});
    frontier.push_back(nodes.size() - 1);
    return visit(nodes.size() - 1);
  };

  bool stop = false;
  for (std::size_t j = 0; j < letters.size() && !stop; ++j) stop = admit(letters[j], kNoParent, j);
  while (!frontier.empty() && !stop) {
    const std::size_t i = frontier.front();
    frontier.pop_front();
    for (std::size_t j = 0; j < letters.size() && !stop; ++j) {
      stop = admit(compose(nodes[i].element, letters[j]), i, j);
    }
  }
  result.stats.elements = nodes.size();
  return result;
}

std::string serialize_certificate(const GroupCertificate& cert, std::span<const std::string> comments) {
  std::string out;
  for (const std::string& c : comments) out += "# " + c + "\n";
  out += "cert p=" + std::to_string(cert.p) + "\n";
  out += "A\n" + serialize_graph(cert.a);
  out += "B\n" + serialize_graph(cert.b);
  return out;
}

GroupCertificate parse_certificate(std::string_view text) {
  std::optional<std::size_t> p;
  std::string a_text, b_text;
  int section = 0;  // 0 = before A, 1 = in A, 2 = in B
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    std::string_view bare = line.substr(0, line.find('#'));
    while (!bare.empty() && (bare.back() == ' ' || bare.back() == '\r' || bare.back() == '\t')) bare.remove_suffix(1);
    while (!bare.empty() && (bare.front() == ' ' || bare.front() == '\t')) bare.remove_prefix(1);
    if (bare.empty()) continue;
    if (section == 0 && bare.starts_with("cert p=")) {
      if (p) throw FormatError("duplicate certificate header");
      try {
        std::size_t used = 0;
        const std::string digits(bare.substr(7));
        p = std::stoull(digits, &used);
        if (used != digits.size()) throw FormatError("bad prime");
      } catch (const std::logic_error&) {
        throw FormatError("certificate header must be 'cert p=<p>'");
      }
    } else if (bare == "A" && section == 0) {
      if (!p) throw FormatError("'A' section before 'cert' header");
      section = 1;
    } else if (bare == "B" && section == 1) {
      section = 2;
    } else if (section == 1) {
      a_text += std::string(line) + "\n";
    } else if (section == 2) {
      b_text += std::string(line) + "\n";
    } else {
      throw FormatError("unexpected line in certificate: '" + std::string(line) + "'");
    }
  }
  if (!p || section != 2) throw FormatError("certificate needs a 'cert p=' header and A and B sections");
  return make_certificate(parse_graph(a_text), parse_graph(b_text), *p);
}

}  // namespace gridmatch
