#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "gridmatch/certificate.hpp"
#include "gridmatch/decomp.hpp"
#include "gridmatch/errors.hpp"
#include "gridmatch/explorer.hpp"
#include "gridmatch/graph_format.hpp"
#include "gridmatch/match_engine.hpp"
#include "gridmatch/monoid.hpp"
#include "gridmatch/random_graph.hpp"
#include "gridmatch/reductions.hpp"
#include "gridmatch/shrink.hpp"

namespace gridmatch::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path, std::istream& in) {
  if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return read_text(path);
}

void write_output(const std::string& path, std::string_view text, std::ostream& out) {
  if (path == "-") {
    out << text;
  } else {
    write_text(path, text);
  }
}

std::string hex_id(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  std::ostringstream s;
  s << std::hex << h;
  return s.str();
}

std::vector<std::string> strings_up_to(int max_n) {
  std::vector<std::string> all{""};
  for (int n = 1; n <= max_n; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      std::string s(static_cast<std::size_t>(n), '0');
      for (int i = 0; i < n; ++i) {
        if ((m >> (n - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = '1';
      }
      all.push_back(std::move(s));
    }
  }
  return all;
}

bool engines_disagree(const GridGraph& g) {
  try {
    return evaluate_pm(g) != brute_force_pm(g, {kOracleMaxVertices});
  } catch (const std::exception&) {
    return false;
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

GroupCertificate load_certificate(const std::string& path, std::istream& in) {
  if (path.empty()) throw UsageError("--cert is required");
  return parse_certificate(read_input(path, in));
}

// --- commands -------------------------------------------------------------------

int cmd_gen_parity(const RunConfig& c, std::ostream& out) {
  const GridGraph g = parity_to_graph(c.input);
  const std::vector<std::string> comments{"generator: gen-parity", "source x=" + c.input,
                                          "pairs " + parity_source(c.input)};
  write_output(c.output, serialize_graph(g, comments), out);
  return kExitOk;
}

int cmd_gen_modp(const RunConfig& c, std::istream& in, std::ostream& out) {
  require_bitstring(c.input);
  const std::string cert_text = read_input(c.cert_path, in);
  const GroupCertificate cert = parse_certificate(cert_text);
  const CertificateCheck check = check_certificate(cert);
  if (!check.group_ok()) throw PreconditionError("certificate rejected: " + check.failure);
  const GridGraph g = modp_to_graph(c.input, cert);
  const std::vector<std::string> comments{
      "generator: gen-modp", "source z=" + c.input,
      "certificate " + hex_id(serialize_certificate(cert)) + " p=" + std::to_string(cert.p),
      "parts " + std::to_string(modp_part_count(cert))};
  write_output(c.output, serialize_graph(g, comments), out);
  return kExitOk;
}

int cmd_solve(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const GridGraph g = parse_graph(read_input(c.input, in));
  bool answer = false;
  if (c.engine == "monoid") {
    answer = evaluate_pm(g);
  } else if (c.engine == "brute") {
    answer = brute_force_pm(g, {kOracleMaxVertices});
  } else {
    const bool fast = evaluate_pm(g);
    const bool slow = brute_force_pm(g, {kOracleMaxVertices});
    if (fast != slow) {
      const GridGraph small = shrink_counterexample(g, engines_disagree);
      err << "engine disagreement: monoid=" << yes_no(fast) << " brute=" << yes_no(slow) << "\n";
      err << "shrunk counterexample:\n" << serialize_graph(small);
      return kExitInvariant;
    }
    answer = fast;
  }
  out << "PM: " << yes_no(answer) << "\n";
  if (c.exit_code) return answer ? kExitOk : kExitNo;
  return kExitOk;
}

int cmd_explore(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto pool = default_pool(c.width, c.seed);
  DiscoveryOptions options;
  options.budget = c.budget;
  options.odd_only = !c.allow_even;
  const DiscoveryResult r = discover_certificate(c.width, pool, options);
  if (r.certificate) {
    const std::vector<std::string> comments{"explore width=" + std::to_string(c.width) +
                                            " seed=" + std::to_string(c.seed)};
    const std::string text = serialize_certificate(*r.certificate, comments);
    if (c.output == "-") {
      out << text;
    } else {
      write_text(c.output, text);
      out << "certificate p=" << r.certificate->p << " written to " << c.output << "\n";
    }
  } else {
    out << "none\n";
  }
  std::ostream& stats = r.certificate && c.output == "-" ? err : out;
  stats << "pool " << pool.size() << "\n";
  stats << "elements " << r.stats.elements << "\n";
  stats << "profiled " << r.stats.profiled << "\n";
  stats << "aperiodic " << r.stats.aperiodic << "\n";
  for (const auto& [order, count] : r.stats.group_orders) {
    stats << "groups order=" << order << " count=" << count << "\n";
  }
  stats << "equalize failures " << r.stats.equalize_failures << "\n";
  stats << "budget exhausted " << yes_no(r.stats.budget_exhausted) << "\n";
  return kExitOk;
}

int cmd_equalize(const RunConfig& c, std::istream& in, std::ostream& out) {
  if (c.a_path.empty() || c.b_path.empty()) throw UsageError("equalize needs --a and --b");
  const GridGraph a = parse_graph(read_input(c.a_path, in));
  const GridGraph b = parse_graph(read_input(c.b_path, in));
  auto [a2, b2] = equalize_lengths(a, b);
  const auto order = order_relative_to(element_of(a2), element_of(b2));
  out << "lengths " << a.length() << " " << b.length() << " -> " << a2.length() << " " << b2.length() << "\n";
  out << "order " << (order ? std::to_string(*order) : "?") << "\n";
  if (!c.out_a.empty()) write_text(c.out_a, serialize_graph(a2));
  if (!c.out_b.empty()) write_text(c.out_b, serialize_graph(b2));
  if (c.out_a.empty() && c.out_b.empty()) out << "A\n" << serialize_graph(a2) << "B\n" << serialize_graph(b2);
  return kExitOk;
}

int cmd_treedecomp(const RunConfig& c, std::istream& in, std::ostream& out) {
  const GridGraph g = parse_graph(read_input(c.input, in));
  LinearArrangement arr;
  std::string kind = "gadget";
  try {
    arr = linearize(g);
  } catch (const PreconditionError&) {
    arr = column_major_arrangement(g);
    kind = "column-major";
  }
  const PathDecomposition pd = path_decomposition(g, arr);
  if (!verify_decomposition(g, pd)) throw InvariantError("path decomposition failed verification");
  out << "arrangement " << kind << "\n";
  out << "cutwidth " << cutwidth_of(g, arr) << "\n";
  out << "width " << pd.width() << "\n";
  out << "bags " << pd.bags.size() << "\n";
  if (c.term_out.empty()) {
    out << term_file(pd);
  } else {
    write_text(c.term_out, term_file(pd));
  }
  return kExitOk;
}

int cmd_verify_parity(const RunConfig& c, std::ostream& out, std::ostream& err) {
  constexpr int kBruteUpTo = 6;
  std::size_t cases = 0;
  for (const std::string& x : strings_up_to(c.max_n)) {
    const GridGraph g = parity_to_graph(x);
    const bool even = count_ones(x) % 2 == 0;
    bool ok = evaluate_pm(g) == even && pair_invariants_hold(parity_source(x));
    if (ok && static_cast<int>(x.size()) <= kBruteUpTo) ok = brute_force_pm(g, {kOracleMaxVertices}) == even;
    if (ok) ok = parse_graph(serialize_graph(g)) == g;
    if (!ok) {
      err << "FAIL x=" << x << "\n";
      return kExitInvariant;
    }
    ++cases;
  }
  out << "OK " << cases << " cases\n";
  return kExitOk;
}

int cmd_verify_modp(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  const GroupCertificate cert = load_certificate(c.cert_path, in);
  const CertificateCheck check = check_certificate(cert);
  if (!check.group_ok()) throw PreconditionError("certificate rejected: " + check.failure);
  if (!check.odd) err << "note: p=" << cert.p << " is even; checking Mod_" << cert.p << " anyway\n";
  std::size_t cases = 0;
  for (const std::string& z : strings_up_to(c.max_n)) {
    if (evaluate_pm(modp_to_graph(z, cert)) == modp_membership(z, cert.p)) {
      err << "FAIL z=" << z << "\n";
      return kExitInvariant;
    }
    ++cases;
  }
  out << "OK " << cases << " cases\n";
  return kExitOk;
}

int cmd_bench(const RunConfig& c, std::ostream& out) {
  Rng rng(c.seed);
  RandomGraphOptions o;
  o.width = c.width;
  o.length = c.length;
  o.planted_matching = c.width % 2 == 0;
  o.edge_percent = 40;
  const GridGraph g = random_graph(rng, o);
  const auto t0 = std::chrono::steady_clock::now();
  const bool pm = evaluate_pm(g);
  const auto t1 = std::chrono::steady_clock::now();
  out << "width " << c.width << " length " << c.length << " edges " << g.edge_count() << "\n";
  out << "PM: " << yes_no(pm) << "\n";
  out << "seconds " << std::chrono::duration<double>(t1 - t0).count() << "\n";
  return kExitOk;
}

}  // namespace

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& status) {
  RunConfig c;
  CLI::App app{"gridmatch: perfect matchings in grid layered planar graphs"};
  app.require_subcommand(1);

  auto* gen_parity = app.add_subcommand("gen-parity", "emit the gadget graph of a bitstring");
  gen_parity->add_option("x", c.input, "bitstring")->required();
  gen_parity->add_option("-o,--output", c.output, "output path, - for stdout");

  auto* gen_modp = app.add_subcommand("gen-modp", "emit the Mod_p probe graph of a bitstring");
  gen_modp->add_option("z", c.input, "bitstring")->required();
  gen_modp->add_option("--cert", c.cert_path, "certificate file")->required();
  gen_modp->add_option("-o,--output", c.output, "output path, - for stdout");

  auto* solve = app.add_subcommand("solve", "decide whether a graph has a perfect matching");
  solve->add_option("file", c.input, "graph file, - for stdin")->required();
  solve->add_option("--engine", c.engine, "monoid | brute | both")
      ->check(CLI::IsMember({"monoid", "brute", "both"}));
  solve->add_flag("--exit-code", c.exit_code, "exit 0 for yes, 1 for no");

  auto* explore = app.add_subcommand("explore", "search for an odd-order group certificate");
  explore->add_option("--width", c.width, "graph width")->check(CLI::Range(1, 12));
  explore->add_option("--budget", c.budget, "maximum distinct elements")->check(CLI::PositiveNumber);
  explore->add_option("--seed", c.seed, "pool seed");
  explore->add_flag("--allow-even", c.allow_even, "also accept groups of even order");
  explore->add_option("-o,--output", c.output, "certificate output path");

  auto* equalize = app.add_subcommand("equalize", "bring a generator/identity pair to equal length");
  equalize->add_option("--a", c.a_path, "generator graph")->required();
  equalize->add_option("--b", c.b_path, "identity graph")->required();
  equalize->add_option("--out-a", c.out_a, "where to write A'");
  equalize->add_option("--out-b", c.out_b, "where to write B'");

  auto* treedecomp = app.add_subcommand("treedecomp", "path decomposition from a linear arrangement");
  treedecomp->add_option("file", c.input, "graph file, - for stdin")->required();
  treedecomp->add_option("--term-out", c.term_out, "write the term here instead of stdout");

  auto* verify_parity = app.add_subcommand("verify-parity", "exhaustive check of the parity reduction");
  verify_parity->add_option("--max-n", c.max_n, "longest string")->check(CLI::Range(0, 20));

  auto* verify_modp = app.add_subcommand("verify-modp", "exhaustive check of the Mod_p reduction");
  verify_modp->add_option("--cert", c.cert_path, "certificate file")->required();
  verify_modp->add_option("--max-n", c.max_n, "longest string")->check(CLI::Range(0, 16));

  auto* bench = app.add_subcommand("bench", "time the transfer evaluator on a random graph");
  bench->add_option("--width", c.width, "graph width")->check(CLI::Range(1, kEvalMaxWidth));
  bench->add_option("--length", c.length, "graph length")->check(CLI::PositiveNumber);
  bench->add_option("--seed", c.seed, "graph seed");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    status = app.exit(e, out, err);
    if (status != 0) status = kExitUsage;
    return std::nullopt;
  }
  for (CLI::App* sub : app.get_subcommands()) c.command = sub->get_name();
  status = kExitOk;
  return c;
}

void apply_environment(RunConfig& config) {
  const char* env = std::getenv("GRIDMATCH_SEED");
  if (env == nullptr || *env == '\0') return;
  const std::string_view s(env);
  std::uint64_t seed = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), seed);
  if (ec != std::errc{} || ptr != s.data() + s.size()) throw UsageError("GRIDMATCH_SEED is not an unsigned integer");
  config.seed = seed;
}

int run(const RunConfig& c, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (c.command == "gen-parity") return cmd_gen_parity(c, out);
    if (c.command == "gen-modp") return cmd_gen_modp(c, in, out);
    if (c.command == "solve") return cmd_solve(c, in, out, err);
    if (c.command == "explore") return cmd_explore(c, out, err);
    if (c.command == "equalize") return cmd_equalize(c, in, out);
    if (c.command == "treedecomp") return cmd_treedecomp(c, in, out);
    if (c.command == "verify-parity") return cmd_verify_parity(c, out, err);
    if (c.command == "verify-modp") return cmd_verify_modp(c, in, out, err);
    if (c.command == "bench") return cmd_bench(c, out);
    err << "error: unknown command '" << c.command << "'\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "invariant failure: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::ios_base::failure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kExitOk;
  auto config = parse_args(args, out, err, status);
  if (!config) return status;
  try {
    apply_environment(*config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return run(*config, in, out, err);
}

}  // namespace gridmatch::cli
