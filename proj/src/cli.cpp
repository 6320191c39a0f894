#include "fatpoints/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fatpoints/acm.hpp"
#include "fatpoints/border.hpp"
#include "fatpoints/classify.hpp"
#include "fatpoints/io.hpp"
#include "fatpoints/oracle.hpp"
#include "fatpoints/partition.hpp"
#include "fatpoints/sweep.hpp"

namespace fatpoints::cli {

namespace {

using nlohmann::json;

long long parse_int(const std::string& text, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size())
    fail(Errc::BadArgument, std::string("cannot parse ") + what + " from '" +
                                text + "'");
  return v;
}

// "IxJ" -> (I, J); both parts non-negative integers.
std::pair<long long, long long> parse_pair(const std::string& spec, char sep,
                                           const char* what) {
  auto k = spec.find(sep);
  if (k == std::string::npos)
    fail(Errc::BadArgument, std::string(what) + " must look like I" + sep +
                                "J, got '" + spec + "'");
  long long a = parse_int(spec.substr(0, k), what);
  long long b = parse_int(spec.substr(k + 1), what);
  if (a < 0 || b < 0)
    fail(Errc::BadArgument, std::string(what) + " parts must be >= 0");
  return {a, b};
}

std::uint64_t env_prime() {
  const char* e = std::getenv("FATPOINTS_PRIME");
  if (!e) return kDefaultPrime;
  std::string text(e);
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || p != text.data() + text.size() || v == 0)
    fail(Errc::BadPrime, "FATPOINTS_PRIME is not a positive integer: '" +
                             text + "'");
  return v;
}

// --exact wins, then an explicit --prime, then the environment override,
// then the built-in default.
FieldConfig make_field(bool exact, bool prime_given, std::uint64_t prime) {
  if (exact) return FieldConfig::exact();
  return FieldConfig::modular(prime_given ? prime : env_prime());
}

std::string tuple_str(const std::vector<long long>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(t[k]);
  }
  return s + ")";
}

std::string tuples_str(const std::vector<std::vector<long long>>& ts) {
  std::string s;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    if (k) s += " ";
    s += tuple_str(ts[k]);
  }
  return s;
}

json partition_json(const Partition& p) { return json(p.parts()); }

std::string bidegree_set_str(const std::vector<BiDegree>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ",";
    s += "(" + std::to_string(v[k].i) + "," + std::to_string(v[k].j) + ")";
  }
  return s + "}";
}

std::string twists_str(const std::vector<BiDegree>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += "(+)";
    s += "R(" + std::to_string(-v[k].i) + "," + std::to_string(-v[k].j) + ")";
  }
  return s;
}

json bidegrees_json(const std::vector<BiDegree>& v) {
  json a = json::array();
  for (const auto& d : v) a.push_back({d.i, d.j});
  return a;
}

BiDegree default_window(const GridScheme& s) {
  AlphaBeta ab = alpha_beta(s);
  return {ab.m, ab.m_prime};
}

BiDegree resolve_window(const GridScheme& s, const std::string& window_flag) {
  if (window_flag.empty()) return default_window(s);
  auto [i, j] = parse_pair(window_flag, 'x', "--window");
  return {static_cast<int>(i), static_cast<int>(j)};
}

int do_partitions(const std::string& file, bool use_beta,
                  const std::string& format, std::ostream& out) {
  GridScheme s = load_scheme(file);
  AlphaBeta ab = alpha_beta(s);
  const auto& raw = use_beta ? ab.beta_raw : ab.alpha_raw;
  const Partition& sorted = use_beta ? ab.beta : ab.alpha;
  int len = use_beta ? ab.m_prime : ab.m;
  const char* name = use_beta ? "beta" : "alpha";
  if (format == "json") {
    json j{{"name", name},
           {"raw", raw},
           {"sorted", sorted.parts()},
           {"length", len}};
    out << j.dump(2) << "\n";
  } else {
    out << name << "_raw: " << tuples_str(raw) << "\n";
    out << name << ": " << to_string(sorted) << "\n";
    out << (use_beta ? "m' = " : "m = ") << len << "\n";
  }
  return 0;
}

int do_border(const std::string& file, const std::string& format,
              std::ostream& out) {
  GridScheme s = load_scheme(file);
  Border b = border(s);
  if (format == "json") {
    json j{{"bc", b.bc}, {"br", b.br}, {"eventual", b.eventual()}};
    out << j.dump(2) << "\n";
  } else {
    auto row = [&](const char* name, const std::vector<long long>& v) {
      out << name << ":";
      for (long long x : v) out << " " << x;
      out << "\n";
    };
    row("B_C", b.bc);
    row("B_R", b.br);
    out << "eventual: " << b.eventual() << "\n";
  }
  return 0;
}

int do_hilbert(const std::string& file, const std::string& window_flag,
               bool oracle, bool exact, bool prime_given, std::uint64_t prime,
               const std::string& format, std::ostream& out) {
  GridScheme s = load_scheme(file);
  BiDegree w = resolve_window(s, window_flag);
  HilbertTable t =
      oracle ? oracle_hilbert_table(s, w, make_field(exact, prime_given, prime))
             : combinatorial_hilbert(s, w);
  if (format == "json")
    out << table_to_json(t).dump(2) << "\n";
  else
    out << render_table_pretty(t);
  return 0;
}

int do_acm(const std::string& file, const std::string& format,
           std::ostream& out) {
  GridScheme s = load_scheme(file);
  AcmCertificate cert = is_acm(s);
  if (format == "json") {
    json j{{"acm", cert.acm},
           {"alpha_star", partition_json(cert.alpha_star)},
           {"beta", partition_json(cert.beta)},
           {"mismatch_index", nullptr},
           {"incomparable", nullptr}};
    if (cert.mismatch_index) j["mismatch_index"] = *cert.mismatch_index;
    if (cert.incomparable)
      j["incomparable"] = {cert.incomparable->first, cert.incomparable->second};
    out << j.dump(2) << "\n";
  } else if (cert.acm) {
    out << "ACM: α* = β = " << to_string(cert.beta) << "\n";
    out << "S_Z totally ordered: yes\n";
  } else {
    out << "NOT ACM: α* = " << to_string(cert.alpha_star)
        << " ≠ β = " << to_string(cert.beta) << "\n";
    if (cert.mismatch_index)
      out << "first mismatch at position " << *cert.mismatch_index
          << " (0-based)\n";
    out << "S_Z totally ordered: no";
    if (cert.incomparable)
      out << "; incomparable pair " << tuple_str(cert.incomparable->first)
          << " vs " << tuple_str(cert.incomparable->second);
    out << "\n";
  }
  return 0;
}

int do_resolution(const std::string& file, const std::string& format,
                  std::ostream& out) {
  GridScheme s = load_scheme(file);
  Resolution r = resolution(s);
  if (format == "json") {
    json j{{"corners", bidegrees_json(r.corners)},
           {"vertices", bidegrees_json(r.vertices)}};
    out << j.dump(2) << "\n";
  } else {
    out << "C = " << bidegree_set_str(r.corners)
        << "  V = " << bidegree_set_str(r.vertices) << "\n";
    out << "0 -> " << twists_str(r.vertices) << " -> " << twists_str(r.corners)
        << " -> I_Z -> 0\n";
  }
  return 0;
}

int do_classify(const std::string& file, const std::string& format,
                std::ostream& out) {
  GridScheme s = load_scheme(file);
  Section5Report rep = check_section5(s);  // throws on theorem violation
  const Classification& c = rep.cls;
  if (format == "json") {
    json checks = json::array();
    for (const auto& ch : rep.checks)
      checks.push_back({{"name", ch.name},
                        {"applicable", ch.applicable},
                        {"holds", ch.holds}});
    json j{{"max_mult", c.max_mult},
           {"homogeneous", c.homogeneous},
           {"almost_homogeneous", c.almost_homogeneous},
           {"quasi_homogeneous", c.quasi_homogeneous},
           {"support_ci", c.support_ci},
           {"support_acm", c.support_acm},
           {"quasi_t", c.quasi_t},
           {"acm", rep.acm},
           {"checks", checks},
           {"notes", rep.notes}};
    out << j.dump(2) << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "max multiplicity: " << c.max_mult << "\n";
    out << "homogeneous: " << yn(c.homogeneous) << "\n";
    out << "almost homogeneous: " << yn(c.almost_homogeneous) << "\n";
    out << "quasi-homogeneous: " << yn(c.quasi_homogeneous);
    if (c.quasi_homogeneous) out << "  type " << tuple_str(c.quasi_t);
    out << "\n";
    out << "support complete intersection: " << yn(c.support_ci) << "\n";
    out << "support ACM: " << yn(c.support_acm) << "\n";
    out << "ACM: " << yn(rep.acm) << "\n";
    out << "checks:\n";
    for (const auto& ch : rep.checks)
      out << "  " << ch.name << ": "
          << (!ch.applicable ? "n/a" : ch.holds ? "holds" : "VIOLATED")
          << "\n";
    for (const auto& n : rep.notes) out << "note: " << n << "\n";
  }
  return 0;
}

int do_oracle(const std::string& file, const std::string& at, bool exact,
              bool prime_given, std::uint64_t prime, const std::string& format,
              std::ostream& out) {
  GridScheme s = load_scheme(file);
  auto [i, j] = parse_pair(at, ',', "--at");
  long long v = oracle_hilbert_value(s, static_cast<int>(i),
                                     static_cast<int>(j),
                                     make_field(exact, prime_given, prime));
  if (format == "json") {
    json jj{{"i", i}, {"j", j}, {"value", v}};
    out << jj.dump(2) << "\n";
  } else {
    out << v << "\n";
  }
  return 0;
}

int do_verify(const std::string& file, bool exact, bool prime_given,
              std::uint64_t prime, bool seed_given, std::uint64_t seed,
              const std::string& format, std::ostream& out) {
  GridScheme s = load_scheme(file);
  if (!s.has_coords())
    s = seed_given ? with_seeded_coords(s, seed) : with_default_coords(s);
  FieldConfig cfg = make_field(exact, prime_given, prime);
  BorderReport br = verify_border(s, cfg);
  AcmEquivalenceReport ar = verify_acm_equivalence(s, cfg);
  bool ok = br.ok() && ar.agree();
  if (format == "json") {
    json mism = json::array();
    for (std::size_t k : br.mismatches) {
      const auto& c = br.checks[k];
      mism.push_back(
          {{"i", c.i}, {"j", c.j}, {"expected", c.expected}, {"got", c.got}});
    }
    json j{{"border_ok", br.ok()},
           {"border_checked", br.checks.size()},
           {"border_mismatches", mism},
           {"artinian_staircase", ar.artinian_staircase},
           {"alpha_star_eq_beta", ar.alpha_star_eq_beta},
           {"s_totally_ordered", ar.s_totally_ordered},
           {"agree", ar.agree()},
           {"ok", ok}};
    out << j.dump(2) << "\n";
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << "border: " << (br.ok() ? "ok" : "MISMATCH") << " ("
        << br.checks.size() << " values checked)\n";
    for (std::size_t k : br.mismatches) {
      const auto& c = br.checks[k];
      out << "  H(" << c.i << "," << c.j << ") expected " << c.expected
          << ", oracle got " << c.got << "\n";
    }
    out << "acm equivalence: staircase=" << yn(ar.artinian_staircase)
        << " alpha*=beta=" << yn(ar.alpha_star_eq_beta)
        << " S_Z ordered=" << yn(ar.s_totally_ordered) << " -> "
        << (ar.agree() ? "agree" : "DISAGREE") << "\n";
  }
  return ok ? 0 : 1;
}

int do_sweep(const std::string& max_grid, int max_mult, bool no_oracle,
             bool prime_given, std::uint64_t prime, std::uint64_t seed,
             int threads, const std::string& format, std::ostream& out) {
  auto [r, t] = parse_pair(max_grid, 'x', "--max-grid");
  if (r < 1 || t < 1 || max_mult < 1)
    fail(Errc::BadArgument, "sweep bounds must be >= 1");
  SweepOptions opt;
  opt.max_rows = static_cast<int>(r);
  opt.max_cols = static_cast<int>(t);
  opt.max_mult = max_mult;
  opt.prime = prime_given ? prime : env_prime();
  opt.seed = seed;
  opt.threads = threads;
  opt.oracle_checks = !no_oracle;
  SweepSummary sum = run_sweep(opt);
  if (format == "json") {
    json j{{"schemes", sum.schemes},
           {"acm", sum.acm},
           {"canonical", sum.canonical},
           {"oracle_tables", sum.oracle_tables},
           {"majorization_failures", sum.majorization_failures},
           {"duality_failures", sum.duality_failures},
           {"acm_cross_failures", sum.acm_cross_failures},
           {"staircase_failures", sum.staircase_failures},
           {"resolution_failures", sum.resolution_failures},
           {"line_failures", sum.line_failures},
           {"table_invariant_failures", sum.table_invariant_failures},
           {"section5_violations", sum.section5_violations},
           {"border_failures", sum.border_failures},
           {"oracle_acm_disagreements", sum.oracle_acm_disagreements},
           {"acm_table_failures", sum.acm_table_failures},
           {"delta_sum_failures", sum.delta_sum_failures},
           {"oracle_invariant_failures", sum.oracle_invariant_failures},
           {"elapsed_ms", sum.elapsed_ms},
           {"ok", sum.ok()}};
    out << j.dump(2) << "\n";
  } else {
    out << sum.to_string() << "\n";
  }
  return sum.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "fat point schemes on a grid in P^1 x P^1: Hilbert functions, "
      "ACM certificates, minimal free resolutions, and a linear-algebra "
      "oracle to check them against"};
  app.require_subcommand(1);

  std::string format = "pretty";
  auto add_format = [&format](CLI::App* sub) {
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
  };
  auto add_file = [](CLI::App* sub, std::string& file) {
    sub->add_option("file", file, "scheme JSON file")->required();
  };

  std::string file;
  std::uint64_t prime = 0;
  bool exact = false;
  std::uint64_t seed = 0;
  auto add_field_flags = [&](CLI::App* sub) {
    CLI::Option* p = sub->add_option(
        "--prime", prime, "odd prime modulus for the oracle field");
    sub->add_flag("--exact", exact, "exact integer arithmetic instead of Z/p")
        ->excludes(p);
  };

  CLI::App* alpha_cmd = app.add_subcommand(
      "alpha", "row partition: grouped tuples and the sorted partition");
  add_file(alpha_cmd, file);
  add_format(alpha_cmd);

  CLI::App* beta_cmd =
      app.add_subcommand("beta", "column partition, as for alpha");
  add_file(beta_cmd, file);
  add_format(beta_cmd);

  CLI::App* border_cmd = app.add_subcommand(
      "border", "stabilized row/column values and the eventual value");
  add_file(border_cmd, file);
  add_format(border_cmd);

  std::string window_flag;
  bool use_oracle = false;
  CLI::App* hilbert_cmd =
      app.add_subcommand("hilbert", "Hilbert function table on a window");
  add_file(hilbert_cmd, file);
  add_format(hilbert_cmd);
  hilbert_cmd->add_option("--window", window_flag,
                          "inclusive max bidegree IxJ (default: one past the "
                          "border in each direction)");
  hilbert_cmd->add_flag(
      "--oracle", use_oracle,
      "compute every entry by matrix rank (requires coordinates in the file)");
  add_field_flags(hilbert_cmd);

  CLI::App* acm_cmd =
      app.add_subcommand("acm", "arithmetic Cohen-Macaulayness certificate");
  add_file(acm_cmd, file);
  add_format(acm_cmd);

  CLI::App* resolution_cmd = app.add_subcommand(
      "resolution", "bigraded minimal free resolution of an ACM scheme");
  add_file(resolution_cmd, file);
  add_format(resolution_cmd);

  CLI::App* classify_cmd = app.add_subcommand(
      "classify", "shape classification and structure-theorem checks");
  add_file(classify_cmd, file);
  add_format(classify_cmd);

  std::string at;
  CLI::App* oracle_cmd =
      app.add_subcommand("oracle", "one Hilbert value by matrix rank");
  add_file(oracle_cmd, file);
  add_format(oracle_cmd);
  oracle_cmd->add_option("--at", at, "bidegree i,j")->required();
  add_field_flags(oracle_cmd);

  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "check the scheme's border and ACM characterizations "
                "against the oracle");
  add_file(verify_cmd, file);
  add_format(verify_cmd);
  add_field_flags(verify_cmd);
  verify_cmd->add_option(
      "--seed", seed,
      "draw random coordinates from this seed when the file has none");

  std::string max_grid = "3x3";
  int max_mult = 3;
  int threads = 0;
  bool no_oracle = false;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "exhaustive property suite over all small grids");
  add_format(sweep_cmd);
  sweep_cmd->add_option("--max-grid", max_grid, "largest grid shape RxT");
  sweep_cmd->add_option("--max-mult", max_mult, "largest multiplicity");
  sweep_cmd->add_flag("--no-oracle", no_oracle,
                      "skip the linear-algebra phase");
  add_field_flags(sweep_cmd);
  sweep_cmd->add_option("--seed", seed, "seed for the random coordinate draw");
  sweep_cmd->add_option("--threads", threads,
                        "oracle worker threads (0 = hardware)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    bool prime_given = false;
    for (CLI::App* sub :
         {hilbert_cmd, oracle_cmd, verify_cmd, sweep_cmd})
      if (sub->parsed() && sub->count("--prime")) prime_given = true;
    bool seed_given = (verify_cmd->parsed() && verify_cmd->count("--seed")) ||
                      (sweep_cmd->parsed() && sweep_cmd->count("--seed"));

    if (alpha_cmd->parsed()) return do_partitions(file, false, format, out);
    if (beta_cmd->parsed()) return do_partitions(file, true, format, out);
    if (border_cmd->parsed()) return do_border(file, format, out);
    if (hilbert_cmd->parsed())
      return do_hilbert(file, window_flag, use_oracle, exact, prime_given,
                        prime, format, out);
    if (acm_cmd->parsed()) return do_acm(file, format, out);
    if (resolution_cmd->parsed()) return do_resolution(file, format, out);
    if (classify_cmd->parsed()) return do_classify(file, format, out);
    if (oracle_cmd->parsed())
      return do_oracle(file, at, exact, prime_given, prime, format, out);
    if (verify_cmd->parsed())
      return do_verify(file, exact, prime_given, prime, seed_given, seed,
                       format, out);
    if (sweep_cmd->parsed())
      return do_sweep(max_grid, max_mult, no_oracle, prime_given, prime,
                      seed_given ? seed : 1, threads, format, out);
    err << "no command given\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    bool internal = e.code() == Errc::TheoremViolation ||
                    e.code() == Errc::InternalInconsistency;
    return internal ? 1 : 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace fatpoints::cli
