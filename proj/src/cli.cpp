#include "ptf/cli.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"

#include "ptf/fixtures.hpp"
#include "ptf/report_json.hpp"

namespace ptf {

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream s;
  for (unsigned int i = 0; i < len; ++i) s << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(md[i]);
  return s.str();
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Options {
  std::string format = "json";
  std::string manifest;
  unsigned threads = 1;

  int n = 0;
  int d = 1;
  int m = 1;
  bool oracle = false;
  std::string C;
  std::string scan_case;
  bool entries = false;
  std::string arrangement_file;
  bool subspaces = false;
  bool general_position = false;
  std::string kind;
  std::uint64_t trials = 10000;
  std::uint64_t seed = kDefaultSeed;
  bool gf2 = false;
  std::string coeffs;
  std::string target = "0";
  bool exact = false;
  std::string points;
  std::uint64_t samples = 10000;
  std::string t = "1";
  std::string points_file;
  bool lo_check = false;
  int max_n = 12;
  int table = 0;
  std::string fixtures_file;
  std::string freeze;
};

struct Outcome {
  Json json;
  std::string csv;  // preformatted CSV, when the default flattening does not fit
  int code = kExitOk;
  Json manifest_extra = Json::object();
};

Outcome do_count(const Options& o) {
  Outcome r;
  const PTFCountResult c = o.oracle ? oracle_count_ptf(o.n, o.d, o.threads) : count_ptf(o.n, o.d, o.threads);
  const UpperBoundCheck b = verify_upper_bounds(c);
  r.json = to_json(c, b);
  r.code = b.holds() ? kExitOk : kExitVerification;
  return r;
}

Outcome do_bounds(const Options& o) {
  Outcome r;
  std::optional<BigRational> C;
  if (!o.C.empty()) C = parse_rational(o.C);
  r.json = to_json(main_theorem_bounds(o.n, o.d, C));
  return r;
}

Outcome do_scan(const Options& o) {
  Outcome r;
  const ScanReport s = run_scan(o.scan_case);
  r.json = to_json(s, o.entries);
  if (o.format == "csv") {
    std::ostringstream csv;
    write_scan_csv(csv, s);
    r.csv = csv.str();
  }
  r.code = s.holds() ? kExitOk : kExitVerification;
  return r;
}

Outcome do_regions(const Options& o) {
  Outcome r;
  const Arrangement a = read_arrangement_file(o.arrangement_file);
  RegionOptions opts;
  opts.threads = o.threads;
  opts.count_subspaces = o.subspaces;
  const RegionCountReport rep = count_regions(a, opts);
  r.json = to_json(a, rep);
  bool ok = rep.region_count <= rep.upper_bound;
  if (rep.intersection_subspace_count) ok = ok && *rep.intersection_subspace_count <= rep.region_count;
  if (o.general_position) r.json["normals_in_general_position"] = normals_in_general_position(a);
  r.code = ok ? kExitOk : kExitVerification;
  return r;
}

std::vector<CubePoint> parse_points(int n, const std::string& text) {
  std::vector<CubePoint> pts;
  for (const auto& tok : split(text, ',')) pts.emplace_back(n, std::stoull(tok, nullptr, 0));
  return pts;
}

Outcome do_mc(const Options& o) {
  Outcome r;
  ExperimentConfig cfg;
  cfg.n = o.n;
  cfg.d = o.d;
  cfg.m = o.m;
  cfg.trials = o.trials;
  cfg.master_seed = o.seed;
  cfg.threads = o.threads;
  if (o.kind == "independence") {
    MCReport rep = mc_independence(cfg, o.gf2 ? RankField::gf2_boolean : RankField::rational);
    if (o.exact) {
      if (o.gf2) throw InvalidArgument("--exact is available for the rational rank only");
      rep.exact = independence_probability_exhaustive(o.n, o.d, o.m, o.threads);
    }
    r.manifest_extra["elapsed_ms"] = rep.elapsed_ms;
    r.json = to_json(rep);
    const IndependenceRegime t = independence_regime_check(o.n, o.d, BigInt(o.m), parse_rational(o.t));
    r.json["independence_regime"] = to_json(t);
    r.json["independence_regime"]["t"] = o.t;
    if (rep.exact && !r.json["exact_inside_ci"].get<bool>()) r.code = kExitVerification;
  } else if (o.kind == "resilience") {
    if (!o.points.empty()) {
      const auto pts = parse_points(o.n, o.points);
      const ResilienceVerdict v = resilience_check(pts, o.d);
      r.json = to_json(pts, o.d, v);
      if (!verify_resilience_witness(pts, o.d, v)) r.code = kExitVerification;
    } else {
      const MCReport rep = mc_resilience(cfg);
      r.manifest_extra["elapsed_ms"] = rep.elapsed_ms;
      r.json = to_json(rep);
    }
    const TRange tr = resilience_t_range(o.n, o.d);
    r.json["resilience_t_range"] = {{"lo", tr.lo}, {"hi", tr.hi}, {"empty", tr.empty()}};
  } else if (o.kind == "subsets") {
    const auto rep = good_subset_fraction(o.n, o.d, o.m, o.samples, o.seed, o.threads,
                                          o.exact ? SubsetMode::exhaustive : SubsetMode::automatic);
    r.json = to_json(rep);
    if (rep.distinct_good_spans && *rep.distinct_good_spans != rep.good) r.code = kExitVerification;
  } else if (o.kind == "lo") {
    std::vector<BigRational> a;
    for (const auto& tok : split(o.coeffs, ',')) a.push_back(parse_rational(tok));
    if (a.empty()) throw InvalidArgument("--coeffs is required for --kind lo");
    if (o.n && o.n != static_cast<int>(a.size())) throw InvalidArgument("--n must equal the number of coefficients");
    const BigRational u = parse_rational(o.target);
    const MCReport rep = lo_empirical(a, u, o.trials, o.seed, o.exact, o.threads);
    r.manifest_extra["elapsed_ms"] = rep.elapsed_ms;
    r.json = to_json(rep);
    if (rep.exact) {
      const int n = static_cast<int>(a.size());
      const bool ok = *rep.exact <= littlewood_offord_P(n) && (u == 0 || *rep.exact <= littlewood_offord_P(n + 1));
      r.json["bound_holds"] = ok;
      if (!ok) r.code = kExitVerification;
    }
  } else {
    throw InvalidArgument("unknown --kind " + o.kind);
  }
  return r;
}

Outcome do_capacity(const Options& o) {
  Outcome r;
  const PointSet s = read_point_csv_file(o.points_file);
  const CapacityReport c = capacity_set(s, o.d, o.threads);
  r.json = to_json(c);
  r.code = c.chain_holds() && c.lower_bound_holds ? kExitOk : kExitVerification;
  return r;
}

Outcome do_lo(const Options& o) {
  Outcome r;
  if (o.lo_check) {
    const LOCheckReport rep = lo_exhaustive_check(o.max_n);
    r.json = to_json(rep);
    r.code = rep.violations == 0 ? kExitOk : kExitVerification;
  } else if (o.table > 0) {
    Json rows = Json::array();
    bool ok = true;
    for (int k = 1; k <= o.table; ++k) {
      const BigRational p = littlewood_offord_P(k);
      const bool non_increasing = k == 1 || p <= littlewood_offord_P(k - 1);
      const bool le_three_eighths = k < 3 || p <= BigRational(3, 8);
      ok = ok && non_increasing && le_three_eighths;
      rows.push_back({{"n", k}, {"P", rational_json(p)}, {"non_increasing", non_increasing},
                      {"le_3_8", le_three_eighths}});
    }
    r.json = rows;
    r.code = ok ? kExitOk : kExitVerification;
  } else {
    if (o.n < 1) throw InvalidArgument("--n is required");
    r.json = {{"n", o.n}, {"P", rational_json(littlewood_offord_P(o.n))}};
  }
  return r;
}

Outcome do_fixtures(const Options& o) {
  Outcome r;
  if (!o.freeze.empty()) {
    Json doc = freeze_fixtures(o.threads);
    std::ofstream f(o.freeze);
    if (!f) throw InvalidArgument("cannot write " + o.freeze);
    f << doc.dump(2) << '\n';
    r.json = doc;
    return r;
  }
  const std::string path = o.fixtures_file.empty() ? default_fixtures_path() : o.fixtures_file;
  const FixtureReport rep = verify_fixtures_file(path, o.threads);
  r.json = to_json(rep);
  r.code = rep.ok() ? kExitOk : kExitVerification;
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Exact counting of polynomial threshold functions and certified bound checks", "ptf"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--manifest", o.manifest, "Write the run manifest to this file instead of stderr");
  app.add_option("--threads", o.threads, "Worker threads")->check(CLI::Range(1U, 256U));

  auto* count = app.add_subcommand("count", "Exact T(n,d) with bound checks");
  count->add_option("--n", o.n)->required();
  count->add_option("--d", o.d)->required();
  count->add_flag("--oracle", o.oracle, "Use the Boolean-function oracle");

  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds on T(n,d)");
  bounds->add_option("--n", o.n)->required();
  bounds->add_option("--d", o.d)->required();
  bounds->add_option("--C", o.C, "Constant of the lower bound (rational)");

  auto* scan = app.add_subcommand("scan", "Inequality scans");
  scan->add_option("--case", o.scan_case)->required()->check(CLI::IsMember({"1", "3", "4", "5", "A1", "A2", "A3"}));
  scan->add_flag("--entries", o.entries, "List every checked entry in JSON");

  auto* regions = app.add_subcommand("regions", "Region count of an arrangement file");
  regions->add_option("file", o.arrangement_file)->required();
  regions->add_flag("--subspaces", o.subspaces, "Also count intersection subspaces");
  regions->add_flag("--general-position", o.general_position, "Test the normals for general position");

  auto* mc = app.add_subcommand("mc", "Seeded experiments on random lifted points");
  mc->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"independence", "resilience", "subsets", "lo"}));
  mc->add_option("--n", o.n);
  mc->add_option("--d", o.d);
  mc->add_option("--m", o.m);
  mc->add_option("--trials", o.trials);
  mc->add_option("--seed", o.seed, "Master seed (default 20240601)");
  mc->add_flag("--gf2", o.gf2, "Rank of {0,1} lifts over GF(2)");
  mc->add_option("--coeffs", o.coeffs, "Comma-separated rational coefficients (lo)");
  mc->add_option("--target", o.target, "Target value u (lo)");
  mc->add_flag("--exact", o.exact, "Attach the exhaustive value");
  mc->add_option("--points", o.points, "Comma-separated bit masks (resilience of one set)");
  mc->add_option("--samples", o.samples, "Samples for sampled subset scans");
  mc->add_option("--t", o.t, "t used for the independence regime annotation");

  auto* capacity = app.add_subcommand("capacity", "Polynomial capacity of a point set");
  capacity->add_option("--points", o.points_file)->required();
  capacity->add_option("--d", o.d)->required();

  auto* lo = app.add_subcommand("lo", "Littlewood-Offord probabilities");
  lo->add_option("--n", o.n);
  lo->add_flag("--check", o.lo_check, "Exhaustive bound check over the coefficient test set");
  lo->add_option("--max-n", o.max_n);
  lo->add_option("--table", o.table, "P(1..N) with monotonicity checks");

  auto* fixtures = app.add_subcommand("fixtures", "Verify or regenerate frozen fixtures");
  fixtures->add_option("--file", o.fixtures_file);
  fixtures->add_option("--freeze", o.freeze, "Recompute all fixtures and write them to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  Outcome result;
  std::string sub;
  try {
    if (*count) sub = "count", result = do_count(o);
    else if (*bounds) sub = "bounds", result = do_bounds(o);
    else if (*scan) sub = "scan", result = do_scan(o);
    else if (*regions) sub = "regions", result = do_regions(o);
    else if (*mc) sub = "mc", result = do_mc(o);
    else if (*capacity) sub = "capacity", result = do_capacity(o);
    else if (*lo) sub = "lo", result = do_lo(o);
    else if (*fixtures) sub = "fixtures", result = do_fixtures(o);
  } catch (const FixturesMissing& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitVerification;
  }

  std::string text;
  if (o.format == "csv") {
    if (!result.csv.empty()) {
      text = result.csv;
    } else {
      std::ostringstream s;
      write_csv(s, result.json);
      text = s.str();
    }
  } else {
    text = result.json.dump(2) + "\n";
  }
  out << text;

  const auto policy = PrecisionPolicy::from_environment();
  Json manifest;
  Json cmd = Json::array();
  for (int i = 0; i < argc; ++i) cmd.push_back(argv[i]);
  manifest["command_line"] = cmd;
  manifest["version"] = kVersion;
  manifest["subcommand"] = sub;
  if (sub == "mc") manifest["seed"] = o.seed;
  manifest["threads"] = o.threads;
  manifest["precision_bits"] = {{"start", policy.start}, {"max", policy.max}};
  manifest["exit_code"] = result.code;
  manifest["output_sha256"] = sha256_hex(text);
  for (auto it = result.manifest_extra.begin(); it != result.manifest_extra.end(); ++it)
    manifest[it.key()] = it.value();
  manifest["wall_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  if (o.manifest.empty()) {
    err << manifest.dump() << '\n';
  } else {
    std::ofstream f(o.manifest);
    f << manifest.dump(2) << '\n';
  }
  return result.code;
}

}  // namespace ptf
