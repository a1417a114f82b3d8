#include "ptf/fixtures.hpp"

#include <cstdlib>
#include <fstream>

#ifndef PTF_DEFAULT_FIXTURES
#define PTF_DEFAULT_FIXTURES "fixtures/ptf_fixtures.json"
#endif

namespace ptf {

bool FixtureReport::ok() const {
  for (const auto& r : results)
    if (r.status != "verified" && r.status != "consistency-verified") return false;
  return true;
}

std::string default_fixtures_path() {
  if (const char* env = std::getenv("PTF_FIXTURES")) return env;
  return PTF_DEFAULT_FIXTURES;
}

namespace {

Json count_fixture(int n, int d, const std::string& method, const std::string& check, unsigned threads) {
  const PTFCountResult r = method == "function-oracle" ? oracle_count_ptf(n, d, threads) : count_ptf(n, d, threads);
  return {{"id", "T(" + std::to_string(n) + "," + std::to_string(d) + ")"},
          {"kind", "ptf_count"},
          {"n", n},
          {"d", d},
          {"value", to_string(r.count)},
          {"oracle", method},
          {"check", check}};
}

std::vector<BigRational> rationals(const Json& arr) {
  std::vector<BigRational> v;
  for (const auto& e : arr) v.push_back(parse_rational(e.get<std::string>()));
  return v;
}

// Sanity checks for counts outside every oracle's envelope.
std::string count_consistency(int n, int d, const BigInt& value) {
  PTFCountResult r;
  r.n = n;
  r.d = d;
  r.count = value;
  const UpperBoundCheck c = verify_upper_bounds(r);
  if (value % 2 != 0) return "count is odd";
  if (!c.holds()) return "bound sandwich violated";
  if (value > pow2(static_cast<unsigned long>(1) << n)) return "count exceeds 2^(2^n)";
  return {};
}

}  // namespace

Json freeze_fixtures(unsigned threads) {
  Json list = Json::array();
  list.push_back(count_fixture(2, 1, "region-enumeration", "recompute", threads));
  list.push_back(count_fixture(2, 2, "region-enumeration", "recompute", threads));
  list.push_back(count_fixture(3, 1, "function-oracle", "recompute", threads));
  list.push_back(count_fixture(3, 2, "function-oracle", "recompute", threads));
  list.push_back(count_fixture(4, 1, "function-oracle", "recompute", threads));
  list.push_back(count_fixture(4, 2, "function-oracle", "recompute", threads));
  list.push_back(count_fixture(5, 1, "region-enumeration", "consistency", threads));

  const auto exhaustive = good_subset_fraction(3, 1, 3, 0, kDefaultSeed, threads, SubsetMode::exhaustive);
  list.push_back({{"id", "good_subset_fraction(3,1,3)"},
                  {"kind", "good_subset_fraction"},
                  {"n", 3}, {"d", 1}, {"m", 3},
                  {"mode", "exhaustive"},
                  {"value", to_string(exhaustive.fraction)},
                  {"oracle", "exhaustive resilience scan"},
                  {"check", "recompute"}});
  const std::uint64_t samples = 2000;
  const auto sampled = good_subset_fraction(4, 1, 4, samples, kDefaultSeed, threads, SubsetMode::sampled);
  list.push_back({{"id", "good_subset_fraction_sampled(4,1,4)"},
                  {"kind", "good_subset_fraction"},
                  {"n", 4}, {"d", 1}, {"m", 4},
                  {"mode", "sampled"},
                  {"samples", samples},
                  {"seed", kDefaultSeed},
                  {"value", to_string(sampled.fraction)},
                  {"oracle", "seeded sampling"},
                  {"check", "recompute"}});
  list.push_back({{"id", "independence_probability(3,1,4)"},
                  {"kind", "independence_exact"},
                  {"n", 3}, {"d", 1}, {"m", 4},
                  {"value", to_string(independence_probability_exhaustive(3, 1, 4, threads))},
                  {"oracle", "exhaustive enumeration of ordered samples"},
                  {"check", "recompute"}});
  ExperimentConfig cfg;
  cfg.n = 10;
  cfg.d = 2;
  cfg.m = 20;
  cfg.trials = 1000;
  cfg.master_seed = kDefaultSeed;
  cfg.threads = threads;
  list.push_back({{"id", "mc_independence(10,2,20)"},
                  {"kind", "mc_independence"},
                  {"n", 10}, {"d", 2}, {"m", 20},
                  {"trials", cfg.trials},
                  {"seed", cfg.master_seed},
                  {"value", std::to_string(mc_independence(cfg).successes)},
                  {"oracle", "seeded Monte Carlo"},
                  {"check", "recompute"}});
  const std::vector<BigRational> ones{1, 1, 1};
  list.push_back({{"id", "lo_probability(1,1,1;1)"},
                  {"kind", "lo_exact"},
                  {"coeffs", {"1", "1", "1"}},
                  {"target", "1"},
                  {"value", to_string(lo_exact_probability(ones, BigRational(1)))},
                  {"oracle", "enumeration of sign patterns"},
                  {"check", "recompute"}});
  return {{"version", 1}, {"fixtures", list}};
}

FixtureReport verify_fixtures(const Json& doc, unsigned threads) {
  FixtureReport rep;
  for (const auto& f : doc.at("fixtures")) {
    FixtureResult r;
    r.id = f.at("id").get<std::string>();
    r.expected = f.at("value").get<std::string>();
    r.oracle = f.value("oracle", "");
    const std::string kind = f.at("kind").get<std::string>();
    const std::string check = f.value("check", "recompute");
    if (kind == "ptf_count") {
      const int n = f.at("n").get<int>();
      const int d = f.at("d").get<int>();
      if (check == "consistency") {
        const std::string why = count_consistency(n, d, BigInt(r.expected));
        r.actual = r.expected;
        r.status = why.empty() ? "consistency-verified" : "mismatch";
        r.detail = why.empty() ? "evenness and bound sandwich" : why;
      } else {
        const bool oracle = r.oracle == "function-oracle";
        r.actual = to_string((oracle ? oracle_count_ptf(n, d, threads) : count_ptf(n, d, threads)).count);
      }
    } else if (kind == "good_subset_fraction") {
      const bool sampled = f.value("mode", "exhaustive") == "sampled";
      r.actual = to_string(good_subset_fraction(f.at("n").get<int>(), f.at("d").get<int>(), f.at("m").get<int>(),
                                                f.value("samples", std::uint64_t{0}),
                                                f.value("seed", kDefaultSeed), threads,
                                                sampled ? SubsetMode::sampled : SubsetMode::exhaustive)
                               .fraction);
    } else if (kind == "independence_exact") {
      r.actual = to_string(independence_probability_exhaustive(f.at("n").get<int>(), f.at("d").get<int>(),
                                                               f.at("m").get<int>(), threads));
    } else if (kind == "mc_independence") {
      ExperimentConfig cfg;
      cfg.n = f.at("n").get<int>();
      cfg.d = f.at("d").get<int>();
      cfg.m = f.at("m").get<int>();
      cfg.trials = f.at("trials").get<std::uint64_t>();
      cfg.master_seed = f.at("seed").get<std::uint64_t>();
      cfg.threads = threads;
      r.actual = std::to_string(mc_independence(cfg).successes);
    } else if (kind == "lo_exact") {
      const auto a = rationals(f.at("coeffs"));
      r.actual = to_string(lo_exact_probability(a, parse_rational(f.at("target").get<std::string>())));
    } else {
      r.status = "mismatch";
      r.detail = "unknown fixture kind " + kind;
    }
    if (r.status.empty()) {
      const bool same = kind == "ptf_count" || kind == "mc_independence"
                            ? r.actual == r.expected
                            : parse_rational(r.actual) == parse_rational(r.expected);
      r.status = same ? "verified" : "mismatch";
    }
    rep.results.push_back(std::move(r));
  }
  return rep;
}

FixtureReport verify_fixtures_file(const std::string& path, unsigned threads) {
  std::ifstream in(path);
  if (!in) throw FixturesMissing("fixtures file not found: " + path);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InvalidArgument("fixtures file is not valid JSON: " + std::string(e.what()));
  }
  FixtureReport rep = verify_fixtures(doc, threads);
  rep.file = path;
  return rep;
}

Json to_json(const FixtureReport& r) {
  Json list = Json::array();
  for (const auto& f : r.results) {
    Json j{{"id", f.id}, {"status", f.status}, {"expected", f.expected}, {"actual", f.actual}, {"oracle", f.oracle}};
    if (!f.detail.empty()) j["detail"] = f.detail;
    list.push_back(j);
  }
  Json j;
  j["file"] = r.file;
  j["ok"] = r.ok();
  j["fixtures"] = list;
  return j;
}

}  // namespace ptf
