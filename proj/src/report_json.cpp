#include "ptf/report_json.hpp"

#include <algorithm>
#include <limits>
#include <ostream>

namespace ptf {

Json big_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return to_string(x);
}

Json rational_json(const BigRational& q) { return to_string(q); }

Json to_json(const PTFCountResult& r, const UpperBoundCheck& c) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  j["count"] = big_json(r.count);
  j["method"] = r.method;
  j["bounds"] = {{"sharp_upper", big_json(c.sharp_upper)},
                 {"capacity_upper", big_json(c.theorem_upper)},
                 {"saks_lower", big_json(c.saks_lower)}};
  j["checks"] = {{"sharp_upper_holds", c.sharp_holds},
                 {"sharp_upper_equality", c.sharp_equal},
                 {"sharp_upper_slack", big_json(c.sharp_slack)},
                 {"capacity_upper_holds", c.theorem_holds},
                 {"saks_lower_holds", c.saks_holds}};
  j["feasibility_calls"] = r.feasibility_calls;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

Json to_json(const ScanEntry& e) {
  Json j;
  if (e.n) j["n"] = e.n;
  if (e.d) j["d"] = e.d;
  if (e.k) j["k"] = e.k;
  if (!e.label.empty()) j["label"] = e.label;
  j["lhs"] = e.lhs;
  j["rhs"] = e.rhs;
  j["margin"] = e.margin;
  j["verdict"] = to_string(e.verdict);
  j["exact"] = e.exact;
  if (e.precision) j["precision_bits"] = e.precision;
  return j;
}

Json to_json(const ScanReport& r, bool entries) {
  Json j;
  j["case"] = r.case_id;
  j["grid"] = r.grid;
  j["pairs_checked"] = r.pairs_checked;
  j["failure_count"] = r.failures.size();
  j["verdict"] = r.holds() ? "holds" : "fails";
  j["precision_bits"] = r.precision;
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = notes;
  Json f = Json::array();
  for (const auto& e : r.failures) f.push_back(to_json(e));
  j["failures"] = f;
  if (entries) {
    Json all = Json::array();
    for (const auto& e : r.entries) all.push_back(to_json(e));
    j["entries"] = all;
  }
  return j;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["n"] = r.n;
  j["d"] = r.d;
  if (r.C) j["C"] = rational_json(*r.C);
  Json vals = Json::array();
  for (const auto& v : r.values) {
    Json b;
    b["name"] = v.name;
    if (v.exact) b["exact"] = rational_json(*v.exact);
    b["log2_lo"] = v.log2_lo;
    b["log2_hi"] = v.log2_hi;
    b["is_log2"] = v.is_log2;
    b["certified"] = v.certified;
    vals.push_back(b);
  }
  j["values"] = vals;
  return j;
}

Json to_json(const Arrangement& a, const RegionCountReport& r) {
  Json j;
  j["m"] = a.dimension();
  j["p"] = a.size();
  j["central"] = a.central();
  j["region_count"] = big_json(r.region_count);
  j["method"] = r.method;
  if (r.intersection_subspace_count) j["intersection_subspace_count"] = big_json(*r.intersection_subspace_count);
  j["upper_bound"] = big_json(r.upper_bound);
  j["feasibility_calls"] = r.feasibility_calls;
  return j;
}

Json to_json(const MCReport& r) {
  Json j;
  j["kind"] = r.kind;
  j["n"] = r.n;
  if (r.d) j["d"] = r.d;
  if (r.m) j["m"] = r.m;
  j["successes"] = r.successes;
  j["trials"] = r.trials;
  j["estimate"] = r.estimate;
  j["ci95"] = {{"lo", r.ci.lo}, {"hi", r.ci.hi}, {"method", "wilson"}};
  j["seed"] = r.seed;
  if (r.exact) {
    j["exact"] = rational_json(*r.exact);
    j["exact_inside_ci"] = r.ci.lo <= r.exact->convert_to<double>() && r.exact->convert_to<double>() <= r.ci.hi;
  }
  Json notes = Json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

Json to_json(const SubsetFractionReport& r) {
  Json j;
  j["kind"] = "subsets";
  j["n"] = r.n;
  j["d"] = r.d;
  j["m"] = r.m;
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  j["good"] = r.good;
  j["total"] = r.total;
  j["fraction"] = rational_json(r.fraction);
  if (!r.exhaustive) {
    j["seed"] = r.seed;
    const auto ci = wilson_interval(r.good, r.total);
    j["ci95"] = {{"lo", ci.lo}, {"hi", ci.hi}, {"method", "wilson"}};
  }
  if (r.distinct_good_spans) j["distinct_good_spans"] = *r.distinct_good_spans;
  return j;
}

Json to_json(std::span<const CubePoint> points, int d, const ResilienceVerdict& v) {
  Json j;
  j["kind"] = "resilience";
  j["d"] = d;
  Json pts = Json::array();
  for (const auto& x : points) pts.push_back(x.signs());
  j["points"] = pts;
  j["status"] = v.good ? "good" : "bad";
  if (v.witness) {
    j["witness"] = v.witness->signs();
    Json a = Json::array();
    for (Index k = 0; k < v.coefficients.size(); ++k) a.push_back(rational_json(v.coefficients[k]));
    j["coefficients"] = a;
    j["witness_verified"] = verify_resilience_witness(points, d, v);
  }
  return j;
}

Json to_json(const CapacityReport& r) {
  Json j;
  j["points"] = r.points;
  j["d"] = r.d;
  j["count"] = big_json(r.count);
  j["capacity_lo"] = r.capacity_lo;
  j["capacity_hi"] = r.capacity_hi;
  j["m"] = big_json(r.m);
  j["lifted_dimension"] = r.lifted_dimension;
  j["boolean_reduced"] = r.boolean_reduced;
  j["bounds"] = {{"affine_count_bound", big_json(r.affine_bound)},
                 {"one_plus_log2_binom_lo", r.affine_bound_log2_lo},
                 {"one_plus_log2_binom_hi", r.affine_bound_log2_hi},
                 {"m_log2_size_lo", r.m_log2_size_lo},
                 {"m_log2_size_hi", r.m_log2_size_hi}};
  j["checks"] = {{"count_le_affine_bound", r.count_le_affine_bound},
                 {"affine_bound_le_power", r.affine_bound_le_power},
                 {"chain_holds", r.chain_holds()},
                 {"lower_bound_holds", r.lower_bound_holds},
                 {"m_le_2en_over_d_pow_d", to_string(r.m_vs_2en_over_d)}};
  return j;
}

Json to_json(const IndependenceRegime& c) {
  return {{"applies", c.applies}, {"inner_floor", big_json(c.inner)}, {"m_bound", big_json(c.m_bound)},
          {"note", c.note}};
}

Json to_json(const LOCheckReport& r) {
  Json j;
  j["vectors"] = r.vectors;
  j["targets"] = r.targets;
  j["violations"] = r.violations;
  j["failures"] = r.failures;
  return j;
}

namespace {

void flatten(const Json& j, const std::string& prefix, Json& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it)
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array()) {
    std::string s;
    for (const auto& e : j) s += (s.empty() ? "" : ";") + (e.is_string() ? e.get<std::string>() : e.dump());
    out[prefix] = s;
  } else {
    out[prefix] = j;
  }
}

std::string cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return s;
}

}  // namespace

void write_csv(std::ostream& out, const Json& rows) {
  std::vector<Json> flat;
  if (rows.is_array()) {
    for (const auto& r : rows) {
      Json f = Json::object();
      flatten(r, "", f);
      flat.push_back(f);
    }
  } else {
    Json f = Json::object();
    flatten(rows, "", f);
    flat.push_back(f);
  }
  std::vector<std::string> keys;
  for (const auto& f : flat)
    for (auto it = f.begin(); it != f.end(); ++it)
      if (std::find(keys.begin(), keys.end(), it.key()) == keys.end()) keys.push_back(it.key());
  for (std::size_t i = 0; i < keys.size(); ++i) out << (i ? "," : "") << cell(keys[i]);
  out << '\n';
  for (const auto& f : flat) {
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) out << ',';
      if (f.contains(keys[i])) out << cell(f[keys[i]]);
    }
    out << '\n';
  }
}

void write_scan_csv(std::ostream& out, const ScanReport& r) {
  out << "case,n,d,k,label,lhs,rhs,margin,verdict,exact,precision_bits\n";
  for (const auto& e : r.entries) {
    Json m = e.margin;
    out << r.case_id << ',' << e.n << ',' << e.d << ',' << e.k << ',' << cell(e.label) << ',' << cell(e.lhs)
        << ',' << cell(e.rhs) << ',' << m.dump() << ',' << to_string(e.verdict) << ','
        << (e.exact ? "true" : "false") << ',' << e.precision << '\n';
  }
}

}  // namespace ptf
