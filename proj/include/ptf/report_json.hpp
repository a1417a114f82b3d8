#pragma once

// JSON and CSV encodings of every report. Integers beyond the 64-bit range
// and all rationals are written as decimal strings.

#include <iosfwd>
#include <span>

#include "json.hpp"

#include "ptf/arrangements.hpp"
#include "ptf/bounds.hpp"
#include "ptf/capacity.hpp"
#include "ptf/ptf_count.hpp"
#include "ptf/random_tensors.hpp"

namespace ptf {

using Json = nlohmann::ordered_json;

Json big_json(const BigInt& x);
Json rational_json(const BigRational& q);

Json to_json(const PTFCountResult& r, const UpperBoundCheck& c);
Json to_json(const ScanEntry& e);
/// Failures are always listed; all entries only when `entries` is set.
Json to_json(const ScanReport& r, bool entries = false);
Json to_json(const BoundReport& r);
Json to_json(const Arrangement& a, const RegionCountReport& r);
/// Elapsed time is left out so that identical runs encode identically.
Json to_json(const MCReport& r);
Json to_json(const SubsetFractionReport& r);
Json to_json(std::span<const CubePoint> points, int d, const ResilienceVerdict& v);
Json to_json(const CapacityReport& r);
Json to_json(const IndependenceRegime& c);
Json to_json(const LOCheckReport& r);

/// Flattens a JSON object (or array of objects) into CSV: one header row of
/// dotted keys, then one row per object.
void write_csv(std::ostream& out, const Json& rows);
void write_scan_csv(std::ostream& out, const ScanReport& r);

}  // namespace ptf
