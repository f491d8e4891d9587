#pragma once

#include <string>

#include <json.hpp>

#include "hkmod/scenario.hpp"

namespace hkmod {

// All CLI output goes through these builders so tests exercise the exact
// JSON the binary prints. ordered_json keeps insertion order, making output
// byte-stable for identical inputs. Rationals serialize as "p/q" ("p" when
// integral); integer-valued fields use JSON numbers when they fit in 64 bits
// and decimal strings otherwise.
using Json = nlohmann::ordered_json;

Json json_rational(const Rational& q);
Json json_integer(const Integer& n);

Json scenario_report(const Scenario& s);
Json wg_report(const Scenario& s);
Json atomic_report(const Scenario& s);
Json extended_report(const Scenario& s);
Json exts_report(const Scenario& s, const StabilityAssumptions& assume = {});
Json jacobian_report(const Scenario& s);
Json fatighenti_json();

Json suitable_report(const Rational& a, const LatticeVector& h, const RankTwoCone& cone);
Json walls_report(const Rational& a, const LatticeVector& h0, const LatticeVector& h1,
                  const RankTwoCone& cone);
Json friedman_report(const Rational& a, const LatticeVector& h0, const RankTwoCone& cone);
Json stimakota_report(const LatticeVector& h, const RankTwoCone& cone);

Json scan_row_json(const ScanRow& row);

// Exact cross-identity suite over a parameter box (hard-valid tuples with
// default b): counts per identity must all equal `total`.
struct IdentityCounts {
    long total = 0;
    long s_two_routes = 0;
    long ch3_two_routes = 0;
    long atomicity_routes = 0;
    long w0_match = 0;
    long dim_match = 0;
    long congruence = 0;
    long cone_gram_integral = 0;

    bool all_pass() const;
};

IdentityCounts run_identity_suite(const ScanRanges& ranges);
Json identities_report(const ScanRanges& ranges);

Json error_json(const std::string& code, const std::string& which, const std::string& detail);

}  // namespace hkmod
