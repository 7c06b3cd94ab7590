#pragma once

#include "polya/asymptotics.hpp"
#include "polya/bivariate_series.hpp"
#include "polya/rational_series.hpp"
#include "polya/sampler.hpp"
#include "polya/verify.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace polya {

using Json = nlohmann::ordered_json;

// Series: {"kind": "series", "family", "N", "coefficients": ["p/q", ...]}
Json to_json(const RationalSeries& s);
RationalSeries series_from_json(const Json& j);
// Polynomial-valued: {"kind": "bivariate", "family", "N", "marker",
// "coefficients": [{"k": "p/q", ...}, ...]} with only nonzero entries.
Json to_json(const BivariateSeries& s);
BivariateSeries bivariate_from_json(const Json& j);

Json to_json(const SingularityReport& r);
SingularityReport singularity_from_json(const Json& j);

Json to_json(const ForestTable& t);
Json to_json(const StatsReport& r);
Json to_json(const LmaxReport& r);
Json to_json(const VerifyReport& r);
Json to_json(const std::vector<DnCheck>& rows);

// CSV: header line, one row per n (series, tables) or per (n, k) for
// polynomial families; reports are flattened to name,value rows.
std::string to_csv(const RationalSeries& s);
std::string to_csv(const BivariateSeries& s);
std::string to_csv(const SingularityReport& r);
std::string to_csv(const ForestTable& t);
std::string to_csv(const StatsReport& r);
std::string to_csv(const LmaxReport& r);
std::string to_csv(const VerifyReport& r);
std::string to_csv(const std::vector<DnCheck>& rows);

}  // namespace polya
