#include "polya/report_io.hpp"

#include "polya/error.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace polya {

namespace {

double number_or_nan(const Json& j) {
    return j.is_number() ? j.get<double>() : std::numeric_limits<double>::quiet_NaN();
}

template <class F>
auto guarded(const char* what, F f) -> decltype(f()) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw_invalid(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

std::string csv_number(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json to_json(const RationalSeries& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(to_string(c));
    return Json{{"kind", "series"}, {"family", s.family()}, {"N", s.order()}, {"coefficients", coeffs}};
}

RationalSeries series_from_json(const Json& j) {
    return guarded("series", [&] {
        if (j.at("kind") != "series") throw_invalid("not a series document");
        std::vector<Rational> c;
        for (const auto& v : j.at("coefficients")) c.push_back(parse_rational(v.get<std::string>()));
        if (c.empty()) throw_invalid("series has no coefficients");
        if (j.at("N").get<std::size_t>() + 1 != c.size()) throw_invalid("N does not match the coefficient count");
        return RationalSeries(std::move(c), j.at("family").get<std::string>());
    });
}

Json to_json(const BivariateSeries& s) {
    Json coeffs = Json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) {
        Json poly = Json::object();
        const auto& p = s[n].coeffs();
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) poly[std::to_string(k)] = to_string(p[k]);
        coeffs.push_back(poly);
    }
    return Json{{"kind", "bivariate"}, {"family", s.family()}, {"N", s.order()},
                {"marker", s.marker()}, {"coefficients", coeffs}};
}

BivariateSeries bivariate_from_json(const Json& j) {
    return guarded("bivariate", [&] {
        if (j.at("kind") != "bivariate") throw_invalid("not a bivariate document");
        const auto& coeffs = j.at("coefficients");
        const std::size_t N = j.at("N").get<std::size_t>();
        if (coeffs.size() != N + 1) throw_invalid("N does not match the coefficient count");
        BivariateSeries out(N, j.at("marker").get<std::string>(), j.at("family").get<std::string>());
        for (std::size_t n = 0; n <= N; ++n) {
            Polynomial p;
            for (const auto& [k, v] : coeffs[n].items())
                p += Polynomial::monomial(parse_rational(v.get<std::string>()), std::stoul(k));
            out[n] = p;
        }
        return out;
    });
}

Json to_json(const SingularityReport& r) {
    Json derived = Json::object();
    for (const auto& v : r.derived) derived[v.name] = v.value;
    Json tables = Json::object();
    for (const auto& t : r.tables) tables[t.name] = t.values;
    return Json{{"kind", "singularity"},
                {"family", r.family},
                {"rho", r.rho},
                {"b", r.b},
                {"c", r.c},
                {"derived", derived},
                {"tables", tables},
                {"precision", r.precision},
                {"truncation_order_used", r.truncation_order_used},
                {"refinement_delta", r.refinement_delta},
                {"tail_bound", r.tail_bound},
                {"converged", r.converged},
                {"notes", r.notes}};
}

SingularityReport singularity_from_json(const Json& j) {
    return guarded("singularity", [&] {
        if (j.at("kind") != "singularity") throw_invalid("not a singularity document");
        SingularityReport r;
        r.family = j.at("family").get<std::string>();
        r.rho = number_or_nan(j.at("rho"));
        r.b = number_or_nan(j.at("b"));
        r.c = number_or_nan(j.at("c"));
        for (const auto& [k, v] : j.at("derived").items()) r.derived.push_back({k, number_or_nan(v)});
        for (const auto& [k, v] : j.at("tables").items()) {
            NamedTable t{k, {}};
            for (const auto& x : v) t.values.push_back(number_or_nan(x));
            r.tables.push_back(std::move(t));
        }
        r.precision = number_or_nan(j.at("precision"));
        r.truncation_order_used = j.at("truncation_order_used").get<std::size_t>();
        r.refinement_delta = number_or_nan(j.at("refinement_delta"));
        r.tail_bound = number_or_nan(j.at("tail_bound"));
        r.converged = j.at("converged").get<bool>();
        r.notes = j.at("notes").get<std::vector<std::string>>();
        return r;
    });
}

Json to_json(const ForestTable& t) {
    Json rows = Json::array();
    for (const auto& r : t.rows) rows.push_back({{"m", r.m}, {"asymptotic", r.asymptotic}, {"exact", r.exact}});
    return Json{{"kind", "table"}, {"which", t.which}, {"n_exact", t.n_exact}, {"rows", rows}};
}

namespace {

Json moment_json(const MomentEstimate& m) {
    return Json{{"mean", m.mean}, {"variance", m.variance}, {"mean_half_width", m.mean_half_width}};
}

}  // namespace

Json to_json(const StatsReport& r) {
    Json lmax = Json::object();
    for (const auto& [k, v] : r.l_max_counts) lmax[std::to_string(k)] = v;
    return Json{{"kind", "stats"},
                {"n", r.n},
                {"num_samples", r.num_samples},
                {"master_seed", r.master_seed},
                {"seed_rule", r.seed_rule},
                {"c_size", moment_json(r.c_size)},
                {"l_max", moment_json(r.l_max)},
                {"y_count", moment_json(r.y_count)},
                {"forest_size_distribution", r.forest_size_distribution},
                {"forest_size_half_width", r.forest_size_half_width},
                {"l_max_counts", lmax},
                {"threads_used", r.threads_used},
                {"seeds", r.seeds}};
}

Json to_json(const LmaxReport& r) {
    Json rows = Json::array();
    for (const auto& x : r.rows)
        rows.push_back({{"n", x.n},
                        {"samples", x.samples},
                        {"interval_lo", x.interval_lo},
                        {"interval_hi", x.interval_hi},
                        {"in_interval_fraction", x.in_interval_fraction},
                        {"mean_l_max", x.mean_l_max},
                        {"mean_over_log_n", x.mean_over_log_n},
                        {"location", x.location},
                        {"predicted_mean", x.predicted_mean},
                        {"predicted_mean_corrected", x.predicted_mean_corrected},
                        {"exact_mean", x.exact_mean < 0 ? Json(nullptr) : Json(x.exact_mean)}});
    return Json{{"kind", "lmax"},
                {"s", r.s},
                {"master_seed", r.master_seed},
                {"seed_rule", "as in stats reports, one experiment per n with the same master seed"},
                {"growth_constant", r.growth_constant},
                {"fraction_nondecreasing", r.fraction_nondecreasing},
                {"rows", rows}};
}

Json to_json(const VerifyReport& r) {
    Json checks = Json::array();
    for (const auto& c : r.checks)
        checks.push_back({{"name", c.name}, {"range", c.range}, {"cases", c.cases},
                          {"passed", c.passed}, {"detail", c.detail}});
    return Json{{"kind", "verify"},
                {"oracle_max", r.options.oracle_max},
                {"forest_max", r.options.forest_max},
                {"series_order", r.options.series_order},
                {"all_passed", r.all_passed()},
                {"checks", checks},
                {"notes", r.notes}};
}

Json to_json(const std::vector<DnCheck>& rows) {
    Json out = Json::array();
    for (const auto& r : rows)
        out.push_back({{"n", r.n}, {"exact", r.exact}, {"asymptotic", r.asymptotic}, {"ratio", r.ratio}});
    return Json{{"kind", "dn_check"}, {"rows", out}};
}

std::string to_csv(const RationalSeries& s) {
    std::string out = "n,coefficient\n";
    for (std::size_t n = 0; n <= s.order(); ++n) out += std::to_string(n) + "," + to_string(s[n]) + "\n";
    return out;
}

std::string to_csv(const BivariateSeries& s) {
    std::string out = "n,k,coefficient\n";
    for (std::size_t n = 0; n <= s.order(); ++n) {
        const auto& p = s[n].coeffs();
        for (std::size_t k = 0; k < p.size(); ++k)
            if (p[k] != 0) out += std::to_string(n) + "," + std::to_string(k) + "," + to_string(p[k]) + "\n";
    }
    return out;
}

std::string to_csv(const SingularityReport& r) {
    std::string out = "name,value\n";
    auto row = [&](const std::string& k, double v) { out += csv_field(k) + "," + csv_number(v) + "\n"; };
    row("rho", r.rho);
    row("b", r.b);
    row("c", r.c);
    for (const auto& v : r.derived) row(v.name, v.value);
    for (const auto& t : r.tables)
        for (std::size_t m = 0; m < t.values.size(); ++m) row(t.name + "[" + std::to_string(m) + "]", t.values[m]);
    row("precision", r.precision);
    row("truncation_order_used", static_cast<double>(r.truncation_order_used));
    row("refinement_delta", r.refinement_delta);
    row("tail_bound", r.tail_bound);
    row("converged", r.converged ? 1 : 0);
    return out;
}

std::string to_csv(const ForestTable& t) {
    std::string out = "m,asymptotic,exact_n" + std::to_string(t.n_exact) + "\n";
    for (const auto& r : t.rows)
        out += std::to_string(r.m) + "," + csv_number(r.asymptotic) + "," + csv_number(r.exact) + "\n";
    return out;
}

std::string to_csv(const StatsReport& r) {
    std::string out = "statistic,mean,variance,mean_half_width\n";
    auto row = [&](const char* name, const MomentEstimate& m) {
        out += std::string(name) + "," + csv_number(m.mean) + "," + csv_number(m.variance) + "," +
               csv_number(m.mean_half_width) + "\n";
    };
    row("c_size", r.c_size);
    row("l_max", r.l_max);
    row("y_count", r.y_count);
    for (std::size_t m = 0; m < r.forest_size_distribution.size(); ++m)
        out += "forest_size[" + std::to_string(m) + "]," + csv_number(r.forest_size_distribution[m]) + ",," +
               csv_number(r.forest_size_half_width[m]) + "\n";
    return out;
}

std::string to_csv(const LmaxReport& r) {
    std::string out =
        "n,samples,interval_lo,interval_hi,in_interval_fraction,mean_l_max,mean_over_log_n,location,"
        "predicted_mean,predicted_mean_corrected,exact_mean\n";
    for (const auto& x : r.rows)
        out += std::to_string(x.n) + "," + std::to_string(x.samples) + "," + csv_number(x.interval_lo) + "," +
               csv_number(x.interval_hi) + "," + csv_number(x.in_interval_fraction) + "," +
               csv_number(x.mean_l_max) + "," + csv_number(x.mean_over_log_n) + "," + csv_number(x.location) +
               "," + csv_number(x.predicted_mean) + "," + csv_number(x.predicted_mean_corrected) + "," +
               (x.exact_mean < 0 ? std::string() : csv_number(x.exact_mean)) + "\n";
    return out;
}

std::string to_csv(const VerifyReport& r) {
    std::string out = "check,range,cases,passed,detail\n";
    for (const auto& c : r.checks)
        out += csv_field(c.name) + "," + csv_field(c.range) + "," + std::to_string(c.cases) + "," +
               (c.passed ? "1" : "0") + "," + csv_field(c.detail) + "\n";
    return out;
}

std::string to_csv(const std::vector<DnCheck>& rows) {
    std::string out = "n,exact,asymptotic,ratio\n";
    for (const auto& r : rows)
        out += std::to_string(r.n) + "," + csv_number(r.exact) + "," + csv_number(r.asymptotic) + "," +
               csv_number(r.ratio) + "\n";
    return out;
}

}  // namespace polya
