#include "polya/polya.h"

#include "polya/asymptotics.hpp"
#include "polya/error.hpp"
#include "polya/report_io.hpp"
#include "polya/sampler.hpp"
#include "polya/series_engine.hpp"
#include "polya/verify.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <variant>

using namespace polya;

struct polya_series {
    std::variant<RationalSeries, BivariateSeries> value;
};

struct polya_result {
    std::string json;
    std::string csv;
    bool passed = true;
};

namespace {

constexpr std::size_t kMaxOrder = 3000;
constexpr std::size_t kMaxBivariateOrder = 300;

thread_local std::string last_error;

polya_status fail(polya_status s, const std::string& msg) {
    last_error = msg;
    return s;
}

template <class F>
polya_status guard(F f) {
    try {
        last_error.clear();
        return f();
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::InvalidArgument: return fail(POLYA_INVALID_ARGUMENT, e.what());
            case ErrorKind::LimitExceeded: return fail(POLYA_LIMIT_EXCEEDED, e.what());
            case ErrorKind::Numeric: return fail(POLYA_NUMERIC, e.what());
            case ErrorKind::CheckFailed: return fail(POLYA_CHECK_FAILED, e.what());
        }
        return fail(POLYA_INTERNAL, e.what());
    } catch (const std::bad_alloc&) {
        return fail(POLYA_LIMIT_EXCEEDED, "out of memory");
    } catch (const std::exception& e) {
        return fail(POLYA_INTERNAL, e.what());
    } catch (...) {
        return fail(POLYA_INTERNAL, "unknown error");
    }
}

char* dup(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

bool is_bivariate(const std::string& f) {
    return f == "ctree-poly" || f == "dforest-components";
}

void require(bool ok, const char* msg) {
    if (!ok) throw_invalid(msg);
}

template <class Report>
polya_status emit(const Report& r, bool passed, polya_result** out) {
    auto* res = new polya_result;
    res->json = to_json(r).dump(2);
    res->csv = to_csv(r);
    res->passed = passed;
    *out = res;
    return POLYA_OK;
}

}  // namespace

extern "C" {

const char* polya_version(void) { return "1.0.0"; }

const char* polya_last_error(void) { return last_error.c_str(); }

const char* polya_status_name(polya_status status) {
    switch (status) {
        case POLYA_OK: return "ok";
        case POLYA_INVALID_ARGUMENT: return "invalid argument";
        case POLYA_LIMIT_EXCEEDED: return "limit exceeded";
        case POLYA_NUMERIC: return "numeric failure";
        case POLYA_CHECK_FAILED: return "check failed";
        case POLYA_INTERNAL: return "internal error";
    }
    return "unknown status";
}

size_t polya_max_order(int bivariate) { return bivariate ? kMaxBivariateOrder : kMaxOrder; }

size_t polya_default_order(int bivariate) {
    std::size_t v = 0;
    const polya_status s = guard([&] {
        v = bivariate ? default_bivariate_order() : default_order();
        return POLYA_OK;
    });
    return s == POLYA_OK ? v : (bivariate ? 120 : 400);
}

int polya_family_is_bivariate(const char* family) { return family && is_bivariate(family) ? 1 : 0; }

polya_status polya_coeffs(const char* family, size_t order, const char* omega, polya_series** out) {
    return guard([&] {
        require(family && out, "null argument");
        *out = nullptr;
        const std::string f = family;
        const bool bi = is_bivariate(f);
        if (order > (bi ? kMaxBivariateOrder : kMaxOrder))
            throw_limit("order " + std::to_string(order) + " exceeds the limit of " +
                        std::to_string(bi ? kMaxBivariateOrder : kMaxOrder) + " for " + f);
        require(order >= 1, "order must be >= 1");
        std::optional<OmegaSet> om;
        if (f == "omega") {
            require(omega && *omega, "family omega needs an Omega set");
            om = OmegaSet::parse(omega);
        }
        polya_series s;
        if (f == "polya") s.value = polya_coeffs(order);
        else if (f == "cayley") s.value = cayley_coeffs(order);
        else if (f == "dforest") s.value = dforest_coeffs(order);
        else if (f == "ctree-poly") s.value = ctree_polynomials(order);
        else if (f == "pointed") s.value = pointed_coeffs(order);
        else if (f == "dforest-components") s.value = dforest_component_bivariate(order);
        else if (f == "hierarchy") s.value = hierarchy_coeffs(order);
        else if (f == "binary") s.value = binary_polya_coeffs(order);
        else if (f == "omega") s.value = omega_polya_coeffs(*om, order);
        else if (f == "identity") s.value = identity_tree_coeffs(order).r;
        else if (f == "identity-dforest") s.value = identity_tree_coeffs(order).dstar;
        else if (f == "identity-pointed") s.value = identity_tree_coeffs(order).pointed;
        else if (f == "e-series") s.value = e_series(order);
        else throw_invalid("unknown family '" + f + "'");
        std::visit([&](auto& v) { v.set_family(f == "omega" ? "omega:" + om->to_string() : f); }, s.value);
        *out = new polya_series(std::move(s));
        return POLYA_OK;
    });
}

size_t polya_series_order(const polya_series* s) {
    if (!s) return 0;
    return std::visit([](const auto& v) { return v.order(); }, s->value);
}

int polya_series_is_bivariate(const polya_series* s) {
    return s && std::holds_alternative<BivariateSeries>(s->value) ? 1 : 0;
}

polya_status polya_series_coeff(const polya_series* s, size_t n, size_t k, char** out) {
    return guard([&] {
        require(s && out, "null argument");
        if (n > polya_series_order(s)) throw_invalid("index beyond the truncation order");
        Rational c;
        if (const auto* u = std::get_if<RationalSeries>(&s->value)) {
            require(k == 0, "univariate series has no marker");
            c = (*u)[n];
        } else {
            c = std::get<BivariateSeries>(s->value)[n].coeff(k);
        }
        *out = dup(to_string(c));
        return POLYA_OK;
    });
}

polya_status polya_series_json(const polya_series* s, char** out) {
    return guard([&] {
        require(s && out, "null argument");
        *out = dup(std::visit([](const auto& v) { return to_json(v).dump(); }, s->value));
        return POLYA_OK;
    });
}

polya_status polya_series_csv(const polya_series* s, char** out) {
    return guard([&] {
        require(s && out, "null argument");
        *out = dup(std::visit([](const auto& v) { return to_csv(v); }, s->value));
        return POLYA_OK;
    });
}

void polya_series_free(polya_series* s) { delete s; }

polya_status polya_singularity(const char* family, double tol, polya_result** out) {
    return guard([&] {
        require(family && out, "null argument");
        *out = nullptr;
        const std::string f = family;
        SingularityReport r;
        if (f == "polya") r = solve_polya_singularity(tol);
        else if (f == "dforest") r = dforest_constants(tol);
        else if (f == "decomposition") r = decomposition_constants(tol);
        else if (f == "hierarchy") r = solve_variant_singularity(Variant::Hierarchy, tol);
        else if (f == "binary") r = solve_variant_singularity(Variant::Binary, tol);
        else throw_invalid("unknown singularity family '" + f + "'");
        return emit(r, r.converged, out);
    });
}

polya_status polya_table(const char* which, size_t m_max, size_t n_exact, double tol, polya_result** out) {
    return guard([&] {
        require(which && out, "null argument");
        *out = nullptr;
        const std::string w = which;
        if (w != "forest-size" && w != "forest-size-conditional") throw_invalid("unknown table '" + w + "'");
        return emit(forest_size_table(w == "forest-size-conditional", m_max, n_exact, tol), true, out);
    });
}

polya_status polya_dn_check(size_t n_lo, size_t n_hi, double tol, polya_result** out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        return emit(dn_asymptotic_check(n_lo, n_hi, tol), true, out);
    });
}

polya_status polya_sample(size_t n, size_t samples, uint64_t seed, size_t threads, polya_result** out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        return emit(run_experiment(n, samples, seed, threads), true, out);
    });
}

polya_status polya_lmax(const size_t* n_values, size_t count, size_t samples, double s, uint64_t seed,
                        size_t threads, polya_result** out) {
    return guard([&] {
        require(out && (n_values || count == 0), "null argument");
        *out = nullptr;
        const std::vector<std::size_t> ns(n_values, n_values + count);
        return emit(lmax_check(ns, samples, s, seed, threads), true, out);
    });
}

polya_status polya_verify(size_t oracle_max, size_t forest_max, size_t series_order, polya_result** out) {
    return guard([&] {
        require(out != nullptr, "null argument");
        *out = nullptr;
        VerifyOptions o;
        o.oracle_max = oracle_max;
        o.forest_max = forest_max;
        o.series_order = series_order;
        const VerifyReport r = run_verify(o);
        return emit(r, r.all_passed(), out);
    });
}

const char* polya_result_json(const polya_result* r) { return r ? r->json.c_str() : ""; }
const char* polya_result_csv(const polya_result* r) { return r ? r->csv.c_str() : ""; }
int polya_result_passed(const polya_result* r) { return r && r->passed ? 1 : 0; }
void polya_result_free(polya_result* r) { delete r; }

void polya_string_free(char* s) { std::free(s); }

}  // extern "C"
