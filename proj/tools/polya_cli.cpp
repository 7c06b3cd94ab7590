// Command-line front end over the C API.
#include "polya/polya.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

enum Exit {
    kOk = 0,
    kChecksFailed = 1,
    kInvalid = 2,
    kLimit = 3,
    kNumeric = 4,
    kInternal = 5,
};

int exit_for(polya_status s) {
    switch (s) {
        case POLYA_OK: return kOk;
        case POLYA_INVALID_ARGUMENT: return kInvalid;
        case POLYA_LIMIT_EXCEEDED: return kLimit;
        case POLYA_NUMERIC: return kNumeric;
        case POLYA_CHECK_FAILED: return kChecksFailed;
        case POLYA_INTERNAL: return kInternal;
    }
    return kInternal;
}

struct Output {
    std::string format = "json";
    std::string path;

    int write(const std::string& text) const {
        if (path.empty() || path == "-") {
            std::fwrite(text.data(), 1, text.size(), stdout);
            if (!text.empty() && text.back() != '\n') std::fputc('\n', stdout);
            return kOk;
        }
        std::ofstream f(path, std::ios::binary);
        f << text;
        if (!text.empty() && text.back() != '\n') f << '\n';
        if (!f) {
            std::cerr << "error: cannot write " << path << "\n";
            return kInternal;
        }
        return kOk;
    }
};

int report_error(polya_status s) {
    std::cerr << "error (" << polya_status_name(s) << "): " << polya_last_error() << "\n";
    return exit_for(s);
}

// Takes the handle by address: the producer call in the first argument fills it.
int finish(polya_status s, polya_result** handle, const Output& out, const char* failure_note) {
    if (s != POLYA_OK) return report_error(s);
    polya_result* r = *handle;
    const bool passed = polya_result_passed(r);
    int code = out.write(out.format == "csv" ? polya_result_csv(r) : polya_result_json(r));
    polya_result_free(r);
    if (code == kOk && !passed) {
        std::cerr << failure_note << "\n";
        code = kChecksFailed;
    }
    return code;
}

std::vector<std::size_t> parse_list(const std::string& text) {
    std::vector<std::size_t> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(item, &pos);
        if (pos != item.size()) throw std::invalid_argument(item);
        out.push_back(static_cast<std::size_t>(v));
    }
    return out;
}

void print_matrix(const char* json) {
    // Compact pass/fail view on stderr; the full report goes to the output.
    const auto j = nlohmann::json::parse(json);
    for (const auto& c : j.at("checks"))
        std::fprintf(stderr, "  %-32s %-16s %s\n", c.at("name").get<std::string>().c_str(),
                     c.at("range").get<std::string>().c_str(), c.at("passed").get<bool>() ? "PASS" : "FAIL");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration, singularity constants and sampling for Polya trees"};
    app.require_subcommand(1);
    app.set_version_flag("--version", polya_version());

    Output out;
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--output,-o", out.path, "write here instead of stdout");
    };

    const std::vector<std::string> families = {
        "polya", "cayley", "dforest", "ctree-poly", "pointed", "dforest-components", "hierarchy",
        "binary", "omega", "identity", "identity-dforest", "identity-pointed", "e-series"};
    std::string family, omega;
    std::size_t order = 0;
    auto* coeffs = app.add_subcommand("coeffs", "exact coefficients up to z^n");
    coeffs->add_option("--family", family, "coefficient family")->required()->check(CLI::IsMember(families));
    coeffs->add_option("--n", order, "truncation order (default: POLYA_ORDER / POLYA_BIVARIATE_ORDER)");
    coeffs->add_option("--omega", omega, "outdegree set for --family omega: all, all-1, all-1,3, 0,2, ...");
    add_output(coeffs);

    std::string sfamily = "polya";
    double tol = 1e-12;
    auto* sing = app.add_subcommand("singularity", "dominant singularity and derived constants");
    sing->add_option("--family", sfamily, "polya, dforest, decomposition, hierarchy or binary")
        ->check(CLI::IsMember({"polya", "dforest", "decomposition", "hierarchy", "binary"}));
    sing->add_option("--tol", tol, "tolerance in [1e-12, 1)");
    add_output(sing);

    std::string which = "forest-size";
    std::size_t mmax = 7, n_exact = 300;
    auto* table = app.add_subcommand("table", "forest-size distribution, asymptotic and exact");
    table->add_option("--which", which, "forest-size or forest-size-conditional")
        ->check(CLI::IsMember({"forest-size", "forest-size-conditional"}));
    table->add_option("--mmax,--m", mmax, "largest forest size");
    table->add_option("--n", n_exact, "size for the exact finite-n row");
    table->add_option("--tol", tol, "tolerance for the constants");
    add_output(table);

    std::size_t dn_lo = 150, dn_hi = 160;
    auto* dn = app.add_subcommand("dn-check", "exact d_n against its asymptotic form");
    dn->add_option("--from", dn_lo, "first n");
    dn->add_option("--to", dn_hi, "last n");
    dn->add_option("--tol", tol, "tolerance for the constants");
    add_output(dn);

    std::size_t n = 0, samples = 1000, threads = 0;
    std::uint64_t seed = 1;
    std::string lmax_list;
    double s_exp = 0.5;
    auto* sample = app.add_subcommand("sample", "random trees and decomposition statistics");
    sample->add_option("--n", n, "tree size (omit with --lmax)");
    sample->add_option("--samples", samples, "number of samples");
    sample->add_option("--seed", seed, "master seed");
    sample->add_option("--threads", threads, "worker threads, 0 = all cores");
    sample->add_option("--lmax", lmax_list, "comma separated sizes: run the L_n check instead");
    sample->add_option("--s", s_exp, "interval exponent for --lmax, in (0, 1)");
    add_output(sample);

    std::size_t oracle_max = 8, forest_max = 0, series_order = 100;
    auto* verify = app.add_subcommand("verify", "oracle against series equivalences");
    verify->add_option("--oracle-max", oracle_max, "largest tree size enumerated");
    verify->add_option("--forest-max", forest_max, "largest forest size, 0 = oracle-max + 2 capped at 12");
    verify->add_option("--series-order", series_order, "order for series identities");
    add_output(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    if (coeffs->parsed()) {
        if (family == "omega" && omega.empty()) {
            std::cerr << "error: --family omega needs --omega\n";
            return kInvalid;
        }
        if (family != "omega" && !omega.empty()) {
            std::cerr << "error: --omega only applies to --family omega\n";
            return kInvalid;
        }
        const int bi = polya_family_is_bivariate(family.c_str());
        if (order == 0) order = polya_default_order(bi);
        polya_series* ser = nullptr;
        const polya_status st = polya_coeffs(family.c_str(), order, omega.empty() ? nullptr : omega.c_str(), &ser);
        if (st != POLYA_OK) return report_error(st);
        char* text = nullptr;
        const polya_status st2 = out.format == "csv" ? polya_series_csv(ser, &text) : polya_series_json(ser, &text);
        polya_series_free(ser);
        if (st2 != POLYA_OK) return report_error(st2);
        const int code = out.write(text);
        polya_string_free(text);
        return code;
    }
    if (sing->parsed()) {
        polya_result* r = nullptr;
        return finish(polya_singularity(sfamily.c_str(), tol, &r), &r, out,
                      "warning: tolerance not reached; report flagged as not converged");
    }
    if (table->parsed()) {
        polya_result* r = nullptr;
        return finish(polya_table(which.c_str(), mmax, n_exact, tol, &r), &r, out, "");
    }
    if (dn->parsed()) {
        polya_result* r = nullptr;
        return finish(polya_dn_check(dn_lo, dn_hi, tol, &r), &r, out, "");
    }
    if (sample->parsed()) {
        polya_result* r = nullptr;
        if (!lmax_list.empty()) {
            std::vector<std::size_t> ns;
            try {
                ns = parse_list(lmax_list);
            } catch (const std::exception&) {
                std::cerr << "error: --lmax expects comma separated sizes\n";
                return kInvalid;
            }
            return finish(polya_lmax(ns.data(), ns.size(), samples, s_exp, seed, threads, &r), &r, out, "");
        }
        if (n == 0) {
            std::cerr << "error: sample needs --n or --lmax\n";
            return kInvalid;
        }
        return finish(polya_sample(n, samples, seed, threads, &r), &r, out, "");
    }
    if (verify->parsed()) {
        polya_result* r = nullptr;
        const polya_status st = polya_verify(oracle_max, forest_max, series_order, &r);
        if (st != POLYA_OK) return report_error(st);
        print_matrix(polya_result_json(r));
        return finish(st, &r, out, "verify: at least one check failed");
    }
    return kInvalid;
}
