#include "polya/error.hpp"
#include "polya/series_engine.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace polya {

namespace {

std::vector<std::size_t> normalized(std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::vector<std::size_t> parse_list(const std::string& text, const std::string& whole) {
    std::vector<std::size_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t comma = std::min(text.find(',', pos), text.size());
        const std::string item = text.substr(pos, comma - pos);
        std::size_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size())
            throw_invalid("malformed outdegree set '" + whole + "'");
        out.push_back(value);
        pos = comma + 1;
    }
    return out;
}

struct OmegaRun {
    RationalSeries a;
    std::vector<RationalSeries> z;  // Z(S_k; A(z), A(z^2), ...) for k <= K
    RationalSeries e;               // exp(sum_i A(z^i)/i), cofinite case only
};

void require_usable(const OmegaSet& omega) {
    if (!omega.contains(0)) throw_invalid("outdegree set must contain 0");
    if (!omega.is_cofinite() && omega.listed() == std::vector<std::size_t>{0, 1})
        throw_invalid("outdegree set {0,1} (paths only) is not supported");
}

OmegaRun run_omega(const OmegaSet& omega, std::size_t N) {
    require_usable(omega);
    if (N < 1) throw_invalid("omega_polya_coeffs needs N >= 1");

    const std::size_t K = omega.listed().empty() ? 0 : omega.listed().back();
    OmegaRun run;
    run.a = RationalSeries(N, "omega");
    run.z.assign(K + 1, RationalSeries(N));
    run.z[0][0] = 1;
    RationalSeries S(N);
    if (omega.is_cofinite()) {
        run.e = RationalSeries(N);
        run.e[0] = 1;
    }
    RationalSeries& A = run.a;
    Rational tmp;
    for (std::size_t n = 1; n <= N; ++n) {
        const std::size_t d = n - 1;
        // Degree d of every Z_k uses A up to degree d only.
        if (d >= 1) {
            for (std::size_t k = 1; k <= K; ++k) {
                Rational acc = 0;
                for (std::size_t j = 1; j <= k; ++j)
                    for (std::size_t e = j; e <= d; e += j) {
                        if (A[e / j] == 0 || run.z[k - j][d - e] == 0) continue;
                        tmp = A[e / j] * run.z[k - j][d - e];
                        acc += tmp;
                    }
                run.z[k][d] = acc / k;
            }
            if (omega.is_cofinite()) {
                for (std::size_t j = 1; j <= d; ++j)
                    if (d % j == 0) S[d] += A[d / j] / j;
                Rational acc = 0;
                for (std::size_t e = 1; e <= d; ++e) {
                    if (S[e] == 0 || run.e[d - e] == 0) continue;
                    tmp = S[e] * run.e[d - e];
                    tmp *= e;
                    acc += tmp;
                }
                run.e[d] = acc / d;
            }
        }
        Rational sum = 0;
        if (omega.is_cofinite()) {
            sum = run.e[d];
            for (std::size_t k : omega.listed()) sum -= run.z[k][d];
        } else {
            for (std::size_t k : omega.listed()) sum += run.z[k][d];
        }
        A[n] = sum;
    }
    return run;
}

}  // namespace

OmegaSet OmegaSet::finite(std::vector<std::size_t> members) {
    OmegaSet s;
    s.cofinite_ = false;
    s.listed_ = normalized(std::move(members));
    return s;
}

OmegaSet OmegaSet::all_except(std::vector<std::size_t> excluded) {
    OmegaSet s;
    s.cofinite_ = true;
    s.listed_ = normalized(std::move(excluded));
    return s;
}

OmegaSet OmegaSet::parse(const std::string& raw) {
    std::string text;
    for (char c : raw)
        if (!std::isspace(static_cast<unsigned char>(c)))
            text += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (text.empty()) throw_invalid("empty outdegree set");
    if (text == "hierarchy") return all_except({1});
    if (text == "binary") return finite({0, 2});
    if (text == "all") return all_except({});
    const OmegaSet s = text.rfind("all-", 0) == 0 ? all_except(parse_list(text.substr(4), raw))
                                                   : finite(parse_list(text, raw));
    require_usable(s);
    return s;
}

bool OmegaSet::contains(std::size_t k) const {
    const bool listed = std::binary_search(listed_.begin(), listed_.end(), k);
    return cofinite_ ? !listed : listed;
}

std::string OmegaSet::to_string() const {
    std::string out = cofinite_ ? "all" : "";
    if (cofinite_ && !listed_.empty()) out += "-";
    for (std::size_t i = 0; i < listed_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(listed_[i]);
    }
    return out;
}

RationalSeries omega_polya_coeffs(const OmegaSet& omega, std::size_t N) {
    return run_omega(omega, N).a;
}

RationalSeries omega_ctree_mean_series(const OmegaSet& omega, std::size_t N) {
    const OmegaRun run = run_omega(omega, N);
    RationalSeries w(N);  // sum_{k in Omega, k >= 1} Z_{k-1}
    if (omega.is_cofinite()) {
        w = run.e;
        for (std::size_t k : omega.listed())
            if (k >= 1) w -= run.z[k - 1];
    } else {
        for (std::size_t k : omega.listed())
            if (k >= 1) w += run.z[k - 1];
    }
    RationalSeries one(N);
    one[0] = 1;
    RationalSeries out = run.a * reciprocal(one - w.shifted(1));
    out.set_family("omega-ctree-mean");
    return out;
}

}  // namespace polya
