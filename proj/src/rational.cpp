#include "polya/rational.hpp"

#include "polya/error.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

namespace polya {

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational parse_rational(std::string_view text) {
    if (text.empty()) throw_invalid("empty rational literal");
    const auto slash = text.find('/');
    auto valid_int = [](std::string_view s) {
        if (s.empty()) return false;
        std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"}
                                                           : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
        throw_invalid("malformed rational literal '" + std::string(text) + "'");
    if (num[0] == '+') num.remove_prefix(1);
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw_invalid("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

long double to_long_double(const Integer& z) {
    if (z == 0) return 0.0L;
    // Take the top 64 bits of |z| and rescale.
    const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
    Integer top = abs(z);
    long shift = 0;
    if (bits > 64) {
        shift = static_cast<long>(bits - 64);
        mpz_fdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    }
    std::uint64_t mant = 0;
    mpz_export(&mant, nullptr, -1, sizeof(mant), 0, 0, top.get_mpz_t());
    long double v = std::ldexp(static_cast<long double>(mant), static_cast<int>(shift));
    return sgn(z) < 0 ? -v : v;
}

long double to_long_double(const Rational& q) {
    if (q == 0) return 0.0L;
    const Integer& num = q.get_num();
    const Integer& den = q.get_den();
    // Scale so the integer quotient carries 64+ significant bits.
    const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
    const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    const long scale = 80 - (nb - db);
    Integer scaled = abs(num);
    Integer quotient;
    if (scale >= 0) {
        mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(scale));
        mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
    } else {
        Integer shifted_den = den;
        mpz_mul_2exp(shifted_den.get_mpz_t(), shifted_den.get_mpz_t(),
                     static_cast<mp_bitcnt_t>(-scale));
        mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), shifted_den.get_mpz_t());
    }
    long double v = to_long_double(quotient);
    v = std::ldexp(v, static_cast<int>(-scale));
    return sgn(num) < 0 ? -v : v;
}

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer derangements(unsigned m) {
    // !0 = 1, !1 = 0, !m = (m-1)(!(m-1) + !(m-2))
    if (m == 0) return 1;
    Integer prev2 = 1, prev1 = 0;
    for (unsigned k = 2; k <= m; ++k) {
        Integer next = (k - 1) * (prev1 + prev2);
        prev2 = prev1;
        prev1 = next;
    }
    return prev1;
}

}  // namespace polya
