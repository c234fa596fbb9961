#include "symprop/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace symprop {

namespace {

// thread_local: decimal rendering runs inside parallel table workers.
const BigInt& ten_pow(std::size_t k) {
    thread_local std::vector<BigInt> cache{BigInt(1)};
    while (cache.size() <= k) cache.push_back(cache.back() * 10);
    return cache[k];
}

std::size_t digit_count(const BigInt& x) {
    // x > 0. Bit length gives a one-off estimate; fix up against powers of 10.
    std::size_t bits = boost::multiprecision::msb(x) + 1;
    auto est = static_cast<std::size_t>(static_cast<double>(bits) * 0.30102999566398
);
    while (ten_pow(est) <= x) ++est;
    while (est > 1 && ten_pow(est - 1) > x) --est;
    return est;  // 10^(est-1) <= x < 10^est
}

// Round-half-even integer division, num >= 0, den > 0.
BigInt divide_rounded(const BigInt& num, const BigInt& den) {
    BigInt q = num / den;
    BigInt r = num % den;
    BigInt twice = r * 2;
    if (twice > den || (twice == den && (q & 1) != 0)) ++q;
    return q;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    return Rational(num) / Rational(den);
}

std::string fraction_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

Rational parse_fraction(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos || slash == 0 || slash + 1 == text.size())
        throw std::invalid_argument("parse_fraction: expected \"num/den\"");
    auto is_int = [](std::string_view s, bool allow_sign) {
        if (allow_sign && s.size() > 1 && s.front() == '-') s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string_view num_s = text.substr(0, slash);
    std::string_view den_s = text.substr(slash + 1);
    if (!is_int(num_s, true) || !is_int(den_s, false))
        throw std::invalid_argument("parse_fraction: malformed integer");
    BigInt num{std::string(num_s)};
    BigInt den{std::string(den_s)};
    return make_rational(num, den);
}

std::string decimal_string(const Rational& value, int significant_digits) {
    if (significant_digits < 1)
        throw std::invalid_argument("decimal_string: need at least one digit");
    if (value == 0) return "0";

    BigInt num = numerator(value);
    const BigInt& den = denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;

    const auto sig = static_cast<std::size_t>(significant_digits);
    // Find exponent E with 10^E <= num/den < 10^(E+1), then the rounded
    // sig-digit mantissa. The digit-count estimate can be off by one, so
    // re-check after rounding.
    long exp10 = static_cast<long>(digit_count(num)) - static_cast<long>(digit_count(den));
    BigInt mantissa;
    for (;;) {
        long shift = static_cast<long>(sig) - 1 - exp10;
        mantissa = shift >= 0
                       ? divide_rounded(num * ten_pow(static_cast<std::size_t>(shift)), den)
                       : divide_rounded(num, den * ten_pow(static_cast<std::size_t>(-shift)));
        if (mantissa >= ten_pow(sig)) {
            ++exp10;  // rounded up to the next decade, e.g. 0.9999... -> 1.0
            continue;
        }
        if (mantissa < ten_pow(sig - 1)) {
            --exp10;
            continue;
        }
        break;
    }

    std::string digits = mantissa.str();
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();

    std::string out;
    if (exp10 < -4 || exp10 >= static_cast<long>(sig)) {
        out = digits.substr(0, 1);
        if (digits.size() > 1) out += "." + digits.substr(1);
        out += 'e';
        out += (exp10 < 0) ? '-' : '+';
        std::string mag = std::to_string(exp10 < 0 ? -exp10 : exp10);
        if (mag.size() < 2) mag.insert(0, "0");
        out += mag;
    } else if (exp10 < 0) {
        out = "0." + std::string(static_cast<std::size_t>(-exp10 - 1), '0') + digits;
    } else {
        auto point = static_cast<std::size_t>(exp10) + 1;
        if (digits.size() <= point) {
            out = digits + std::string(point - digits.size(), '0');
        } else {
            out = digits.substr(0, point) + "." + digits.substr(point);
        }
    }
    return negative ? "-" + out : out;
}

double log_bigint(const BigInt& z) {
    if (z <= 0) throw std::domain_error("log_bigint: argument must be positive");
    std::size_t bits = boost::multiprecision::msb(z) + 1;
    if (bits <= 62) return std::log(z.convert_to<double>());
    std::size_t shift = bits - 62;
    BigInt top = z >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * M_LN2;
}

double log_rational(const Rational& q) {
    if (q <= 0) throw std::domain_error("log_rational: argument must be positive");
    return log_bigint(numerator(q)) - log_bigint(denominator(q));
}

}  // namespace symprop
