#include "kostant/numbers.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <limits>

namespace kostant {

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonZeroSum: return "NonZeroSum";
        case ErrorKind::EmptyPolytope: return "EmptyPolytope";
        case ErrorKind::BadParams: return "BadParams";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::InfeasibleFlow: return "InfeasibleFlow";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::NegativeArg: return "NegativeArg";
        case ErrorKind::ZeroMarginal: return "ZeroMarginal";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::RegimeViolation: return "RegimeViolation";
        case ErrorKind::HypothesisViolation: return "HypothesisViolation";
        case ErrorKind::DomainViolation: return "DomainViolation";
        case ErrorKind::NegativeEntry: return "NegativeEntry";
        case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const BigRat& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double big_log(const BigInt& v) {
    if (v <= 0) throw Error(ErrorKind::DomainViolation, "big_log requires a positive value");
    const unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
    if (bits <= 900) return std::log(v.convert_to<double>());
    // Keep 64 high bits of mantissa, account for the shift exactly.
    const unsigned shift = bits - 63;
    const BigInt top = v >> shift;
    return std::log(top.convert_to<double>()) + static_cast<double>(shift) * std::log(2.0);
}

BigInt factorial(long long n) {
    if (n < 0) throw Error(ErrorKind::NegativeArg, "factorial of negative argument");
    BigInt r = 1;
    for (long long k = 2; k <= n; ++k) r *= k;
    return r;
}

BigInt binomial(const BigInt& n, long long k) {
    if (k < 0) return 0;
    if (n >= 0 && BigInt(k) > n) return 0;
    BigInt r = 1;
    for (long long i = 1; i <= k; ++i) {
        r *= (n - (i - 1));
        r /= i;  // exact at every step
    }
    return r;
}

BigInt pow_int(const BigInt& base, unsigned long exp) {
    BigInt r = 1;
    BigInt b = base;
    while (exp > 0) {
        if (exp & 1UL) r *= b;
        b *= b;
        exp >>= 1UL;
    }
    return r;
}

BigInt odd_double_factorial(long long m) {
    BigInt r = 1;
    for (long long k = 1; k <= m; ++k) r *= (2 * k - 1);
    return r;
}

BigRat rationalize(double value, long long max_den) {
    if (max_den < 1) throw Error(ErrorKind::BadParams, "rationalize requires max_den >= 1");
    if (!std::isfinite(value))
        throw Error(ErrorKind::DomainViolation, "rationalize requires a finite value");
    const bool neg = value < 0.0;
    double x = std::abs(value);

    // Continued fraction convergents p/q with q <= max_den.
    long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    double frac = x;
    for (int it = 0; it < 64; ++it) {
        const double fa = std::floor(frac);
        if (fa > 9e17) break;
        const long long a = static_cast<long long>(fa);
        if (q1 != 0 && a != 0 && q1 > (max_den - q0) / a) break;
        const long long p2 = a * p1 + p0;
        const long long q2 = a * q1 + q0;
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        const double rem = frac - fa;
        if (rem < 1e-18) break;
        frac = 1.0 / rem;
    }
    if (q1 == 0) return BigRat(0);
    BigRat r = big_rat(p1, q1);
    return neg ? BigRat(-r) : r;
}

}  // namespace kostant
