#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "kostant/errors.hpp"

namespace kostant {

// Lattice point counts routinely overflow 64 bits (binomials in the Lidskii
// terms, dilated counts in sweeps), so counts are arbitrary precision and
// flows are exact rationals.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigRat& q) { return q.convert_to<double>(); }

inline BigRat big_rat(long long num, long long den = 1) {
    return BigRat(BigInt(num), BigInt(den));
}

inline bool is_integer(const BigRat& q) { return boost::multiprecision::denominator(q) == 1; }

std::string to_string(const BigInt& v);
std::string to_string(const BigRat& q);

// Natural log of a positive big integer, safe for values far beyond the
// double range.
double big_log(const BigInt& v);

BigInt factorial(long long n);
BigInt binomial(const BigInt& n, long long k);
BigInt pow_int(const BigInt& base, unsigned long exp);

// (2m-1)!! = 1*3*5*...*(2m-1); m <= 0 gives the empty product.
BigInt odd_double_factorial(long long m);

// Nearest rational with denominator <= max_den (continued fractions).
BigRat rationalize(double value, long long max_den);

// Compensated summation; bound accumulations run through this so that the
// reported log-scale quantities are reproducible and accurate.
class KahanSum {
  public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

  private:
    double s_ = 0.0;
    double c_ = 0.0;
};

// x*log(x) with the 0*log(0) = 0 convention.
inline double xlogx(double x) {
    if (x < 0.0) throw Error(ErrorKind::NegativeArg, "xlogx requires x >= 0");
    if (x == 0.0) return 0.0;
    return x * std::log(x);
}

}  // namespace kostant
