#pragma once

#include <mpfr.h>

#include <boost/multiprecision/gmp.hpp>

#include <algorithm>
#include <string>
#include <string_view>

namespace gstruve {

using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Accepts "p/q", integers and decimals with optional exponent ("-0.25", "1e-3").
Rational parse_rational(std::string_view text);
std::string rational_to_string(const Rational& q);

// True when q is an integer <= 0.
bool is_nonpositive_integer(const Rational& q);
bool is_integer(const Rational& q);

namespace ap {

// Binary precision carrying `digits` decimal digits plus a few guard bits.
mpfr_prec_t bits_for(int digits);
int digits_for(mpfr_prec_t bits);

// Owning wrapper around mpfr_t. Every value carries its own precision;
// the result of a binary operation takes the larger operand precision.
class Real {
public:
    Real();
    explicit Real(int digits);
    Real(long v, int digits);
    Real(const Rational& q, int digits);
    Real(std::string_view decimal, int digits);
    static Real from_double(double v, int digits);
    static Real with_bits(mpfr_prec_t bits);

    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t bits() const { return mpfr_get_prec(v_); }
    int digits() const { return digits_for(bits()); }

    // Same value rounded to a different precision.
    Real at_digits(int digits) const;

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_integer() const { return mpfr_integer_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    // Scientific notation with `sig` significant digits, e.g. "-1.234e+05".
    std::string to_string(int sig) const;
    // Shortest form that still carries all digits of the working precision.
    std::string to_string() const;

    Real& operator+=(const Real& o);
    Real& operator-=(const Real& o);
    Real& operator*=(const Real& o);
    Real& operator/=(const Real& o);
    Real& operator*=(long k);
    Real& operator/=(long k);

    friend Real operator-(const Real& x);
    friend Real operator+(const Real& x, const Real& y);
    friend Real operator-(const Real& x, const Real& y);
    friend Real operator*(const Real& x, const Real& y);
    friend Real operator/(const Real& x, const Real& y);
    friend Real operator*(const Real& x, long k);
    friend Real operator/(const Real& x, long k);
    friend Real operator+(const Real& x, long k);
    friend Real operator-(const Real& x, long k);

    friend bool operator<(const Real& x, const Real& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const Real& x, const Real& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
    friend bool operator<=(const Real& x, const Real& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
    friend bool operator>=(const Real& x, const Real& y) { return mpfr_greaterequal_p(x.v_, y.v_) != 0; }
    friend bool operator==(const Real& x, const Real& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }

private:
    mpfr_t v_;
};

Real pi(int digits);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real log10(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real floor(const Real& x);
Real round(const Real& x);
Real max(const Real& x, const Real& y);
// Gamma and log|Gamma| of a real argument, computed by MPFR.
Real tgamma(const Real& x);
Real lgamma_abs(const Real& x);
// Riemann zeta at a positive integer.
Real zeta_ui(unsigned long n, int digits);
// 10^e at the given precision.
Real pow10(long e, int digits);

// Decimal exponent of |x| as a double (log10|x|); -inf for zero.
double log10_abs(const Real& x);

class Complex {
public:
    Complex() = default;
    explicit Complex(int digits) : re(digits), im(digits) {}
    Complex(Real r) : re(std::move(r)), im(re.digits()) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex polar(const Real& modulus, const Real& angle);

    int digits() const { return std::max(re.digits(), im.digits()); }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    Complex at_digits(int digits) const { return {re.at_digits(digits), im.at_digits(digits)}; }

    Complex& operator+=(const Complex& o);
    Complex& operator-=(const Complex& o);
    Complex& operator*=(const Complex& o);
    Complex& operator/=(const Complex& o);
    Complex& operator*=(const Real& o);
    Complex& operator/=(const Real& o);

    friend Complex operator-(const Complex& x) { return {-x.re, -x.im}; }
    friend Complex operator+(Complex x, const Complex& y) { return x += y; }
    friend Complex operator-(Complex x, const Complex& y) { return x -= y; }
    friend Complex operator*(Complex x, const Complex& y) { return x *= y; }
    friend Complex operator/(Complex x, const Complex& y) { return x /= y; }
    friend Complex operator*(Complex x, const Real& y) { return x *= y; }
    friend Complex operator/(Complex x, const Real& y) { return x /= y; }

    Real re;
    Real im;
};

Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);   // principal, in (-pi, pi]
Complex conj(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sin(const Complex& z);
Complex pow(const Complex& z, const Real& e);  // principal branch
Complex pow(const Complex& z, long n);

// Gamma of a complex argument. Stirling series with Bernoulli numbers
// obtained from zeta values, shifted upward and reflected when needed.
Complex tgamma(const Complex& z);
Complex lgamma(const Complex& z);  // some branch of log Gamma; exp() of it is exact

}  // namespace ap
}  // namespace gstruve
