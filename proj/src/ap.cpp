#include "gstruve/ap.hpp"

#include "gstruve/errors.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace gstruve {

namespace {

[[noreturn]] void bad_number(std::string_view what, std::string_view s)
{
    throw Error(ErrorKind::InvalidInput, std::string(what) + " in '" + std::string(s) + "'");
}

Integer parse_integer(std::string_view s)
{
    if (s.empty())
        bad_number("empty integer", s);
    for (char c : s)
        if (c < '0' || c > '9')
            bad_number("bad digit", s);
    // a leading zero would select octal
    auto nz = s.find_first_not_of('0');
    if (nz == std::string_view::npos)
        return 0;
    return Integer(std::string(s.substr(nz)));
}

Rational parse_decimal(std::string_view s)
{
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s.remove_prefix(1);
    }
    long exp10 = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto es = s.substr(e + 1);
        if (!es.empty() && (es[0] == '-' || es[0] == '+'))
            exp10 = es[0] == '-' ? -static_cast<long>(parse_integer(es.substr(1))) : static_cast<long>(parse_integer(es.substr(1)));
        else
            exp10 = static_cast<long>(parse_integer(es));
        s = s.substr(0, e);
    }
    std::string digits;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
        exp10 -= static_cast<long>(s.size() - dot - 1);
    } else {
        digits = std::string(s);
    }
    if (digits.empty())
        bad_number("empty number", s);
    Rational q(parse_integer(digits));
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::labs(exp10)));
    if (exp10 >= 0)
        q *= Rational(scale);
    else
        q /= Rational(scale);
    return neg ? Rational(-q) : q;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    while (!text.empty() && text.front() == ' ')
        text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ')
        text.remove_suffix(1);
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Rational den = parse_decimal(text.substr(slash + 1));
        if (den == 0)
            throw Error(ErrorKind::InvalidInput, "zero denominator in '" + std::string(text) + "'");
        return parse_decimal(text.substr(0, slash)) / den;
    }
    return parse_decimal(text);
}

std::string rational_to_string(const Rational& q)
{
    return q.str();
}

bool is_integer(const Rational& q)
{
    return boost::multiprecision::denominator(q) == 1;
}

bool is_nonpositive_integer(const Rational& q)
{
    return is_integer(q) && q <= 0;
}

namespace ap {

mpfr_prec_t bits_for(int digits)
{
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 16;
}

int digits_for(mpfr_prec_t bits)
{
    return static_cast<int>(std::floor((bits - 16) / 3.321928094887362));
}

Real::Real()
{
    mpfr_init2(v_, 64);
    mpfr_set_zero(v_, 1);
}

Real::Real(int digits)
{
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_zero(v_, 1);
}

Real::Real(long v, int digits)
{
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_si(v_, v, MPFR_RNDN);
}

Real::Real(const Rational& q, int digits)
{
    mpfr_init2(v_, bits_for(digits));
    mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
}

Real::Real(std::string_view decimal, int digits)
{
    mpfr_init2(v_, bits_for(digits));
    Rational q = parse_rational(decimal);
    mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
}

Real Real::from_double(double v, int digits)
{
    Real r(digits);
    mpfr_set_d(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::with_bits(mpfr_prec_t bits)
{
    Real r;
    mpfr_set_prec(r.v_, bits);
    mpfr_set_zero(r.v_, 1);
    return r;
}

Real::Real(const Real& o)
{
    mpfr_init2(v_, o.bits());
    mpfr_set(v_, o.v_, MPFR_RNDN);
}

Real::Real(Real&& o) noexcept
{
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
}

Real& Real::operator=(const Real& o)
{
    if (this != &o) {
        mpfr_set_prec(v_, o.bits());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept
{
    mpfr_swap(v_, o.v_);
    return *this;
}

Real::~Real()
{
    mpfr_clear(v_);
}

Real Real::at_digits(int digits) const
{
    Real r(digits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::to_string(int sig) const
{
    if (mpfr_nan_p(v_))
        return "nan";
    if (mpfr_inf_p(v_))
        return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
    if (mpfr_zero_p(v_))
        return "0";
    mpfr_exp_t e = 0;
    char* s = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(std::max(sig, 1)), v_, MPFR_RNDN);
    std::string m(s);
    mpfr_free_str(s);
    std::string out;
    if (m[0] == '-') {
        out = "-";
        m.erase(0, 1);
    }
    out += m[0];
    if (m.size() > 1) {
        out += '.';
        out += m.substr(1);
    }
    long ex = static_cast<long>(e) - 1;
    char buf[32];
    std::snprintf(buf, sizeof buf, "e%+03ld", ex);
    return out + buf;
}

std::string Real::to_string() const
{
    return to_string(digits());
}

#define GS_BINOP(name, fn)                                                  \
    Real& Real::operator name(const Real& o)                                \
    {                                                                       \
        if (o.bits() > bits())                                              \
            mpfr_prec_round(v_, o.bits(), MPFR_RNDN);                       \
        fn(v_, v_, o.v_, MPFR_RNDN);                                        \
        return *this;                                                       \
    }
GS_BINOP(+=, mpfr_add)
GS_BINOP(-=, mpfr_sub)
GS_BINOP(*=, mpfr_mul)
GS_BINOP(/=, mpfr_div)
#undef GS_BINOP

Real& Real::operator*=(long k)
{
    mpfr_mul_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(long k)
{
    mpfr_div_si(v_, v_, k, MPFR_RNDN);
    return *this;
}

Real operator-(const Real& x)
{
    Real r(x);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
}

Real operator+(const Real& x, const Real& y)
{
    Real r = Real::with_bits(std::max(x.bits(), y.bits()));
    mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real operator-(const Real& x, const Real& y)
{
    Real r = Real::with_bits(std::max(x.bits(), y.bits()));
    mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& x, const Real& y)
{
    Real r = Real::with_bits(std::max(x.bits(), y.bits()));
    mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real operator/(const Real& x, const Real& y)
{
    Real r = Real::with_bits(std::max(x.bits(), y.bits()));
    mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

Real operator*(const Real& x, long k)
{
    Real r(x);
    return r *= k;
}

Real operator/(const Real& x, long k)
{
    Real r(x);
    return r /= k;
}

Real operator+(const Real& x, long k)
{
    Real r(x);
    mpfr_add_si(r.v_, r.v_, k, MPFR_RNDN);
    return r;
}

Real operator-(const Real& x, long k)
{
    Real r(x);
    mpfr_sub_si(r.v_, r.v_, k, MPFR_RNDN);
    return r;
}

namespace {

template <class F>
Real unary(const Real& x, F f)
{
    Real r = Real::with_bits(x.bits());
    f(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

}  // namespace

Real pi(int digits)
{
    Real r(digits);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log10(const Real& x) { return unary(x, mpfr_log10); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tgamma(const Real& x) { return unary(x, mpfr_gamma); }

Real lgamma_abs(const Real& x)
{
    Real r = Real::with_bits(x.bits());
    int sign = 0;
    mpfr_lgamma(r.raw(), &sign, x.raw(), MPFR_RNDN);
    return r;
}

Real floor(const Real& x)
{
    Real r = Real::with_bits(x.bits());
    mpfr_floor(r.raw(), x.raw());
    return r;
}

Real round(const Real& x)
{
    Real r = Real::with_bits(x.bits());
    mpfr_round(r.raw(), x.raw());
    return r;
}

Real atan2(const Real& y, const Real& x)
{
    Real r = Real::with_bits(std::max(x.bits(), y.bits()));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, const Real& y)
{
    Real r = Real::with_bits(std::max(x.bits(), y.bits()));
    mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
    return r;
}

Real pow(const Real& x, long n)
{
    Real r = Real::with_bits(x.bits());
    mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
    return r;
}

Real max(const Real& x, const Real& y)
{
    return x < y ? y : x;
}

Real zeta_ui(unsigned long n, int digits)
{
    Real r(digits);
    mpfr_zeta_ui(r.raw(), n, MPFR_RNDN);
    return r;
}

Real pow10(long e, int digits)
{
    Real r(digits);
    mpfr_ui_pow_ui(r.raw(), 10, static_cast<unsigned long>(std::labs(e)), MPFR_RNDN);
    if (e < 0)
        mpfr_ui_div(r.raw(), 1, r.raw(), MPFR_RNDN);
    return r;
}

double log10_abs(const Real& x)
{
    if (x.is_zero())
        return -std::numeric_limits<double>::infinity();
    long e = 0;
    double m = mpfr_get_d_2exp(&e, x.raw(), MPFR_RNDN);
    return std::log10(std::fabs(m)) + static_cast<double>(e) * 0.30102999566398120;
}

// Complex

Complex Complex::polar(const Real& modulus, const Real& angle)
{
    Real s = Real::with_bits(angle.bits());
    Real c = Real::with_bits(angle.bits());
    mpfr_sin_cos(s.raw(), c.raw(), angle.raw(), MPFR_RNDN);
    return {modulus * c, modulus * s};
}

Complex& Complex::operator+=(const Complex& o)
{
    re += o.re;
    im += o.im;
    return *this;
}

Complex& Complex::operator-=(const Complex& o)
{
    re -= o.re;
    im -= o.im;
    return *this;
}

Complex& Complex::operator*=(const Complex& o)
{
    Real r = re * o.re - im * o.im;
    Real i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator/=(const Complex& o)
{
    if (o.im.is_zero()) {
        re /= o.re;
        im /= o.re;
        return *this;
    }
    Real d = norm(o);
    Real r = (re * o.re + im * o.im) / d;
    Real i = (im * o.re - re * o.im) / d;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Complex& Complex::operator*=(const Real& o)
{
    re *= o;
    im *= o;
    return *this;
}

Complex& Complex::operator/=(const Real& o)
{
    re /= o;
    im /= o;
    return *this;
}

Real norm(const Complex& z)
{
    return z.re * z.re + z.im * z.im;
}

Real abs(const Complex& z)
{
    Real r = Real::with_bits(std::max(z.re.bits(), z.im.bits()));
    mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
    return r;
}

Real arg(const Complex& z)
{
    return atan2(z.im, z.re);
}

Complex conj(const Complex& z)
{
    return {z.re, -z.im};
}

Complex exp(const Complex& z)
{
    return Complex::polar(exp(z.re), z.im);
}

Complex log(const Complex& z)
{
    return {log(abs(z)), arg(z)};
}

Complex sin(const Complex& z)
{
    // sin(x+iy) = sin x cosh y + i cos x sinh y
    Real ch = Real::with_bits(z.im.bits());
    Real sh = Real::with_bits(z.im.bits());
    mpfr_sinh_cosh(sh.raw(), ch.raw(), z.im.raw(), MPFR_RNDN);
    return {sin(z.re) * ch, cos(z.re) * sh};
}

Complex pow(const Complex& z, const Real& e)
{
    if (z.is_zero())
        return Complex(Real::with_bits(e.bits()));
    return Complex::polar(pow(abs(z), e), arg(z) * e);
}

Complex pow(const Complex& z, long n)
{
    Complex base = z;
    Complex acc(Real(1L, z.digits()));
    unsigned long k = static_cast<unsigned long>(std::labs(n));
    while (k) {
        if (k & 1)
            acc *= base;
        k >>= 1;
        if (k)
            base *= base;
    }
    if (n < 0)
        return Complex(Real(1L, z.digits())) / acc;
    return acc;
}

namespace {

// log Gamma(z) for Re z >= 1/2 by the Stirling series after an upward shift.
Complex lgamma_right(const Complex& z)
{
    const mpfr_prec_t bits = z.re.bits();
    const int dig = digits_for(bits);
    const double radius = 0.115 * static_cast<double>(bits) + 8.0;

    Complex w = z;
    Complex shift_prod(Real(1L, dig));
    bool shifted = false;
    if (abs(w).to_double() < radius) {
        long m = static_cast<long>(std::ceil(radius - w.re.to_double()));
        for (long k = 0; k < m; ++k) {
            shift_prod *= w;
            w.re += Real(1L, dig);
        }
        shifted = true;
    }

    Real half(Rational(1, 2), dig);
    Complex lw = log(w);
    Complex s = (w - Complex(half)) * lw - w;
    s.re += log(pi(dig) * 2L) * half;

    // B_{2k} = (-1)^{k+1} 2 (2k)! zeta(2k) / (2 pi)^{2k}
    Real twopi2 = pi(dig) * pi(dig) * 4L;
    Real f(2L, dig);
    Complex winv = Complex(Real(1L, dig)) / w;
    Complex winv2 = winv * winv;
    Complex wpow = winv;
    Real tiny = pow10(-dig - 5, dig) * abs(s);
    Real prev_mag;
    for (long k = 1; k < 4 * dig + 50; ++k) {
        f *= (2 * k) * (2 * k - 1);
        f /= twopi2;
        Real b = f * zeta_ui(static_cast<unsigned long>(2 * k), dig);
        if (k % 2 == 0)
            b = -b;
        Complex term = wpow * (b / ((2 * k) * (2 * k - 1)));
        Real mag = abs(term);
        if (k > 1 && mag > prev_mag)
            break;
        s += term;
        if (mag < tiny)
            break;
        prev_mag = mag;
        wpow *= winv2;
    }
    if (shifted)
        s -= log(shift_prod);
    return s;
}

}  // namespace

Complex lgamma(const Complex& z)
{
    const int dig = z.digits();
    const int work = dig + 12;
    Complex zw = z.at_digits(work);
    Complex r;
    if (zw.re.to_double() < 0.5) {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        Complex one_minus = Complex(Real(1L, work)) - zw;
        Complex pz = zw * pi(work);
        r = Complex(log(pi(work))) - log(sin(pz)) - lgamma_right(one_minus);
    } else {
        r = lgamma_right(zw);
    }
    return r;
}

Complex tgamma(const Complex& z)
{
    const int dig = z.digits();
    // exp amplifies the absolute error of log Gamma by its magnitude
    int extra = static_cast<int>(std::ceil(std::log10(abs(z).to_double() + 10.0) * 2.0)) + 4;
    Complex lg = lgamma(z.at_digits(dig + extra));
    return exp(lg).at_digits(dig);
}

}  // namespace ap
}  // namespace gstruve
