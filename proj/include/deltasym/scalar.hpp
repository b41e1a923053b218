// Exact complex scalars with rational real and imaginary parts.
//
// All coefficients in this library are values of this type. Arithmetic is
// exact; division by zero throws. The rational backend is
// boost::multiprecision::cpp_rational (header-only, arbitrary precision).
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace dsym {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Error kinds surfaced through the C API as status codes.
enum class ErrorKind {
    parse,        // malformed expression text
    dimension,    // mixed dimensions or variable spaces
    domain,       // semantic precondition violated (bad input value)
    inconsistent, // an exact linear system has no solution
    internal      // a should-never-happen consistency check failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// A complex number a + b*i with exact rational a, b.
struct Scalar {
    Rational re;
    Rational im;

    Scalar() : re(0), im(0) {}
    Scalar(long v) : re(v), im(0) {}
    Scalar(const Rational& r) : re(r), im(0) {}
    Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    Scalar conj() const { return Scalar(re, -im); }

    /// |z|^2 = re^2 + im^2, exact. Used wherever a magnitude comparison is
    /// needed: |a| <= |b| is tested as abs_sq(a) <= abs_sq(b).
    Rational abs_sq() const { return re * re + im * im; }

    Scalar operator-() const { return Scalar(-re, -im); }
    Scalar& operator+=(const Scalar& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Scalar& operator-=(const Scalar& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Scalar& operator*=(const Scalar& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Scalar& operator/=(const Scalar& o) {
        Rational n = o.abs_sq();
        if (n == 0) throw Error(ErrorKind::domain, "division by zero scalar");
        Rational r = (re * o.re + im * o.im) / n;
        Rational i = (im * o.re - re * o.im) / n;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) = default;
};

/// i^k for integer k (negative allowed).
Scalar i_power(long k);

/// Canonical text form: "0", "3", "-3/2", "i", "-i", "2/3*i", "1-i", "3/2+1/4*i".
std::string to_string(const Rational& r);
std::string to_string(const Scalar& s);

} // namespace dsym
