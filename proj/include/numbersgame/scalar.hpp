// Scalar abstraction: exact rationals (GMP) for integer-amplitude play,
// doubles for E-GCM play. Library tolerances live here as well.
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <string>

namespace numbersgame {

using Rational = mpq_class;

namespace tol {
// matching an amplitude product to 4cos^2(pi/k)
inline constexpr double amp = 1e-9;
// dead band around 2 for the float trichotomy
inline constexpr double spec = 1e-8;
// power-iteration residual tolerance
inline constexpr double eig = 1e-12;
// positivity threshold for approximate positions
inline constexpr double zero = 1e-12;
// Coxeter-label search range
inline constexpr int max_label = 1000;
}  // namespace tol

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static Rational from_int(long v) { return Rational(v); }
    static bool is_positive(const Rational& v) { return sgn(v) > 0; }
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static double to_double(const Rational& v) { return v.get_d(); }
    static bool is_integer(const Rational& v) { return v.get_den() == 1; }
    static std::string to_string(const Rational& v) { return v.get_str(); }
    // mpq arithmetic assumes canonical operands; entry points run this on
    // caller-supplied values
    static void normalize(Rational& v) { v.canonicalize(); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static double from_int(long v) { return static_cast<double>(v); }
    static bool is_positive(double v) { return v > tol::zero; }
    static bool is_zero(double v) { return std::abs(v) <= tol::zero; }
    static double to_double(double v) { return v; }
    static bool is_integer(double v) { return std::rint(v) == v; }
    static std::string to_string(double v) { return std::to_string(v); }
    static void normalize(double&) {}
};

// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
    r.canonicalize();
    return r;
}

// 4cos^2(pi/k), the admissible-product ladder.
inline double coxeter_product(int k) {
    double c = std::cos(M_PI / static_cast<double>(k));
    return 4.0 * c * c;
}

// Symmetric edge amplitude for label m: -2cos(pi/m).
inline double symmetric_amplitude(int m) { return -2.0 * std::cos(M_PI / static_cast<double>(m)); }

}  // namespace numbersgame
