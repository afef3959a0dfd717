#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "tricontract/errors.hpp"

namespace tricontract {

// Directed-rounding emulation on top of round-to-nearest arithmetic.
//
// Each primitive computes the rounded result together with the sign of the
// exact residual (two_sum / fma tricks), and steps one ulp outward only when
// the operation was inexact in that direction.  Exact operations therefore
// stay exact, which the bound computations rely on (a zero residual vector
// must produce an exactly zero Y bound).

inline double next_up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

inline double next_down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

namespace detail {

// Below this magnitude the fma residuals can themselves round (ties into the
// subnormal range), so round outward unconditionally instead of trusting a
// zero residual.  Addition needs no guard: the two_sum error term is exact.
inline constexpr double kResidualSafe = 0x1p-900;

inline double add_down(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb); // exact: a + b = s + err
    return err < 0.0 ? next_down(s) : s;
}

inline double add_up(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return err > 0.0 ? next_up(s) : s;
}

inline double sub_down(double a, double b) { return add_down(a, -b); }
inline double sub_up(double a, double b) { return add_up(a, -b); }

inline double mul_down(double a, double b) {
    double p = a * b;
    if (a == 0.0 || b == 0.0) return p; // exact signed zero
    if (std::abs(p) < kResidualSafe) return next_down(p);
    double e = std::fma(a, b, -p); // exact: a*b = p + e
    return e < 0.0 ? next_down(p) : p;
}

inline double mul_up(double a, double b) {
    double p = a * b;
    if (a == 0.0 || b == 0.0) return p;
    if (std::abs(p) < kResidualSafe) return next_up(p);
    double e = std::fma(a, b, -p);
    return e > 0.0 ? next_up(p) : p;
}

inline double div_down(double x, double y) {
    double q = x / y;
    if (x == 0.0) return q; // exact signed zero
    if (std::abs(x) < kResidualSafe || std::abs(q) < kResidualSafe) return next_down(q);
    double r = std::fma(q, y, -x); // sign of q*y - x
    bool q_high = (y > 0.0) ? (r > 0.0) : (r < 0.0);
    return q_high ? next_down(q) : q;
}

inline double div_up(double x, double y) {
    double q = x / y;
    if (x == 0.0) return q;
    if (std::abs(x) < kResidualSafe || std::abs(q) < kResidualSafe) return next_up(q);
    double r = std::fma(q, y, -x);
    bool q_low = (y > 0.0) ? (r < 0.0) : (r > 0.0);
    return q_low ? next_up(q) : q;
}

inline double sqrt_down(double x) {
    double s = std::sqrt(x);
    if (x == 0.0) return 0.0;
    if (x < kResidualSafe) return next_down(s);
    double r = std::fma(s, s, -x); // sign of s*s - x
    return r > 0.0 ? next_down(s) : s;
}

inline double sqrt_up(double x) {
    double s = std::sqrt(x);
    if (x == 0.0) return 0.0;
    if (x < kResidualSafe) return next_up(s);
    double r = std::fma(s, s, -x);
    return r < 0.0 ? next_up(s) : s;
}

// Correctly-rounded-to-<1ulp kernels (implemented without libm), interval.cpp.
double exp_kernel(double x);
double log_kernel(double x);

// Certified bound on the kernels' error, in ulps (actual budget is < 1 ulp;
// 4 is the conservative figure folded into the outward step).
inline constexpr int kKernelUlps = 4;

inline double step_down(double x, int n) {
    for (int i = 0; i < n; ++i) x = next_down(x);
    return x;
}

inline double step_up(double x, int n) {
    for (int i = 0; i < n; ++i) x = next_up(x);
    return x;
}

} // namespace detail

class Interval {
  public:
    Interval() : lo_(0.0), hi_(0.0) {}
    Interval(double v) : lo_(v), hi_(v) { check(); } // NOLINT: implicit point interval
    Interval(double lo, double hi) : lo_(lo), hi_(hi) {
        if (!(lo <= hi)) throw DomainError("interval endpoints out of order");
        check();
    }

    double lower() const { return lo_; }
    double upper() const { return hi_; }

    double mid() const {
        double m = 0.5 * (lo_ + hi_);
        if (std::isfinite(m)) return m;
        return 0.5 * lo_ + 0.5 * hi_;
    }
    double width() const { return hi_ - lo_; }
    double mag() const { return std::max(std::abs(lo_), std::abs(hi_)); }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
    bool strictly_negative() const { return hi_ < 0.0; }
    bool strictly_positive() const { return lo_ > 0.0; }
    bool is_point() const { return lo_ == hi_; }

    static Interval hull(const Interval& a, const Interval& b) {
        return Interval(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
    }

    // Widens both endpoints so the result's width is >= factor * the original
    // width (around the midpoint); used by degradation tests.
    Interval inflated(double factor) const {
        double c = mid();
        double r = std::max(hi_ - c, c - lo_) * factor;
        return Interval(c - r, c + r);
    }

    Interval& operator+=(const Interval& o) { return *this = *this + o; }
    Interval& operator-=(const Interval& o) { return *this = *this - o; }
    Interval& operator*=(const Interval& o) { return *this = *this * o; }
    Interval& operator/=(const Interval& o) { return *this = *this / o; }

    friend Interval operator-(const Interval& a) { return Interval(-a.hi_, -a.lo_); }

    friend Interval operator+(const Interval& a, const Interval& b) {
        return Interval(detail::add_down(a.lo_, b.lo_), detail::add_up(a.hi_, b.hi_));
    }

    friend Interval operator-(const Interval& a, const Interval& b) {
        return Interval(detail::sub_down(a.lo_, b.hi_), detail::sub_up(a.hi_, b.lo_));
    }

    friend Interval operator*(const Interval& a, const Interval& b) {
        double lo = std::min(std::min(detail::mul_down(a.lo_, b.lo_), detail::mul_down(a.lo_, b.hi_)),
                             std::min(detail::mul_down(a.hi_, b.lo_), detail::mul_down(a.hi_, b.hi_)));
        double hi = std::max(std::max(detail::mul_up(a.lo_, b.lo_), detail::mul_up(a.lo_, b.hi_)),
                             std::max(detail::mul_up(a.hi_, b.lo_), detail::mul_up(a.hi_, b.hi_)));
        return Interval(lo, hi);
    }

    friend Interval operator/(const Interval& a, const Interval& b) {
        if (b.contains_zero()) throw DomainError("interval division by an interval containing 0");
        if (a.lo_ == 0.0 && a.hi_ == 0.0) return Interval(0.0, 0.0);
        double lo = std::min(std::min(detail::div_down(a.lo_, b.lo_), detail::div_down(a.lo_, b.hi_)),
                             std::min(detail::div_down(a.hi_, b.lo_), detail::div_down(a.hi_, b.hi_)));
        double hi = std::max(std::max(detail::div_up(a.lo_, b.lo_), detail::div_up(a.lo_, b.hi_)),
                             std::max(detail::div_up(a.hi_, b.lo_), detail::div_up(a.hi_, b.hi_)));
        return Interval(lo, hi);
    }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

  private:
    void check() const {
        if (!std::isfinite(lo_) || !std::isfinite(hi_))
            throw DomainError("interval endpoint not finite");
    }

    double lo_, hi_;
};

inline Interval abs(const Interval& a) {
    if (a.lower() >= 0.0) return a;
    if (a.upper() <= 0.0) return -a;
    return Interval(0.0, std::max(-a.lower(), a.upper()));
}

inline Interval sqrt(const Interval& a) {
    if (a.lower() < 0.0) throw DomainError("interval sqrt of a partially negative interval");
    return Interval(std::max(0.0, detail::sqrt_down(a.lower())), detail::sqrt_up(a.upper()));
}

inline Interval exp(const Interval& a) {
    if (a.upper() > 710.0) throw DomainError("interval exp overflow");
    double lo = std::max(0.0, detail::step_down(detail::exp_kernel(a.lower()), detail::kKernelUlps));
    double hi = detail::step_up(detail::exp_kernel(a.upper()), detail::kKernelUlps);
    return Interval(lo, hi);
}

inline Interval log(const Interval& a) {
    if (!(a.lower() > 0.0)) throw DomainError("interval log requires a strictly positive interval");
    double lo = detail::step_down(detail::log_kernel(a.lower()), detail::kKernelUlps);
    double hi = detail::step_up(detail::log_kernel(a.upper()), detail::kKernelUlps);
    return Interval(lo, hi);
}

namespace detail {

// x^n for x >= 0 with directed rounding, by binary exponentiation.
inline double pow_nonneg(double x, long n, bool up) {
    double acc = 1.0;
    double base = x;
    while (n > 0) {
        if (n & 1) acc = up ? mul_up(acc, base) : mul_down(acc, base);
        n >>= 1;
        if (n) base = up ? mul_up(base, base) : mul_down(base, base);
    }
    return acc;
}

} // namespace detail

inline Interval pow_int(const Interval& a, long n) {
    if (n == 0) return Interval(1.0);
    if (n < 0) return Interval(1.0) / pow_int(a, -n);
    bool odd = (n % 2) != 0;
    double lo = a.lower(), hi = a.upper();
    if (lo >= 0.0) {
        return Interval(detail::pow_nonneg(lo, n, false), detail::pow_nonneg(hi, n, true));
    }
    if (hi <= 0.0) {
        if (odd)
            return Interval(-detail::pow_nonneg(-lo, n, true), -detail::pow_nonneg(-hi, n, false));
        return Interval(detail::pow_nonneg(-hi, n, false), detail::pow_nonneg(-lo, n, true));
    }
    if (odd)
        return Interval(-detail::pow_nonneg(-lo, n, true), detail::pow_nonneg(hi, n, true));
    return Interval(0.0, detail::pow_nonneg(std::max(-lo, hi), n, true));
}

// x^y for x > 0 and real y; uses the integer fast path when y is integral.
inline Interval pow_real(const Interval& a, double y) {
    if (y == std::floor(y) && std::abs(y) <= 1e6) return pow_int(a, static_cast<long>(y));
    return exp(Interval(y) * log(a));
}

inline Interval pow_real(const Interval& a, const Interval& y) {
    if (y.is_point()) return pow_real(a, y.lower());
    return exp(y * log(a));
}

inline Interval max(const Interval& a, const Interval& b) {
    return Interval(std::max(a.lower(), b.lower()), std::max(a.upper(), b.upper()));
}

inline Interval min(const Interval& a, const Interval& b) {
    return Interval(std::min(a.lower(), b.lower()), std::min(a.upper(), b.upper()));
}

inline std::ostream& operator<<(std::ostream& os, const Interval& a) {
    return os << '[' << a.lower() << ", " << a.upper() << ']';
}

} // namespace tricontract
