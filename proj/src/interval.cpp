#include "tricontract/interval.hpp"

#include <array>
#include <cmath>

// Self-contained exp/log kernels.  The platform libm is not trusted for the
// rigorous path; both kernels are evaluated in double-double arithmetic so
// that the final rounding to binary64 dominates the error.  Budget per
// kernel: argument reduction < 2^-96, series truncation < 2^-80 relative,
// double-double rounding < 2^-95, final rounding 0.5 ulp -- total < 1 ulp,
// certified against the 4-ulp outward step applied by the callers.

namespace tricontract::detail {

namespace {

struct DD {
    double hi, lo;
};

inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) { // assumes |a| >= |b|
    double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD dd_add(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    return quick_two_sum(s.hi, s.lo + a.lo + b.lo);
}

inline DD dd_add_d(DD a, double b) {
    DD s = two_sum(a.hi, b);
    return quick_two_sum(s.hi, s.lo + a.lo);
}

inline DD dd_mul(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    return quick_two_sum(p.hi, p.lo + a.hi * b.lo + a.lo * b.hi);
}

inline DD dd_mul_d(DD a, double b) {
    DD p = two_prod(a.hi, b);
    return quick_two_sum(p.hi, p.lo + a.lo * b);
}

inline DD dd_div_d(DD a, double b) {
    double q1 = a.hi / b;
    DD r = dd_add(a, dd_mul_d({-q1, 0.0}, b));
    double q2 = (r.hi + r.lo) / b;
    return quick_two_sum(q1, q2);
}

constexpr double kLog2e = 0x1.71547652b82fep+0;
constexpr DD kLn2 = {0x1.62e42fefa39efp-1, 0x1.abc9e3b39803fp-56};

} // namespace

double exp_kernel(double x) {
    if (x < -746.0) return 0.0;
    double n = std::nearbyint(x * kLog2e);
    // r = x - n*ln2, |r| <= 0.3467
    DD r = dd_add_d(dd_mul_d(kLn2, -n), x);

    // 1/i! for i = 0..17; truncation < 0.347^18/18! < 2^-80
    static const std::array<DD, 18> coeff = [] {
        std::array<DD, 18> c{};
        c[0] = {1.0, 0.0};
        for (int i = 1; i < 18; ++i) c[i] = dd_div_d(c[i - 1], static_cast<double>(i));
        return c;
    }();

    DD p = coeff[17];
    for (int i = 16; i >= 0; --i) p = dd_add(dd_mul(p, r), coeff[i]);

    int e = static_cast<int>(n);
    return std::ldexp(p.hi, e) + std::ldexp(p.lo, e);
}

double log_kernel(double x) {
    int e = 0;
    double f = std::frexp(x, &e); // f in [0.5, 1)
    if (f < 0.70710678118654757) {
        f *= 2.0;
        e -= 1;
    }
    // f in [sqrt(2)/2, sqrt(2)); t = (f-1)/(f+1), |t| <= 0.1716
    DD num = {f - 1.0, 0.0}; // exact by Sterbenz
    DD den = two_sum(f, 1.0);
    double q1 = num.hi / den.hi;
    DD rem = dd_add(num, dd_mul_d(den, -q1));
    double q2 = (rem.hi + rem.lo) / den.hi;
    DD t = quick_two_sum(q1, q2);

    // log(f) = 2 * t * sum_{j>=0} t^(2j) / (2j+1); truncation < 2^-73 relative
    static const std::array<DD, 14> coeff = [] {
        std::array<DD, 14> c{};
        for (int j = 0; j < 14; ++j) c[j] = dd_div_d({1.0, 0.0}, static_cast<double>(2 * j + 1));
        return c;
    }();

    DD t2 = dd_mul(t, t);
    DD p = coeff[13];
    for (int j = 12; j >= 0; --j) p = dd_add(dd_mul(p, t2), coeff[j]);
    DD logf = dd_mul_d(dd_mul(t, p), 2.0);

    DD res = dd_add(dd_mul_d(kLn2, static_cast<double>(e)), logf);
    return res.hi + res.lo;
}

} // namespace tricontract::detail
