#pragma once

#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <type_traits>
#include <vector>

#include "tricontract/interval.hpp"

namespace tricontract {

// A finitely supported element of the weighted sup-norm space: coefficients
// x_0..x_{n-1} (entries beyond the stored range are exactly zero) together
// with the algebraic decay rate s of the norm.  The same implementation
// serves the fast binary64 path and the rigorous Interval path.
template <class T>
struct Seq {
    std::vector<T> c;
    double s = 2.0;

    Seq() = default;
    Seq(std::vector<T> coeffs, double rate) : c(std::move(coeffs)), s(rate) {}

    std::size_t size() const { return c.size(); }
    T at(long k) const { return k >= 0 && k < static_cast<long>(c.size()) ? c[k] : T(0); }
    // symmetric extension: index -k holds the same value as index k
    T sym(long k) const { return at(std::labs(k)); }
};

inline Seq<Interval> to_interval(const Seq<double>& x) {
    std::vector<Interval> c(x.c.begin(), x.c.end());
    return {std::move(c), x.s};
}

// w_k^s = 1 for k = 0, k^s otherwise
inline double weight(long k, double s) {
    return k == 0 ? 1.0 : std::pow(static_cast<double>(k), s);
}

inline Interval weight_iv(long k, double s) {
    if (k == 0) return Interval(1.0);
    return pow_real(Interval(static_cast<double>(k)), s);
}

template <class T>
T norm_s(const Seq<T>& x) {
    using std::abs;
    using std::max;
    T best(0);
    for (std::size_t k = 0; k < x.c.size(); ++k) {
        T w = [&] {
            if constexpr (std::is_same_v<T, Interval>)
                return weight_iv(static_cast<long>(k), x.s);
            else
                return weight(static_cast<long>(k), x.s);
        }();
        best = max(best, abs(x.c[k]) * w);
    }
    return best;
}

// Discrete convolution under the symmetric extension, restricted to the
// nonnegative indices; supports 0..len(x)+len(y)-2.
template <class T>
Seq<T> convolve(const Seq<T>& x, const Seq<T>& y) {
    if (x.c.empty() || y.c.empty()) return {{}, x.s};
    long nx = static_cast<long>(x.c.size());
    long ny = static_cast<long>(y.c.size());
    Seq<T> out{std::vector<T>(nx + ny - 1, T(0)), x.s};
    for (long i = -(nx - 1); i <= nx - 1; ++i) {
        for (long j = -(ny - 1); j <= ny - 1; ++j) {
            long k = i + j;
            if (k < 0) continue;
            out.c[k] += x.sym(i) * y.sym(j);
        }
    }
    return out;
}

// Upper enclosures of the convolution constants alpha_k^s(n): for any
// x, y in the space, |(x*y)_k| <= alpha_k^s(n) |x| |y| / w_k^s.  Proved for
// s >= 2 and n >= 6; constant in k beyond n.  The L-dependent part
// 2 sum_{l<=L} l^-s + 2/((s-1) L^(s-1)) and all per-index values are
// precomputed at construction.
class AlphaBound {
  public:
    AlphaBound(double s, long n, long L) : s_(s), n_(n), L_(L) {
        if (!(s >= 2.0)) throw UnsupportedRegime("convolution estimate requires decay rate s >= 2");
        if (n < 6) throw UnsupportedRegime("convolution estimate requires n >= 6");
        if (L < 1) throw UnsupportedRegime("convolution estimate requires L >= 1");

        Interval sum(0.0);
        for (long l = 1; l <= L; ++l) sum += Interval(1.0) / pow_real(Interval(static_cast<double>(l)), s);
        Interval tail = Interval(2.0) / (Interval(s - 1.0) * pow_real(Interval(static_cast<double>(L)), s - 1.0));
        base_ = Interval(2.0) * sum + tail;

        values_.reserve(n + 1);
        values_.push_back(Interval(1.0) + base_); // k = 0
        for (long k = 1; k < n; ++k) {
            Interval mid(0.0);
            Interval ks = weight_iv(k, s);
            for (long l = 1; l <= k - 1; ++l)
                mid += ks / (weight_iv(l, s) * weight_iv(k - l, s));
            values_.push_back(Interval(2.0) + base_ + mid);
        }

        // k >= n: 2 + base + 2(n/(n-1))^s + (4 ln(n-2)/n + (pi^2-6)/3)(2/n + 1/2)^s
        const Interval pi_sq(0x1.3bd3cc9be45dep+3, 0x1.3bd3cc9be45dfp+3);
        Interval nn(static_cast<double>(n));
        Interval ratio = pow_real(nn / Interval(static_cast<double>(n - 1)), s);
        Interval lg = Interval(4.0) * log(Interval(static_cast<double>(n - 2))) / nn;
        Interval fac = lg + (pi_sq - Interval(6.0)) / Interval(3.0);
        Interval arg = pow_real(Interval(2.0) / nn + Interval(0.5), s);
        values_.push_back(Interval(2.0) + base_ + Interval(2.0) * ratio + fac * arg);
    }

    Interval operator()(long k) const {
        if (k < 0) throw DomainError("alpha index must be nonnegative");
        return values_[std::min(k, n_)];
    }

    double s() const { return s_; }
    long n() const { return n_; }
    long L() const { return L_; }

  private:
    double s_;
    long n_, L_;
    Interval base_;
    std::vector<Interval> values_; // k = 0..n; the n entry covers all k >= n
};

inline Interval alpha_bound(long k, double s, long n, long L) {
    return AlphaBound(s, n, L)(k);
}

} // namespace tricontract
