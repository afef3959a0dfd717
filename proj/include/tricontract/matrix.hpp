#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "tricontract/interval.hpp"

namespace tricontract {

template <class T>
class Mat {
  public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, T init = T(0)) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, init) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    std::vector<T> row(int i) const {
        std::vector<T> r(cols_);
        for (int j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> c(rows_);
        for (int i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

  private:
    int rows_, cols_;
    std::vector<T> a_;
};

using MatD = Mat<double>;
using MatI = Mat<Interval>;

inline MatI to_interval(const MatD& m) {
    MatI out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = Interval(m(i, j));
    return out;
}

inline MatD abs_entries(const MatD& m) {
    MatD out(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(i, j) = std::abs(m(i, j));
    return out;
}

// --- dense LU with partial pivoting (binary64 only) ---

struct LuFactors {
    MatD lu;
    std::vector<int> perm;
};

inline LuFactors lu_decompose(MatD a) {
    int n = a.rows();
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int k = 0; k < n; ++k) {
        int p = k;
        double best = std::abs(a(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(a(i, k));
            if (v > best) {
                best = v;
                p = i;
            }
        }
        if (!(best > 0.0) || !std::isfinite(best))
            throw SingularError("matrix is singular to working precision");
        if (p != k) {
            for (int j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
            std::swap(perm[k], perm[p]);
        }
        for (int i = k + 1; i < n; ++i) {
            double f = a(i, k) / a(k, k);
            a(i, k) = f;
            for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return {std::move(a), std::move(perm)};
}

inline std::vector<double> lu_solve(const LuFactors& f, const std::vector<double>& b) {
    int n = f.lu.rows();
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (int i = 1; i < n; ++i) {
        double s = x[i];
        for (int j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
        double s = x[i];
        for (int j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
        x[i] = s / f.lu(i, i);
    }
    return x;
}

inline std::vector<double> lu_solve(const MatD& a, const std::vector<double>& b) {
    return lu_solve(lu_decompose(a), b);
}

inline MatD invert(const MatD& a) {
    int n = a.rows();
    LuFactors f = lu_decompose(a);
    MatD inv(n, n);
    std::vector<double> e(n, 0.0);
    for (int j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = lu_solve(f, e);
        for (int i = 0; i < n; ++i) inv(i, j) = col[i];
        e[j] = 0.0;
    }
    return inv;
}

// --- products used by the rigorous path ---

inline MatI mul(const MatD& a, const MatI& b) {
    MatI out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Interval s(0.0);
            for (int k = 0; k < a.cols(); ++k) s += Interval(a(i, k)) * b(k, j);
            out(i, j) = s;
        }
    return out;
}

inline std::vector<Interval> mul(const MatD& a, const std::vector<Interval>& v) {
    std::vector<Interval> out(a.rows(), Interval(0.0));
    for (int i = 0; i < a.rows(); ++i) {
        Interval s(0.0);
        for (int k = 0; k < a.cols(); ++k) s += Interval(a(i, k)) * v[k];
        out[i] = s;
    }
    return out;
}

inline std::vector<double> mul(const MatD& a, const std::vector<double>& v) {
    std::vector<double> out(a.rows(), 0.0);
    for (int i = 0; i < a.rows(); ++i) {
        double s = 0.0;
        for (int k = 0; k < a.cols(); ++k) s += a(i, k) * v[k];
        out[i] = s;
    }
    return out;
}

inline Interval dot(const std::vector<double>& a, const std::vector<Interval>& b) {
    Interval s(0.0);
    for (std::size_t k = 0; k < a.size(); ++k) s += Interval(a[k]) * b[k];
    return s;
}

inline Interval dot(const std::vector<Interval>& a, const std::vector<Interval>& b) {
    Interval s(0.0);
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

} // namespace tricontract
