#pragma once

#include "solvknot/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace solvknot {

template <class T>
using Vec = std::vector<T>;

using RatVec = Vec<Rational>;
using IntVec = Vec<Integer>;

// Dense row-major matrix over an exact ring T.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols, T(0)) {}
    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        r_ = rows.size();
        c_ = r_ ? rows.begin()->size() : 0;
        a_.reserve(r_ * c_);
        for (const auto& row : rows) {
            if (row.size() != c_) throw std::invalid_argument("ragged matrix literal");
            for (const auto& v : row) a_.push_back(v);
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }
    static Matrix diag(const Vec<T>& d) {
        Matrix m(d.size(), d.size());
        for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }
    static Matrix from_rows(const std::vector<Vec<T>>& rows, std::size_t cols) {
        Matrix m(rows.size(), cols);
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i].at(j);
        return m;
    }
    static Matrix from_columns(const std::vector<Vec<T>>& cols, std::size_t rows) {
        Matrix m(rows, cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j].at(i);
        return m;
    }

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    bool square() const { return r_ == c_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec<T> row(std::size_t i) const { return Vec<T>(a_.begin() + i * c_, a_.begin() + (i + 1) * c_); }
    Vec<T> col(std::size_t j) const {
        Vec<T> v(r_);
        for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix transpose() const {
        Matrix t(c_, r_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix operator*(const Matrix& o) const {
        if (c_ != o.r_) throw std::invalid_argument("matrix product dimension mismatch");
        Matrix p(r_, o.c_);
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const T& x = (*this)(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < o.c_; ++j) p(i, j) += x * o(k, j);
            }
        return p;
    }
    Vec<T> operator*(const Vec<T>& v) const {
        if (c_ != v.size()) throw std::invalid_argument("matrix-vector dimension mismatch");
        Vec<T> out(r_, T(0));
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t j = 0; j < c_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }
    Matrix operator+(const Matrix& o) const {
        check_same(o);
        Matrix s = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] += o.a_[k];
        return s;
    }
    Matrix operator-(const Matrix& o) const {
        check_same(o);
        Matrix s = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) s.a_[k] -= o.a_[k];
        return s;
    }
    Matrix operator-() const {
        Matrix s = *this;
        for (auto& x : s.a_) x = -x;
        return s;
    }
    Matrix scaled(const T& k) const {
        Matrix s = *this;
        for (auto& x : s.a_) x *= k;
        return s;
    }

    bool operator==(const Matrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool operator<(const Matrix& o) const {
        if (r_ != o.r_) return r_ < o.r_;
        if (c_ != o.c_) return c_ < o.c_;
        return a_ < o.a_;
    }

    const Vec<T>& entries() const { return a_; }

private:
    void check_same(const Matrix& o) const {
        if (r_ != o.r_ || c_ != o.c_) throw std::invalid_argument("matrix dimension mismatch");
    }
    std::size_t r_ = 0, c_ = 0;
    Vec<T> a_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

template <class T>
Vec<T> operator+(const Vec<T>& a, const Vec<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec<T> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return s;
}
template <class T>
Vec<T> operator-(const Vec<T>& a, const Vec<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    Vec<T> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] - b[i];
    return s;
}
template <class T>
Vec<T> operator-(const Vec<T>& a) {
    Vec<T> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
    return s;
}
template <class T, class S>
Vec<T> scale(const S& k, const Vec<T>& a) {
    Vec<T> s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = T(k) * a[i];
    return s;
}
template <class T>
T dot(const Vec<T>& a, const Vec<T>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector dimension mismatch");
    T s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}
template <class T>
bool is_zero(const Vec<T>& a) {
    return std::all_of(a.begin(), a.end(), [](const T& x) { return x == 0; });
}
inline RatVec unit(std::size_t n, std::size_t i, const Rational& k = 1) {
    RatVec v(n, Rational(0));
    v[i] = k;
    return v;
}

inline RatVec to_rational(const IntVec& v) { return RatVec(v.begin(), v.end()); }
inline RatMatrix to_rational(const IntMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    return r;
}
inline std::optional<IntVec> to_integral(const RatVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!is_integral(v[i])) return std::nullopt;
        out[i] = num(v[i]);
    }
    return out;
}
inline std::optional<IntMatrix> to_integral(const RatMatrix& m) {
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!is_integral(m(i, j))) return std::nullopt;
            out(i, j) = num(m(i, j));
        }
    return out;
}
inline bool is_integral(const RatMatrix& m) { return to_integral(m).has_value(); }

// Least common multiple of the denominators of v.
inline Integer common_denominator(const RatVec& v) {
    Integer d = 1;
    for (const auto& x : v) d = lcm(d, den(x));
    return d;
}

// ---- field operations over the rationals -------------------------------------

// Reduced row echelon form; returns pivot columns.
inline std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline std::size_t rank(RatMatrix m) { return rref(m).size(); }

inline Rational det(const RatMatrix& m0) {
    if (!m0.square()) throw std::invalid_argument("determinant of non-square matrix");
    RatMatrix m = m0;
    Rational d = 1;
    const std::size_t n = m.rows();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
            d = -d;
        }
        d *= m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(c, c);
            for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
        }
    }
    return d;
}
inline Integer det(const IntMatrix& m) { return to_integer(det(to_rational(m))); }

inline RatMatrix inverse(const RatMatrix& m) {
    if (!m.square()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = 1;
    }
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("singular matrix");
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Basis of the right kernel {x : m x = 0}.
inline std::vector<RatVec> kernel(const RatMatrix& m0) {
    RatMatrix m = m0;
    auto piv = rref(m);
    std::vector<bool> is_piv(m.cols(), false);
    for (auto p : piv) is_piv[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_piv[f]) continue;
        RatVec v(m.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m(i, f);
        basis.push_back(v);
    }
    return basis;
}

// One solution of m x = b, or nothing when the system is inconsistent.
inline std::optional<RatVec> solve(const RatMatrix& m, const RatVec& b) {
    RatMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b.at(i);
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
    RatVec x(m.cols(), Rational(0));
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, m.cols());
    return x;
}

template <class T>
Matrix<T> power(const Matrix<T>& m, long long k) {
    if (k < 0) throw std::invalid_argument("negative matrix power");
    Matrix<T> r = Matrix<T>::identity(m.rows()), b = m;
    while (k) {
        if (k & 1) r = r * b;
        b = b * b;
        k >>= 1;
    }
    return r;
}

// ---- text forms ------------------------------------------------------------

inline std::string to_string(const RatVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}
inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
    return s + ")";
}
template <class T>
std::string to_string(const Matrix<T>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        s += i ? ";" : "";
        for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? "," : "") + to_string(m(i, j));
    }
    return s + "]";
}

}  // namespace solvknot
