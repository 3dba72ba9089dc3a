#pragma once

// Integer lattices in Hermite normal form, Smith normal form with transforms,
// and integer solutions of linear systems.

#include "solvknot/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace solvknot {

namespace detail {

inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

template <class M>
void swap_rows(M& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}
template <class M>
void swap_cols(M& m, std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}
// row i += k * row j
inline void add_row(IntMatrix& m, std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) += k * m(j, c);
}
inline void add_col(IntMatrix& m, std::size_t i, std::size_t j, const Integer& k) {
    if (k == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) += k * m(r, j);
}
inline void negate_row(IntMatrix& m, std::size_t i) {
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = -m(i, c);
}
inline void negate_col(IntMatrix& m, std::size_t i) {
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, i) = -m(r, i);
}

}  // namespace detail

struct HermiteResult {
    IntMatrix H;   // echelon form, nonzero rows first
    IntMatrix U;   // unimodular, U * M = H
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

// Row-style Hermite normal form: pivots strictly increase to the right, are
// positive, and the entries above each pivot are reduced into [0, pivot).
inline HermiteResult hermite(const IntMatrix& M) {
    using namespace detail;
    HermiteResult res{M, IntMatrix::identity(M.rows()), 0, {}};
    IntMatrix& H = res.H;
    IntMatrix& U = res.U;
    std::size_t r = 0;
    for (std::size_t c = 0; c < H.cols() && r < H.rows(); ++c) {
        // Euclid down the column until a single nonzero entry remains at row r.
        for (;;) {
            std::size_t best = H.rows();
            for (std::size_t i = r; i < H.rows(); ++i)
                if (H(i, c) != 0 && (best == H.rows() || iabs(H(i, c)) < iabs(H(best, c)))) best = i;
            if (best == H.rows()) break;
            swap_rows(H, r, best);
            swap_rows(U, r, best);
            bool done = true;
            for (std::size_t i = r + 1; i < H.rows(); ++i) {
                if (H(i, c) == 0) continue;
                Integer q = floor_div(H(i, c), H(r, c));
                add_row(H, i, r, -q);
                add_row(U, i, r, -q);
                if (H(i, c) != 0) done = false;
            }
            if (done) break;
        }
        if (H(r, c) == 0) continue;
        if (H(r, c) < 0) {
            negate_row(H, r);
            negate_row(U, r);
        }
        for (std::size_t i = 0; i < r; ++i) {
            Integer q = floor_div(H(i, c), H(r, c));
            add_row(H, i, r, -q);
            add_row(U, i, r, -q);
        }
        res.pivots.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

struct SmithDecomposition {
    std::vector<Integer> invariantFactors;  // d_1 | d_2 | ... (zeros last)
    IntMatrix left;                         // unimodular
    IntMatrix right;                        // unimodular
    IntMatrix diagonal;                     // left * M * right
    std::size_t rank = 0;
};

inline SmithDecomposition smith_normal_form(const IntMatrix& M) {
    using namespace detail;
    const std::size_t m = M.rows(), n = M.cols();
    IntMatrix D = M, L = IntMatrix::identity(m), R = IntMatrix::identity(n);
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Pick the smallest nonzero entry of the trailing block as pivot.
        bool found = false;
        std::size_t pi = t, pj = t;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (D(i, j) != 0 && (!found || iabs(D(i, j)) < iabs(D(pi, pj)))) {
                    found = true;
                    pi = i;
                    pj = j;
                }
        if (!found) break;
        swap_rows(D, t, pi);
        swap_rows(L, t, pi);
        swap_cols(D, t, pj);
        swap_cols(R, t, pj);
        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (D(i, t) == 0) continue;
                Integer q = floor_div(D(i, t), D(t, t));
                add_row(D, i, t, -q);
                add_row(L, i, t, -q);
                if (D(i, t) != 0) {
                    clean = false;
                    swap_rows(D, t, i);
                    swap_rows(L, t, i);
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (D(t, j) == 0) continue;
                Integer q = floor_div(D(t, j), D(t, t));
                add_col(D, j, t, -q);
                add_col(R, j, t, -q);
                if (D(t, j) != 0) {
                    clean = false;
                    swap_cols(D, t, j);
                    swap_cols(R, t, j);
                }
            }
            if (!clean) continue;
            // Enforce divisibility of the remaining block by the pivot.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        add_row(D, t, i, 1);
                        add_row(L, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(L, t);
        }
    }
    SmithDecomposition s;
    s.rank = t;
    for (std::size_t i = 0; i < std::min(m, n); ++i) s.invariantFactors.push_back(D(i, i));
    s.left = L;
    s.right = R;
    s.diagonal = D;
    return s;
}

struct IntegerSolution {
    IntVec particular;
    std::vector<IntVec> kernel;  // basis of the integer kernel of the matrix
};

// All integer x with M x = b.
inline std::optional<IntegerSolution> solve_integer(const IntMatrix& M, const IntVec& b) {
    SmithDecomposition s = smith_normal_form(M);
    IntVec ub = s.left * b;
    IntVec y(M.cols(), Integer(0));
    for (std::size_t i = 0; i < M.rows(); ++i) {
        if (i < s.rank) {
            if (ub[i] % s.diagonal(i, i) != 0) return std::nullopt;
            y[i] = ub[i] / s.diagonal(i, i);
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    IntegerSolution sol{s.right * y, {}};
    for (std::size_t j = s.rank; j < M.cols(); ++j) sol.kernel.push_back(s.right.col(j));
    return sol;
}

// Rational right-hand sides and coefficients: solutions x in Z^n of M x = b.
inline std::optional<IntegerSolution> solve_integer(const RatMatrix& M, const RatVec& b) {
    Integer d = common_denominator(b);
    for (const auto& x : M.entries()) d = lcm(d, den(x));
    IntMatrix Mi = *to_integral(M.scaled(Rational(d)));
    IntVec bi = *to_integral(scale(Rational(d), b));
    return solve_integer(Mi, bi);
}

// A finite-rank sublattice of Z^k, stored as its Hermite basis (rows).
class IntegerLattice {
public:
    explicit IntegerLattice(std::size_t ambient = 0) : k_(ambient) {}
    IntegerLattice(std::size_t ambient, const std::vector<IntVec>& generators) : k_(ambient) {
        if (generators.empty()) return;
        IntMatrix M = IntMatrix::from_rows(generators, k_);
        HermiteResult h = hermite(M);
        for (std::size_t i = 0; i < h.rank; ++i) basis_.push_back(h.H.row(i));
        pivots_ = h.pivots;
    }
    static IntegerLattice standard(std::size_t k) {
        std::vector<IntVec> g;
        for (std::size_t i = 0; i < k; ++i) {
            IntVec e(k, Integer(0));
            e[i] = 1;
            g.push_back(e);
        }
        return IntegerLattice(k, g);
    }

    std::size_t ambientRank() const { return k_; }
    std::size_t rank() const { return basis_.size(); }
    const std::vector<IntVec>& basis() const { return basis_; }

    // Canonical representative of v + L: pivot coordinates reduced into [0, pivot).
    RatVec reduce(const RatVec& v) const {
        RatVec w = v;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            std::size_t p = pivots_[i];
            Integer q = floor(w[p] / Rational(basis_[i][p]));
            for (std::size_t c = 0; c < k_; ++c) w[c] -= Rational(q * basis_[i][c]);
        }
        return w;
    }
    bool contains(const RatVec& v) const {
        if (v.size() != k_) throw std::invalid_argument("lattice membership: rank mismatch");
        return is_zero(reduce(v));
    }
    bool contains(const IntVec& v) const { return contains(to_rational(v)); }

    IntegerLattice sum(const IntegerLattice& o) const {
        check(o);
        std::vector<IntVec> g = basis_;
        g.insert(g.end(), o.basis_.begin(), o.basis_.end());
        return IntegerLattice(k_, g);
    }

    IntegerLattice intersection(const IntegerLattice& o) const {
        check(o);
        if (basis_.empty() || o.basis_.empty()) return IntegerLattice(k_);
        std::vector<IntVec> g = basis_;
        g.insert(g.end(), o.basis_.begin(), o.basis_.end());
        HermiteResult h = hermite(IntMatrix::from_rows(g, k_));
        std::vector<IntVec> out;
        for (std::size_t i = h.rank; i < g.size(); ++i) {
            IntVec w(k_, Integer(0));
            for (std::size_t j = 0; j < basis_.size(); ++j)
                for (std::size_t c = 0; c < k_; ++c) w[c] += h.U(i, j) * basis_[j][c];
            out.push_back(w);
        }
        return IntegerLattice(k_, out);
    }

    bool subset_of(const IntegerLattice& o) const {
        check(o);
        for (const auto& b : basis_)
            if (!o.contains(b)) return false;
        return true;
    }

    // [super : *this]; requires *this inside super with equal rank.
    Integer index_in(const IntegerLattice& super) const {
        check(super);
        if (!subset_of(super)) throw std::domain_error("index query: not a sublattice");
        if (rank() != super.rank()) throw std::domain_error("index query: infinite index");
        if (rank() == 0) return 1;
        // Coordinates of our basis in the super basis, then |det|.
        RatMatrix S = to_rational(IntMatrix::from_rows(super.basis_, k_)).transpose();
        RatMatrix C(rank(), rank());
        for (std::size_t i = 0; i < rank(); ++i) {
            auto x = solve(S, to_rational(basis_[i]));
            for (std::size_t j = 0; j < rank(); ++j) C(j, i) = (*x)[j];
        }
        Rational d = det(C);
        return to_integer(d < 0 ? Rational(-d) : d);
    }

    bool operator==(const IntegerLattice& o) const { return k_ == o.k_ && basis_ == o.basis_; }
    bool operator!=(const IntegerLattice& o) const { return !(*this == o); }
    bool operator<(const IntegerLattice& o) const {
        if (k_ != o.k_) return k_ < o.k_;
        return basis_ < o.basis_;
    }

private:
    void check(const IntegerLattice& o) const {
        if (k_ != o.k_) throw std::invalid_argument("lattice ambient rank mismatch");
    }
    std::size_t k_;
    std::vector<IntVec> basis_;
    std::vector<std::size_t> pivots_;
};

// A lattice of rational vectors, held as (1/scale) * IntegerLattice.
class RatLattice {
public:
    explicit RatLattice(std::size_t ambient = 0) : scale_(1), L_(ambient) {}
    RatLattice(std::size_t ambient, const std::vector<RatVec>& gens) : scale_(1), L_(ambient) {
        for (const auto& g : gens) scale_ = lcm(scale_, common_denominator(g));
        std::vector<IntVec> ig;
        for (const auto& g : gens) ig.push_back(*to_integral(scale(Rational(scale_), g)));
        L_ = IntegerLattice(ambient, ig);
        normalize();
    }

    std::size_t ambientRank() const { return L_.ambientRank(); }
    std::size_t rank() const { return L_.rank(); }
    std::vector<RatVec> basis() const {
        std::vector<RatVec> b;
        for (const auto& v : L_.basis()) b.push_back(scale(Rational(1, scale_), to_rational(v)));
        return b;
    }

    RatVec reduce(const RatVec& v) const {
        return scale(Rational(1, scale_), L_.reduce(scale(Rational(scale_), v)));
    }
    bool contains(const RatVec& v) const { return is_zero(reduce(v)); }

    RatLattice sum(const RatLattice& o) const {
        auto g = basis();
        auto h = o.basis();
        g.insert(g.end(), h.begin(), h.end());
        return RatLattice(ambientRank(), g);
    }
    RatLattice intersection(const RatLattice& o) const {
        Integer s = lcm(scale_, o.scale_);
        IntegerLattice a = rescaled(s), b = o.rescaled(s);
        RatLattice r(ambientRank());
        r.scale_ = s;
        r.L_ = a.intersection(b);
        r.normalize();
        return r;
    }
    // Image under a linear map.
    RatLattice image(const RatMatrix& A) const {
        std::vector<RatVec> g;
        for (const auto& b : basis()) g.push_back(A * b);
        return RatLattice(A.rows(), g);
    }
    bool operator==(const RatLattice& o) const { return scale_ == o.scale_ && L_ == o.L_; }
    bool operator!=(const RatLattice& o) const { return !(*this == o); }

    const IntegerLattice& integer_part() const { return L_; }
    const Integer& scale_factor() const { return scale_; }

private:
    IntegerLattice rescaled(const Integer& s) const {
        std::vector<IntVec> g;
        for (const auto& v : L_.basis()) {
            IntVec w = v;
            for (auto& x : w) x *= s / scale_;
            g.push_back(w);
        }
        return IntegerLattice(ambientRank(), g);
    }
    // Smallest scale that keeps the basis integral, so equality is structural.
    void normalize() {
        Integer g = 0;
        for (const auto& v : L_.basis())
            for (const auto& x : v) g = gcd(g, x);
        Integer c = gcd(g, scale_);
        if (c > 1) {
            std::vector<IntVec> b;
            for (const auto& v : L_.basis()) {
                IntVec w = v;
                for (auto& x : w) x /= c;
                b.push_back(w);
            }
            scale_ /= c;
            L_ = IntegerLattice(L_.ambientRank(), b);
        }
        if (L_.rank() == 0) scale_ = 1;
    }
    Integer scale_;
    IntegerLattice L_;
};

}  // namespace solvknot
