#pragma once

#include "solvknot/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace solvknot {

// Solution set of an affine equation: point + span(directions).
struct AffineSubspace {
    RatVec point;
    std::vector<RatVec> directions;

    std::size_t dimension() const { return directions.size(); }

    bool contains(const RatVec& x) const {
        RatMatrix D = RatMatrix::from_columns(directions, point.size());
        if (directions.empty()) return x == point;
        return solve(D, x - point).has_value();
    }
    // Same set, independent of the chosen point and spanning vectors.
    bool same_as(const AffineSubspace& o) const {
        if (dimension() != o.dimension() || !contains(o.point)) return false;
        std::vector<RatVec> all = directions;
        all.insert(all.end(), o.directions.begin(), o.directions.end());
        return rank(RatMatrix::from_rows(all, point.size())) == dimension();
    }
};

// The affine map x -> A x + v.
class AffineIso {
public:
    AffineIso() = default;
    AffineIso(RatVec v, RatMatrix A) : v_(std::move(v)), A_(std::move(A)) {
        if (!A_.square() || A_.rows() != v_.size())
            throw std::invalid_argument("affine map: inconsistent dimensions");
    }
    static AffineIso identity(std::size_t n) { return {RatVec(n, Rational(0)), RatMatrix::identity(n)}; }
    static AffineIso translation(const RatVec& v) { return {v, RatMatrix::identity(v.size())}; }
    static AffineIso linear(const RatMatrix& A) { return {RatVec(A.rows(), Rational(0)), A}; }

    std::size_t dim() const { return v_.size(); }
    const RatVec& translation() const { return v_; }
    const RatMatrix& linear() const { return A_; }

    bool is_translation() const { return A_ == RatMatrix::identity(dim()); }
    bool is_identity() const { return is_translation() && is_zero(v_); }

    // (v,A)(w,B) = (v + A w, A B)
    AffineIso operator*(const AffineIso& g) const {
        if (dim() != g.dim()) throw std::invalid_argument("affine compose: dimension mismatch");
        return {v_ + A_ * g.v_, A_ * g.A_};
    }
    AffineIso inverse() const {
        RatMatrix Ai = solvknot::inverse(A_);
        return {-(Ai * v_), Ai};
    }
    AffineIso pow(long long k) const {
        AffineIso base = k < 0 ? inverse() : *this, r = identity(dim());
        unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
        while (e) {
            if (e & 1) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }
    AffineIso conjugate(const AffineIso& g) const { return *this * g * inverse(); }

    RatVec operator()(const RatVec& x) const { return A_ * x + v_; }

    // Same map applied to a vector whose entries come from another ring
    // (polynomials in a parameter, for instance).
    template <class T>
    Vec<T> apply(const Vec<T>& x) const {
        Vec<T> out(dim());
        for (std::size_t i = 0; i < dim(); ++i) {
            T acc = T(v_[i]);
            for (std::size_t j = 0; j < dim(); ++j) acc += T(A_(i, j)) * x[j];
            out[i] = acc;
        }
        return out;
    }

    bool operator==(const AffineIso& o) const { return v_ == o.v_ && A_ == o.A_; }
    bool operator!=(const AffineIso& o) const { return !(*this == o); }
    bool operator<(const AffineIso& o) const {
        if (A_ != o.A_) return A_ < o.A_;
        return v_ < o.v_;
    }

    std::string str() const { return "(" + to_string(v_) + ", " + to_string(A_) + ")"; }

private:
    RatVec v_;
    RatMatrix A_;
};

inline AffineIso affine_compose(const AffineIso& f, const AffineIso& g) { return f * g; }
inline AffineIso affine_inverse(const AffineIso& f) { return f.inverse(); }

// Points with f(x) = x, i.e. (I - A) x = v. Nothing when there are none.
inline std::optional<AffineSubspace> fixed_set(const AffineIso& f) {
    RatMatrix M = RatMatrix::identity(f.dim()) - f.linear();
    auto p = solve(M, f.translation());
    if (!p) return std::nullopt;
    return AffineSubspace{*p, kernel(M)};
}

// Order of an affine map whose linear part has finite order dividing a
// bounded period. Returns nothing for infinite order.
inline std::optional<long long> affine_order(const AffineIso& f, long long bound = 48) {
    AffineIso p = f;
    for (long long k = 1; k <= bound; ++k) {
        if (p.is_translation()) {
            if (p.is_identity()) return k;
            return std::nullopt;  // f^k is a nonzero translation: powers grow linearly
        }
        p = p * f;
    }
    throw std::domain_error("linear part does not have order within the bound");
}

}  // namespace solvknot
