#pragma once

// Finitely generated abelian groups presented by relation matrices, reduced
// to invariant-factor form, together with induced endomorphisms.

#include "solvknot/lattice.hpp"

#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace solvknot {

// Z^n / (row span of the relation matrix), in invariant-factor coordinates.
struct AbelianQuotient {
    std::size_t generators = 0;        // n
    std::vector<Integer> factors;      // nontrivial invariant factors; 0 means a free Z
    IntMatrix proj;                    // k x n: coordinates of a generator-space vector
    IntMatrix lift;                    // n x k: a preimage of each coordinate basis vector

    static AbelianQuotient from_relations(const IntMatrix& R) {
        SmithDecomposition s = smith_normal_form(R);
        const std::size_t n = R.cols();
        // Row vector x maps to x V; keep the coordinates whose factor is not 1.
        IntMatrix V = s.right;
        IntMatrix Vinv = *to_integral(inverse(to_rational(V)));
        std::vector<std::size_t> keep;
        std::vector<Integer> f;
        for (std::size_t i = 0; i < n; ++i) {
            Integer d = i < s.rank ? s.diagonal(i, i) : Integer(0);
            if (d == 1) continue;
            keep.push_back(i);
            f.push_back(d);
        }
        AbelianQuotient q;
        q.generators = n;
        q.factors = f;
        q.proj = IntMatrix(keep.size(), n);
        q.lift = IntMatrix(n, keep.size());
        for (std::size_t a = 0; a < keep.size(); ++a)
            for (std::size_t j = 0; j < n; ++j) {
                q.proj(a, j) = V(j, keep[a]);
                q.lift(j, a) = Vinv(keep[a], j);
            }
        return q;
    }

    bool finite() const {
        for (const auto& d : factors)
            if (d == 0) return false;
        return true;
    }
    Integer order() const {
        Integer o = 1;
        for (const auto& d : factors) o *= d;
        return o;
    }
    IntVec reduce(IntVec c) const {
        for (std::size_t i = 0; i < c.size(); ++i)
            if (factors[i] != 0) c[i] = mod(c[i], factors[i]);
        return c;
    }
    // Image in invariant-factor coordinates of an exponent vector over the generators.
    IntVec image(const IntVec& x) const { return reduce(proj * x); }

    // Matrix of the endomorphism induced by a map on generators, given as the
    // abelianized image of each generator (columns of gen_images).
    IntMatrix induced(const std::vector<IntVec>& gen_images) const {
        const std::size_t k = factors.size();
        IntMatrix M(k, k);
        for (std::size_t j = 0; j < k; ++j) {
            IntVec x(generators, Integer(0));
            for (std::size_t l = 0; l < generators; ++l)
                for (std::size_t c = 0; c < generators; ++c) x[c] += lift(l, j) * gen_images[l][c];
            IntVec col = image(x);
            for (std::size_t i = 0; i < k; ++i) M(i, j) = col[i];
        }
        return M;
    }
};

// A finite abelian group Z/d_1 + ... + Z/d_k with an endomorphism t.
class FinAbGroupWithAction {
public:
    FinAbGroupWithAction() = default;
    FinAbGroupWithAction(std::vector<Integer> factors, IntMatrix action)
        : d_(std::move(factors)), t_(std::move(action)) {
        for (const auto& d : d_)
            if (d <= 0) throw std::invalid_argument("finite abelian group needs positive factors");
        for (std::size_t i = 0; i < d_.size(); ++i)
            for (std::size_t j = 0; j < d_.size(); ++j) t_(i, j) = mod(t_(i, j), d_[i]);
    }

    const std::vector<Integer>& invariantFactors() const { return d_; }
    const IntMatrix& action() const { return t_; }
    std::size_t rank() const { return d_.size(); }

    Integer order() const {
        Integer o = 1;
        for (const auto& d : d_) o *= d;
        return o;
    }

    IntVec reduce(IntVec v) const {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod(v[i], d_[i]);
        return v;
    }
    IntVec act(const IntVec& v) const { return reduce(t_ * v); }
    IntVec add(const IntVec& a, const IntVec& b) const { return reduce(a + b); }

    std::vector<IntVec> elements() const {
        std::vector<IntVec> out{IntVec(d_.size(), Integer(0))};
        for (std::size_t i = 0; i < d_.size(); ++i) {
            std::vector<IntVec> next;
            for (const auto& v : out)
                for (Integer a = 0; a < d_[i]; ++a) {
                    IntVec w = v;
                    w[i] = a;
                    next.push_back(w);
                }
            out = std::move(next);
        }
        return out;
    }

    // A group endomorphism given by M is invertible iff it is injective.
    bool is_automorphism(const IntMatrix& M) const {
        std::set<IntVec> img;
        for (const auto& v : elements()) img.insert(reduce(M * v));
        return Integer(img.size()) == order();
    }
    bool action_invertible() const { return is_automorphism(t_); }
    bool action_minus_one_invertible() const {
        return is_automorphism(t_ - IntMatrix::identity(rank()));
    }

    // Subgroup generated by a set, by closure under addition.
    std::set<IntVec> span(const std::vector<IntVec>& gens) const {
        std::set<IntVec> s{IntVec(d_.size(), Integer(0))};
        std::vector<IntVec> frontier(s.begin(), s.end());
        while (!frontier.empty()) {
            std::vector<IntVec> next;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    IntVec y = add(x, g);
                    if (s.insert(y).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        return s;
    }

    // Some v whose t-orbit generates the group; nothing if none exists.
    std::optional<IntVec> cyclic_generator() const {
        for (const auto& v : elements()) {
            std::vector<IntVec> orbit{v};
            IntVec w = act(v);
            while (w != v && orbit.size() <= static_cast<std::size_t>(order())) {
                orbit.push_back(w);
                w = act(w);
            }
            if (Integer(span(orbit).size()) == order()) return v;
        }
        return std::nullopt;
    }

    // Prime-power refinement of the invariant factors.
    std::multiset<Integer> elementary_divisors() const {
        std::multiset<Integer> out;
        for (Integer d : d_) {
            for (Integer p = 2; p * p <= d; ++p) {
                Integer pk = 1;
                while (d % p == 0) {
                    d /= p;
                    pk *= p;
                }
                if (pk > 1) out.insert(pk);
            }
            if (d > 1) out.insert(d);
        }
        return out;
    }

    // Group-level test for B + B: every prime power occurs an even number of times.
    bool is_direct_double() const {
        auto e = elementary_divisors();
        for (auto it = e.begin(); it != e.end(); it = e.upper_bound(*it))
            if (e.count(*it) % 2 != 0) return false;
        return true;
    }

private:
    std::vector<Integer> d_;
    IntMatrix t_;
};

}  // namespace solvknot
