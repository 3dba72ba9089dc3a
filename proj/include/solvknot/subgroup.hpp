#pragma once

// Subgroups of Aff(n) whose linear parts form a finite group, described
// exactly as a translation lattice L plus, for each linear part B, one
// translation v_B: the subgroup is the union of the families {(v_B + l, B)}.
// Such a description is canonical once v_B is reduced modulo L, so two
// (infinite) subgroups can be compared as data.

#include "solvknot/affine.hpp"
#include "solvknot/lattice.hpp"

#include <functional>
#include <numeric>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace solvknot {

class AffineSubgroup {
public:
    AffineSubgroup() = default;
    AffineSubgroup(std::size_t dim, RatLattice L, std::map<RatMatrix, RatVec> fam)
        : dim_(dim), L_(std::move(L)), fam_() {
        for (auto& [B, v] : fam) fam_[B] = L_.reduce(v);
    }

    // Subgroup generated by gens. The linear parts must generate a finite group
    // of at most `bound` elements. Translations come from Schreier generators.
    static AffineSubgroup generated_by(const std::vector<AffineIso>& gens, std::size_t dim,
                                       std::size_t bound = 1000) {
        std::map<RatMatrix, AffineIso> reps{{RatMatrix::identity(dim), AffineIso::identity(dim)}};
        std::vector<RatMatrix> queue{RatMatrix::identity(dim)};
        std::vector<RatVec> schreier;
        for (std::size_t k = 0; k < queue.size(); ++k) {
            AffineIso r = reps.at(queue[k]);
            for (const auto& g : gens) {
                AffineIso y = r * g;
                auto it = reps.find(y.linear());
                if (it == reps.end()) {
                    if (reps.size() >= bound) throw std::runtime_error("linear parts exceed bound");
                    reps.emplace(y.linear(), y);
                    queue.push_back(y.linear());
                } else {
                    AffineIso s = y * it->second.inverse();
                    if (!is_zero(s.translation())) schreier.push_back(s.translation());
                }
            }
        }
        RatLattice L(dim, schreier);
        std::map<RatMatrix, RatVec> fam;
        for (const auto& [B, r] : reps) fam[B] = r.translation();
        return AffineSubgroup(dim, L, fam);
    }

    std::size_t dim() const { return dim_; }
    const RatLattice& translations() const { return L_; }
    const std::map<RatMatrix, RatVec>& families() const { return fam_; }
    std::size_t linear_order() const { return fam_.size(); }

    bool contains(const AffineIso& f) const {
        auto it = fam_.find(f.linear());
        return it != fam_.end() && L_.contains(f.translation() - it->second);
    }

    AffineSubgroup intersection(const AffineSubgroup& o) const {
        std::map<RatMatrix, RatVec> fam;
        const auto b1 = L_.basis(), b2 = o.L_.basis();
        for (const auto& [B, v1] : fam_) {
            auto it = o.fam_.find(B);
            if (it == o.fam_.end()) continue;
            const RatVec& v2 = it->second;
            if (b1.empty() && b2.empty()) {
                if (v1 == v2) fam[B] = v1;
                continue;
            }
            std::vector<RatVec> cols = b1;
            for (const auto& b : b2) cols.push_back(-b);
            RatMatrix M = RatMatrix::from_columns(cols, dim_);
            auto sol = solve_integer(M, v2 - v1);
            if (!sol) continue;
            RatVec x = v1;
            for (std::size_t i = 0; i < b1.size(); ++i) x = x + scale(Rational(sol->particular[i]), b1[i]);
            fam[B] = x;
        }
        return AffineSubgroup(dim_, L_.intersection(o.L_), fam);
    }

    bool operator==(const AffineSubgroup& o) const { return dim_ == o.dim_ && L_ == o.L_ && fam_ == o.fam_; }
    bool operator!=(const AffineSubgroup& o) const { return !(*this == o); }

    std::string str() const {
        std::string s = "translations{";
        auto b = L_.basis();
        for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + to_string(b[i]);
        s += "} families{";
        bool first = true;
        for (const auto& [B, v] : fam_) {
            s += (first ? "" : "; ") + to_string(B) + " @ " + to_string(v);
            first = false;
        }
        return s + "}";
    }

private:
    std::size_t dim_ = 0;
    RatLattice L_;
    std::map<RatMatrix, RatVec> fam_;
};

// The ambient group in which centralizers are solved: a finite set of linear
// parts, each with its coset of allowed translations c_B + M.
struct AffineAmbient {
    std::size_t dim = 0;
    std::map<RatMatrix, RatVec> offsets;  // B -> c_B
    RatLattice allowed;                   // M, common to all B

    AffineSubgroup as_subgroup() const { return AffineSubgroup(dim, allowed, offsets); }
};

// All psi in the ambient group with psi phi psi^-1 in `targets`. The
// solution set is itself a group, so it is rebuilt from one solution per
// (linear part, target) pair plus the translation solutions.
inline AffineSubgroup solve_conjugators(const AffineAmbient& amb, const AffineIso& phi,
                                        const std::vector<AffineIso>& targets) {
    const auto Mb = amb.allowed.basis();
    std::vector<AffineIso> found;
    const RatMatrix I = RatMatrix::identity(amb.dim);
    for (const auto& [B, c] : amb.offsets) {
        for (const auto& tgt : targets) {
            const RatMatrix& Ap = tgt.linear();
            if (B * phi.linear() != Ap * B) continue;
            // (I - A') v = w' - B w with v = c + Mb k, k integral.
            RatMatrix K = I - Ap;
            RatVec rhs = tgt.translation() - B * phi.translation() - K * c;
            RatMatrix coeff = K * RatMatrix::from_columns(Mb, amb.dim);
            auto sol = solve_integer(coeff, rhs);
            if (!sol) continue;
            RatVec v = c;
            for (std::size_t i = 0; i < Mb.size(); ++i) v = v + scale(Rational(sol->particular[i]), Mb[i]);
            found.emplace_back(v, B);
            for (const auto& kv : sol->kernel) {
                RatVec l(amb.dim, Rational(0));
                for (std::size_t i = 0; i < Mb.size(); ++i) l = l + scale(Rational(kv[i]), Mb[i]);
                found.push_back(AffineIso::translation(l));
            }
        }
    }
    return AffineSubgroup::generated_by(found, amb.dim);
}

// One psi with psi phi psi^-1 = target, if any exists in the ambient group.
inline std::optional<AffineIso> find_conjugator(const AffineAmbient& amb, const AffineIso& phi,
                                                const AffineIso& target) {
    const auto Mb = amb.allowed.basis();
    const RatMatrix I = RatMatrix::identity(amb.dim);
    for (const auto& [B, c] : amb.offsets) {
        if (B * phi.linear() != target.linear() * B) continue;
        RatMatrix K = I - target.linear();
        RatVec rhs = target.translation() - B * phi.translation() - K * c;
        auto sol = solve_integer(K * RatMatrix::from_columns(Mb, amb.dim), rhs);
        if (!sol) continue;
        RatVec v = c;
        for (std::size_t i = 0; i < Mb.size(); ++i) v = v + scale(Rational(sol->particular[i]), Mb[i]);
        return AffineIso(v, B);
    }
    return std::nullopt;
}

// Generators of the cyclic group <phi>: phi^{+-1} for infinite order, phi^j
// with j prime to the order otherwise.
inline std::vector<AffineIso> cyclic_generators(const AffineIso& phi) {
    auto ord = affine_order(phi);
    if (!ord) return {phi, phi.inverse()};
    std::vector<AffineIso> out;
    for (long long j = 1; j < *ord; ++j)
        if (std::gcd(j, *ord) == 1) out.push_back(phi.pow(j));
    if (out.empty()) out.push_back(phi);
    return out;
}

inline AffineSubgroup centralizer_in(const AffineAmbient& amb, const AffineIso& phi) {
    return solve_conjugators(amb, phi, {phi});
}
inline AffineSubgroup cyclic_normalizer_in(const AffineAmbient& amb, const AffineIso& phi) {
    return solve_conjugators(amb, phi, cyclic_generators(phi));
}

}  // namespace solvknot
