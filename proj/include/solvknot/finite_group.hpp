#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

namespace solvknot {

// An explicit finite group: labelled elements and a full multiplication table.
// Element 0 is always the identity; the remaining labels follow the ordering
// of the keys, so the table is reproducible.
template <class K>
class FiniteGroupTable {
public:
    using Mul = std::function<K(const K&, const K&)>;

    static FiniteGroupTable closure(const K& identity, const std::vector<K>& gens, const Mul& mul,
                                    std::size_t bound) {
        std::set<K> seen{identity};
        std::vector<K> frontier{identity};
        while (!frontier.empty()) {
            std::vector<K> next;
            for (const auto& x : frontier)
                for (const auto& g : gens) {
                    K y = mul(x, g);
                    if (seen.insert(y).second) {
                        if (seen.size() > bound) throw std::runtime_error("group closure exceeded bound");
                        next.push_back(y);
                    }
                }
            frontier = std::move(next);
        }
        std::vector<K> elems(seen.begin(), seen.end());
        return from_elements(identity, elems, mul);
    }

    static FiniteGroupTable from_elements(const K& identity, std::vector<K> elems, const Mul& mul) {
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        auto it = std::find(elems.begin(), elems.end(), identity);
        if (it == elems.end()) throw std::invalid_argument("identity missing from element list");
        std::rotate(elems.begin(), it, it + 1);
        FiniteGroupTable t;
        t.elems_ = std::move(elems);
        for (std::size_t i = 0; i < t.elems_.size(); ++i) t.index_[t.elems_[i]] = i;
        const std::size_t n = t.elems_.size();
        t.table_.assign(n * n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                auto f = t.index_.find(mul(t.elems_[i], t.elems_[j]));
                if (f == t.index_.end()) throw std::runtime_error("element set not closed");
                t.table_[i * n + j] = f->second;
            }
        t.inv_.assign(n, 0);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (t.table_[i * n + j] == 0) t.inv_[i] = j;
        return t;
    }

    std::size_t order() const { return elems_.size(); }
    const std::vector<K>& elements() const { return elems_; }
    const K& element(std::size_t i) const { return elems_.at(i); }
    std::size_t index_of(const K& k) const {
        auto f = index_.find(k);
        if (f == index_.end()) throw std::out_of_range("element not in group table");
        return f->second;
    }
    bool contains(const K& k) const { return index_.count(k) > 0; }

    std::size_t mul(std::size_t i, std::size_t j) const { return table_[i * order() + j]; }
    std::size_t inv(std::size_t i) const { return inv_[i]; }
    std::size_t pow(std::size_t i, long long k) const {
        std::size_t base = k < 0 ? inv(i) : i, r = 0;
        unsigned long long e = k < 0 ? -static_cast<unsigned long long>(k) : k;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }
    std::size_t conj(std::size_t g, std::size_t x) const { return mul(mul(g, x), inv(g)); }

    std::size_t element_order(std::size_t i) const {
        std::size_t k = 1, p = i;
        while (p != 0) {
            p = mul(p, i);
            ++k;
        }
        return k;
    }

    std::map<std::size_t, std::size_t> order_profile() const {
        std::map<std::size_t, std::size_t> prof;
        for (std::size_t i = 0; i < order(); ++i) ++prof[element_order(i)];
        return prof;
    }

    std::vector<std::size_t> center() const {
        std::vector<std::size_t> z;
        for (std::size_t i = 0; i < order(); ++i) {
            bool central = true;
            for (std::size_t j = 0; j < order() && central; ++j) central = mul(i, j) == mul(j, i);
            if (central) z.push_back(i);
        }
        return z;
    }

    std::vector<std::size_t> conjugacy_class(std::size_t x) const {
        std::set<std::size_t> c;
        for (std::size_t g = 0; g < order(); ++g) c.insert(conj(g, x));
        return {c.begin(), c.end()};
    }
    std::vector<std::vector<std::size_t>> conjugacy_classes() const {
        std::vector<bool> done(order(), false);
        std::vector<std::vector<std::size_t>> out;
        for (std::size_t x = 0; x < order(); ++x) {
            if (done[x]) continue;
            auto c = conjugacy_class(x);
            for (auto y : c) done[y] = true;
            out.push_back(c);
        }
        return out;
    }
    bool conjugate(std::size_t x, std::size_t y) const {
        for (std::size_t g = 0; g < order(); ++g)
            if (conj(g, x) == y) return true;
        return false;
    }

    // Sorted element indices of the subgroup generated by gens.
    std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const {
        std::vector<bool> in(order(), false);
        std::vector<std::size_t> members{0};
        in[0] = true;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (auto g : gens) {
                std::size_t y = mul(members[k], g);
                if (!in[y]) {
                    in[y] = true;
                    members.push_back(y);
                }
            }
        std::sort(members.begin(), members.end());
        return members;
    }

private:
    std::vector<K> elems_;
    std::map<K, std::size_t> index_;
    std::vector<std::size_t> table_;
    std::vector<std::size_t> inv_;
};

// Order profile of S3 x Z/2.
inline std::map<std::size_t, std::size_t> profile_s3_x_z2() { return {{1, 1}, {2, 7}, {3, 2}, {6, 2}}; }
inline std::map<std::size_t, std::size_t> profile_klein() { return {{1, 1}, {2, 3}}; }

}  // namespace solvknot
