#pragma once

// Degree bookkeeping: the free abelian group H on g_1..g_n, f_1..f_n, word
// constitutions as elements of the free monoid on x_1..x_n, x_1^-..x_n^-,
// and the total order on constitutions induced by the letter order
// x_1 > x_2 > ... > x_n > x_1^- > ... > x_n^-.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <vector>

#include "errors.hpp"

namespace qbn {

/// Letters are stored folded: index i with n < i <= 2n denotes the same
/// variable as 2n-i+1, and folding happens at construction time.
inline int fold_index(int n, int i) {
    if (i < 1 || i > 2 * n) throw IndexError("letter index out of range");
    return i > n ? 2 * n - i + 1 : i;
}

/// psi(i) = 2n-i+1 on the index interval [1, 2n].
inline int psi(int n, int i) { return 2 * n - i + 1; }

using Word = std::vector<int>;  // letter indices in 1..n

struct GroupElement {
    std::vector<int> g, f;  // exponents, size n each

    GroupElement() = default;
    explicit GroupElement(int n) : g(n, 0), f(n, 0) {}

    int rank() const { return static_cast<int>(g.size()); }
    bool is_identity() const {
        auto zero = [](int e) { return e == 0; };
        return std::all_of(g.begin(), g.end(), zero) && std::all_of(f.begin(), f.end(), zero);
    }
    GroupElement operator*(const GroupElement& o) const {
        GroupElement r = *this;
        for (size_t i = 0; i < g.size(); ++i) {
            r.g[i] += o.g[i];
            r.f[i] += o.f[i];
        }
        return r;
    }
    GroupElement inverse() const {
        GroupElement r = *this;
        for (auto& e : r.g) e = -e;
        for (auto& e : r.f) e = -e;
        return r;
    }
    /// Swap the two halves: g_i <-> f_i.
    GroupElement mirrored() const {
        GroupElement r = *this;
        std::swap(r.g, r.f);
        return r;
    }
    auto operator<=>(const GroupElement&) const = default;

    static GroupElement g_i(int n, int i) {
        GroupElement r(n);
        r.g[fold_index(n, i) - 1] = 1;
        return r;
    }
    static GroupElement f_i(int n, int i) {
        GroupElement r(n);
        r.f[fold_index(n, i) - 1] = 1;
        return r;
    }
    static GroupElement h_i(int n, int i) { return g_i(n, i) * f_i(n, i); }
    /// g_{k->m} = g_k g_{k+1} ... g_m with indices above n folded.
    static GroupElement g_range(int n, int k, int m) {
        GroupElement r(n);
        for (int i = k; i <= m; ++i) r.g[fold_index(n, i) - 1] += 1;
        return r;
    }
    static GroupElement f_range(int n, int k, int m) {
        GroupElement r(n);
        for (int i = k; i <= m; ++i) r.f[fold_index(n, i) - 1] += 1;
        return r;
    }
    static GroupElement h_range(int n, int k, int m) { return g_range(n, k, m) * f_range(n, k, m); }
};

/// Constitution of a word in the letters x_1..x_n, x_1^-..x_n^- (folded).
struct Degree {
    std::vector<int> pos, neg;

    Degree() = default;
    explicit Degree(int n) : pos(n, 0), neg(n, 0) {}
    Degree(std::vector<int> p, std::vector<int> ng) : pos(std::move(p)), neg(std::move(ng)) {}

    int rank() const { return static_cast<int>(pos.size()); }
    int total() const {
        return std::accumulate(pos.begin(), pos.end(), 0) + std::accumulate(neg.begin(), neg.end(), 0);
    }
    bool is_zero() const {
        auto zero = [](int e) { return e == 0; };
        return std::all_of(pos.begin(), pos.end(), zero) && std::all_of(neg.begin(), neg.end(), zero);
    }
    /// Image in the group Gamma under the identification x_i^- = -x_i.
    std::vector<int> folded() const {
        std::vector<int> r(pos.size());
        for (size_t i = 0; i < pos.size(); ++i) r[i] = pos[i] - neg[i];
        return r;
    }
    Degree operator+(const Degree& o) const {
        Degree r = *this;
        for (size_t i = 0; i < pos.size(); ++i) {
            r.pos[i] += o.pos[i];
            r.neg[i] += o.neg[i];
        }
        return r;
    }
    bool operator==(const Degree&) const = default;

    static Degree of_word(int n, const Word& w, int sign) {
        Degree d(n);
        auto& v = sign >= 0 ? d.pos : d.neg;
        for (int l : w) v[l - 1] += 1;
        return d;
    }
    /// Constitution of x_k x_{k+1} ... x_m with folding, positive or negative.
    static Degree interval(int n, int k, int m, int sign = +1) {
        if (k < 1 || m > 2 * n || k > m + 1) throw IndexError("interval out of range");
        Degree d(n);
        auto& v = sign >= 0 ? d.pos : d.neg;
        for (int i = k; i <= m; ++i) v[fold_index(n, i) - 1] += 1;
        return d;
    }

    /// The group degree gr(.): each x_i contributes g_i, each x_i^- contributes f_i.
    GroupElement group_degree() const {
        GroupElement h(rank());
        h.g = pos;
        h.f = neg;
        return h;
    }
};

/// Comparison in the completely ordered monoid of constitutions: the first
/// nonzero coordinate difference in the fixed letter order decides.
inline std::strong_ordering compare_degrees(const Degree& a, const Degree& b) {
    for (size_t i = 0; i < a.pos.size(); ++i)
        if (a.pos[i] != b.pos[i]) return a.pos[i] <=> b.pos[i];
    for (size_t i = 0; i < a.neg.size(); ++i)
        if (a.neg[i] != b.neg[i]) return a.neg[i] <=> b.neg[i];
    return std::strong_ordering::equal;
}

}  // namespace qbn
