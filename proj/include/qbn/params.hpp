#pragma once

// Quantification data for type B_n: the rank, the parameter q and the full
// matrix p_{ij} = chi^i(g_j), with the dependent entries solved from
//   p_{nn} = q,   p_{ii} = q^2 (i < n),
//   p_{i,i+1} p_{i+1,i} = q^-2,   p_{ij} p_{ji} = 1 (j > i+1).
// The entries p_{ij}, i < j, are free and may be chosen by the caller; unset
// ones are filled deterministically from a seed.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "grading.hpp"
#include "scalar.hpp"

namespace qbn {

class ParamSpec {
  public:
    static ParamSpec make(int n, const Scalar& q,
                          const std::map<std::pair<int, int>, Scalar>& free = {},
                          std::uint64_t seed = 1) {
        if (n < 1) throw std::invalid_argument("rank must be positive");
        check_q(q);
        for (const auto& [ij, v] : free) {
            if (!(ij.first >= 1 && ij.first < ij.second && ij.second <= n))
                throw std::invalid_argument("free entries are the p_{ij} with i < j");
            if (v == 0) throw std::invalid_argument("free entry p_{ij} must be nonzero");
        }
        ParamSpec s;
        s.n_ = n;
        s.q_ = q;
        s.p_.assign(n, std::vector<Scalar>(n, Scalar(0)));
        for (int i = 1; i < n; ++i) s.p_[i - 1][i - 1] = q * q;
        s.p_[n - 1][n - 1] = q;

        std::mt19937_64 rng(seed);
        std::set<Scalar> used;
        auto draw = [&rng, &used]() {
            for (;;) {
                long num = static_cast<long>(rng() % 9) + 2;   // 2..10
                long den = static_cast<long>(rng() % 5) + 1;   // 1..5
                Scalar v(num, den);
                v.canonicalize();
                if (used.insert(v).second) return v;
            }
        };
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) {
                auto it = free.find({i, j});
                Scalar v = it != free.end() ? it->second : draw();
                s.p_[i - 1][j - 1] = v;
                s.p_[j - 1][i - 1] = j == i + 1 ? scalar_inverse(v * q * q) : scalar_inverse(v);
            }
        s.validate();
        return s;
    }

    int rank() const { return n_; }
    const Scalar& q() const { return q_; }

    /// p_{ij} = chi^i(g_j); indices are 1-based and folded.
    const Scalar& p(int i, int j) const {
        return p_[fold_index(n_, i) - 1][fold_index(n_, j) - 1];
    }

    /// chi^i evaluated on an arbitrary element of H = G x F.
    Scalar chi_letter(int i, const GroupElement& h) const {
        Scalar r(1);
        int ii = fold_index(n_, i);
        for (int j = 1; j <= n_; ++j) {
            if (h.g[j - 1] != 0) r *= scalar_pow(p_[ii - 1][j - 1], h.g[j - 1]);
            if (h.f[j - 1] != 0) r *= scalar_pow(p_[j - 1][ii - 1], h.f[j - 1]);
        }
        return r;
    }

    /// chi^w for a word of the given constitution; x_i^- contributes (chi^i)^{-1}.
    Scalar chi(const Degree& wdeg, const GroupElement& h) const {
        Scalar r(1);
        for (int i = 1; i <= n_; ++i) {
            int e = wdeg.pos[i - 1] - wdeg.neg[i - 1];
            if (e != 0) r *= scalar_pow(chi_letter(i, h), e);
        }
        return r;
    }

    Scalar chi_folded(const std::vector<int>& e, const GroupElement& h) const {
        Scalar r(1);
        for (int i = 1; i <= n_; ++i)
            if (e[i - 1] != 0) r *= scalar_pow(chi_letter(i, h), e[i - 1]);
        return r;
    }

    /// The bimultiplicative form p(a, b) = chi^a(gr(b)).
    Scalar pform(const Degree& a, const Degree& b) const { return chi(a, b.group_degree()); }

    /// Re-check the matrix constraints; throws when violated.
    void validate() const {
        check_q(q_);
        Scalar q2 = q_ * q_;
        for (int i = 1; i <= n_; ++i)
            for (int j = 1; j <= n_; ++j) {
                const Scalar& v = p_[i - 1][j - 1];
                if (v == 0) throw std::invalid_argument("p entries must be nonzero");
                if (i == j && i == n_ && v != q_) throw std::invalid_argument("p_nn != q");
                if (i == j && i < n_ && v != q2) throw std::invalid_argument("p_ii != q^2");
            }
        for (int i = 1; i < n_; ++i)
            if (p_[i - 1][i] * p_[i][i - 1] != scalar_inverse(q2))
                throw std::invalid_argument("p_{i,i+1} p_{i+1,i} != q^-2");
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 2; j <= n_; ++j)
                if (p_[i - 1][j - 1] * p_[j - 1][i - 1] != 1)
                    throw std::invalid_argument("p_ij p_ji != 1 for j > i+1");
    }

    const std::vector<std::vector<Scalar>>& matrix() const { return p_; }

  private:
    static void check_q(const Scalar& q) {
        if (q == 0 || q == 1 || q == -1) throw std::invalid_argument("q must avoid 0, 1, -1");
        if (q * q == -1) throw std::invalid_argument("q^2 = -1 not allowed");
        if (q * q * q == 1) throw std::invalid_argument("q^3 = 1 not allowed");
        Scalar q2 = q * q;
        if (q2 * q2 == 1) throw std::invalid_argument("q^4 = 1 not allowed");
    }

    int n_ = 0;
    Scalar q_;
    std::vector<std::vector<Scalar>> p_;
};

}  // namespace qbn
