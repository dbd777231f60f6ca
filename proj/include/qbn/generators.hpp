#pragma once

// The distinguished elements of the two Borel halves: the bracketed interval
// words u[k,m], the coideal generators Phi^S(k,m), the coefficient tables
// sigma / mu / tau / alpha, and the mirror map exchanging the halves.
//
// The negative versions are built inside the negative Borel subalgebra,
// whose quantification matrix is p'_{ij} = p_{ji}^{-1}; for type B_n this is
// again a type-B quantification with parameter q^{-1}, so the closed scalar
// factors of the negative constructions use q^{-1} in place of q.

#include <set>

#include "element.hpp"
#include "once_map.hpp"

namespace qbn {

class Generators {
  public:
    explicit Generators(ParamSpec sp) : sp_(std::move(sp)) {}

    const ParamSpec& spec() const { return sp_; }
    int rank() const { return sp_.rank(); }

    /// Constitution of the interval word u(k,m), folded.
    Degree interval_degree(int k, int m, int sign = +1) const {
        return Degree::interval(sp_.rank(), k, m, sign);
    }

    /// tau_i = q^{delta_i^n} on the positive side, q^{-delta_i^n} on the
    /// negative one.
    Scalar tau(int i, int sign = +1) const {
        if (i != sp_.rank()) return Scalar(1);
        return sign >= 0 ? sp_.q() : scalar_inverse(sp_.q());
    }

    /// The canonical bracketing of x_k x_{k+1} ... x_m: left-normed below the
    /// psi-diagonal, right-normed above it, and the normalized two-factor
    /// split on it.
    Element u(int k, int m, int sign = +1) const {
        check_interval(k, m);
        return u_memo_.get({k, m, sign}, [&] { return build_u(k, m, sign); });
    }

    /// Phi^S(k,m): the recursive coideal generator attached to S (regularity
    /// is not required by the construction). Only S \cap [k, m) matters.
    Element phi(int k, int m, const std::set<int>& S, int sign = +1) const {
        check_interval(k, m);
        std::vector<int> s_list;
        for (int s : S)
            if (k <= s && s < m) s_list.push_back(s);
        return phi_memo_.get({k, m, s_list, sign}, [&] { return build_phi(k, m, s_list, sign); });
    }

    // -- coefficient tables ---------------------------------------------------

    /// sigma_k^m = p(u(k,m), u(k,m)) by direct evaluation of the form.
    Scalar sigma_direct(int k, int m) const {
        check_interval(k, m);
        Degree d = interval_degree(k, m);
        return sp_.pform(d, d);
    }
    Scalar sigma_closed(int k, int m) const {
        check_interval(k, m);
        const int n = sp_.rank();
        const Scalar& q = sp_.q();
        if (m == n || k == n + 1) return q;
        if (m == psi(n, k)) return scalar_pow(q, 4);
        return q * q;
    }

    /// mu_k^{m,i} = p(u(k,i), u(i+1,m)) p(u(i+1,m), u(k,i)).
    Scalar mu_direct(int k, int m, int i) const {
        check_interval(k, m);
        if (!(k <= i && i < m)) throw IndexError("mu needs k <= i < m");
        Degree a = interval_degree(k, i), b = interval_degree(i + 1, m);
        return sp_.pform(a, b) * sp_.pform(b, a);
    }
    Scalar mu_closed(int k, int m, int i) const {
        check_interval(k, m);
        if (!(k <= i && i < m)) throw IndexError("mu needs k <= i < m");
        const int n = sp_.rank();
        const Scalar& q = sp_.q();
        int pk = psi(n, k), pm = psi(n, m);
        if (m < pk) {
            if (m > n && i == pm - 1) return scalar_pow(q, -4);
            if (i == n) return Scalar(1);
            return scalar_pow(q, -2);
        }
        if (m == pk) {
            if (i == n) return q * q;
            return Scalar(1);
        }
        if (k <= n && i == pk) return scalar_pow(q, -4);
        if (i == n) return Scalar(1);
        return scalar_pow(q, -2);
    }

    /// alpha_{km}^s = tau_s p(u(1+s,m), u(k,s))^{-1} (per side).
    Scalar alpha(int k, int m, int s, int sign = +1) const {
        Degree a = interval_degree(1 + s, m, sign), b = interval_degree(k, s, sign);
        return tau(s, sign) * scalar_inverse(sp_.pform(a, b));
    }

    /// The substitution x_i -> p_ii^{-1} x_i^-, x_i^- -> -x_i, g_i <-> f_i,
    /// applied letterwise to normal-form terms.
    Element mirror(const Element& a) const {
        const int n = sp_.rank();
        Element out;
        for (const auto& [t, c] : a.terms()) {
            Element acc = Element::from_term(MixedTerm{{}, GroupElement(n), {}}, c);
            for (int j : t.neg) {
                acc *= Scalar(-1);
                acc = rmul_pos(acc, j);
            }
            acc = rmul_group(sp_, acc, t.grp.mirrored());
            for (int i : t.pos) {
                acc *= scalar_inverse(sp_.p(i, i));
                acc = rmul_neg(sp_, acc, i);
            }
            out += acc;
        }
        return out;
    }

  private:
    void check_interval(int k, int m) const {
        if (!(1 <= k && k <= m && m <= 2 * sp_.rank())) throw IndexError("need 1 <= k <= m <= 2n");
    }

    Element build_u(int k, int m, int sign) const {
        const int n = sp_.rank();
        auto x = [&](int i) { return Element::letter(n, i, sign); };
        int pk = psi(n, k);
        if (m == pk) {
            Scalar beta = -scalar_inverse(
                sp_.pform(interval_degree(n + 1, m, sign), interval_degree(k, n, sign)));
            return beta * bracket(sp_, u(n + 1, m, sign), u(k, n, sign));
        }
        Element acc;
        if (m < pk) {
            acc = x(k);
            for (int t = k + 1; t <= m; ++t) acc = bracket(sp_, acc, x(t));
        } else {
            acc = x(m);
            for (int t = m - 1; t >= k; --t) acc = bracket(sp_, x(t), acc);
        }
        return acc;
    }

    Element build_phi(int k, int m, const std::vector<int>& s_list, int sign) const {
        Element acc = u(k, m, sign);
        if (s_list.empty()) return acc;
        Scalar q_side = sign >= 0 ? sp_.q() : scalar_inverse(sp_.q());
        Scalar lead = Scalar(1) - scalar_inverse(q_side * q_side);
        std::set<int> S(s_list.begin(), s_list.end());
        for (int s : s_list) {
            Element tail = multiply(sp_, phi(1 + s, m, S, sign), u(k, s, sign));
            acc -= lead * alpha(k, m, s, sign) * tail;
        }
        return acc;
    }

    ParamSpec sp_;
    mutable OnceMap<std::tuple<int, int, int>, Element> u_memo_;
    mutable OnceMap<std::tuple<int, int, std::vector<int>, int>, Element> phi_memo_;
};

}  // namespace qbn
