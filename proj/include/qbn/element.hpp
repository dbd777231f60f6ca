#pragma once

// The mixed algebra F_n on x_1..x_n, x_1^-..x_n^- over the group algebra of
// H = G x F, subject to
//     [x_i, x_j^-] = delta_i^j (1 - g_i f_i),        w g = chi^w(g) g w.
// Elements are kept in triangular normal form: every term is a product
// (negative word) (group element) (positive word), and multiplication
// rewrites x_i x_j^- -> p_ji x_j^- x_i + delta_i^j (1 - g_i f_i) while
// commuting letters past group elements with character factors. Each
// rewriting step either removes a (positive, negative) inversion or strictly
// lowers the constitution, so the process terminates.

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "grading.hpp"
#include "params.hpp"
#include "scalar.hpp"

namespace qbn {

struct MixedTerm {
    Word neg;          // letters in 1..n, word in x^-
    GroupElement grp;  // middle group element
    Word pos;          // word in x

    auto operator<=>(const MixedTerm&) const = default;

    Degree degree(int n) const {
        Degree d(n);
        for (int l : pos) d.pos[l - 1] += 1;
        for (int l : neg) d.neg[l - 1] += 1;
        return d;
    }
    /// Total H-degree grp * gr(pos) * gr(neg).
    GroupElement h_degree() const {
        GroupElement h = grp;
        for (int l : pos) h.g[l - 1] += 1;
        for (int l : neg) h.f[l - 1] += 1;
        return h;
    }
    bool is_group_like() const { return neg.empty() && pos.empty(); }
};

class Element {
  public:
    using Map = std::map<MixedTerm, Scalar>;

    Element() = default;

    static Element unit(int n) { return from_term(MixedTerm{{}, GroupElement(n), {}}, 1); }
    static Element group(const GroupElement& h) { return from_term(MixedTerm{{}, h, {}}, 1); }
    /// x_i (sign >= 0) or x_i^- (sign < 0); the index is folded.
    static Element letter(int n, int i, int sign = +1) {
        MixedTerm t{{}, GroupElement(n), {}};
        (sign >= 0 ? t.pos : t.neg).push_back(fold_index(n, i));
        return from_term(t, 1);
    }
    static Element from_term(MixedTerm t, Scalar c) {
        Element e;
        if (c != 0) e.t_.emplace(std::move(t), std::move(c));
        return e;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    void add_term(const MixedTerm& t, const Scalar& c) {
        if (c == 0) return;
        auto [it, inserted] = t_.try_emplace(t, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }

    Element& operator+=(const Element& o) {
        for (const auto& [t, c] : o.t_) add_term(t, c);
        return *this;
    }
    Element& operator-=(const Element& o) {
        for (const auto& [t, c] : o.t_) add_term(t, -c);
        return *this;
    }
    Element& operator*=(const Scalar& s) {
        if (s == 0) {
            t_.clear();
            return *this;
        }
        for (auto& [t, c] : t_) c *= s;
        return *this;
    }
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(const Scalar& s, Element a) { return a *= s; }
    Element operator-() const {
        Element r = *this;
        for (auto& [t, c] : r.t_) c = -c;
        return r;
    }
    bool operator==(const Element&) const = default;

    /// Shared constitution of all terms, when it exists.
    std::optional<Degree> uniform_degree(int n) const {
        std::optional<Degree> d;
        for (const auto& [t, c] : t_) {
            Degree td = t.degree(n);
            if (!d)
                d = td;
            else if (!(*d == td))
                return std::nullopt;
        }
        return d;
    }
    /// Shared folded Gamma-degree (this is what makes the character chi^u
    /// well defined: chi^{x_i} chi^{x_i^-} = 1 identically on H).
    std::optional<std::vector<int>> gamma_degree(int n) const {
        std::optional<std::vector<int>> d;
        for (const auto& [t, c] : t_) {
            auto td = t.degree(n).folded();
            if (!d)
                d = std::move(td);
            else if (*d != td)
                return std::nullopt;
        }
        return d;
    }
    std::optional<GroupElement> uniform_h_degree() const {
        std::optional<GroupElement> h;
        for (const auto& [t, c] : t_) {
            GroupElement th = t.h_degree();
            if (!h)
                h = std::move(th);
            else if (!(*h == th))
                return std::nullopt;
        }
        return h;
    }

  private:
    Map t_;
};

// ---------------------------------------------------------------------------
// Normal-form multiplication
// ---------------------------------------------------------------------------

namespace detail {

inline Scalar chi_pos_word(const ParamSpec& sp, const Word& w, const GroupElement& h) {
    Scalar r(1);
    for (int l : w) r *= sp.chi_letter(l, h);
    return r;
}

}  // namespace detail

/// Append one positive letter (already folded) on the right.
inline Element rmul_pos(const Element& a, int i) {
    Element out;
    for (const auto& [t, c] : a) {
        MixedTerm nt = t;
        nt.pos.push_back(i);
        out.add_term(nt, c);
    }
    return out;
}

/// Multiply by a group element on the right: pos letters commute past it.
inline Element rmul_group(const ParamSpec& sp, const Element& a, const GroupElement& h) {
    if (h.is_identity()) return a;
    Element out;
    for (const auto& [t, c] : a) {
        MixedTerm nt = t;
        nt.grp = t.grp * h;
        out.add_term(nt, c * detail::chi_pos_word(sp, t.pos, h));
    }
    return out;
}

namespace detail {

/// Normal form of (positive word w) * x_j^-.
inline Element push_neg_through(const ParamSpec& sp, int n, const Word& w, int j) {
    if (w.empty()) return Element::from_term(MixedTerm{{j}, GroupElement(n), {}}, 1);
    Word head(w.begin(), w.end() - 1);
    int i = w.back();
    // (head x_i) x_j^- = p_ji (head x_j^-) x_i + delta_ij (head - head g_i f_i)
    Element out = sp.p(j, i) * rmul_pos(push_neg_through(sp, n, head, j), i);
    if (i == j) {
        GroupElement hi = GroupElement::h_i(n, i);
        out.add_term(MixedTerm{{}, GroupElement(n), head}, 1);
        out.add_term(MixedTerm{{}, hi, head}, -chi_pos_word(sp, head, hi));
    }
    return out;
}

}  // namespace detail

/// Multiply by x_j^- (already folded) on the right.
inline Element rmul_neg(const ParamSpec& sp, const Element& a, int j) {
    const int n = sp.rank();
    Element out;
    for (const auto& [t, c] : a) {
        Element mid = detail::push_neg_through(sp, n, t.pos, j);
        for (const auto& [mt, mc] : mid) {
            // assemble  neg . grp . mt.neg . mt.grp . mt.pos
            Scalar k = c * mc;
            for (int l : mt.neg) k *= sp.chi_letter(l, t.grp);  // grp past x_l^-
            MixedTerm nt;
            nt.neg = t.neg;
            nt.neg.insert(nt.neg.end(), mt.neg.begin(), mt.neg.end());
            nt.grp = t.grp * mt.grp;
            nt.pos = mt.pos;
            out.add_term(nt, k);
        }
    }
    return out;
}

inline Element multiply(const ParamSpec& sp, const Element& a, const Element& b) {
    Element out;
    for (const auto& [tb, cb] : b) {
        Element acc;
        for (const auto& [ta, ca] : a) acc.add_term(ta, ca * cb);
        for (int j : tb.neg) acc = rmul_neg(sp, acc, j);
        acc = rmul_group(sp, acc, tb.grp);
        for (int i : tb.pos) acc = rmul_pos(acc, i);
        out += acc;
    }
    return out;
}

inline Element multiply(const ParamSpec& sp, std::initializer_list<Element> factors) {
    Element acc = Element::unit(sp.rank());
    for (const auto& f : factors) acc = multiply(sp, acc, f);
    return acc;
}

// ---------------------------------------------------------------------------
// Skew bracket
// ---------------------------------------------------------------------------

/// [u, v] with explicitly declared degrees: chi-degree of u (folded) and
/// H-degree of v. Needed when an inhomogeneous relation has already been
/// applied and the intended grading of a factor is no longer visible.
inline Element bracket_declared(const ParamSpec& sp, const Element& u, const std::vector<int>& chi_u,
                                const Element& v, const GroupElement& h_v) {
    return multiply(sp, u, v) - sp.chi_folded(chi_u, h_v) * multiply(sp, v, u);
}

/// [u, v] = u v - chi^u(g_v) v u. The left factor must be Gamma-homogeneous
/// (single character), the right factor H-homogeneous (single group degree).
inline Element bracket(const ParamSpec& sp, const Element& u, const Element& v) {
    if (u.is_zero() || v.is_zero()) return Element();
    auto chi_u = u.gamma_degree(sp.rank());
    if (!chi_u) throw HomogeneityError("left");
    auto h_v = v.uniform_h_degree();
    if (!h_v) throw HomogeneityError("right");
    return bracket_declared(sp, u, *chi_u, v, *h_v);
}

// ---------------------------------------------------------------------------
// Hopf structure
// ---------------------------------------------------------------------------

inline Scalar counit(const Element& a) {
    Scalar r(0);
    for (const auto& [t, c] : a)
        if (t.is_group_like()) r += c;
    return r;
}

/// sigma(x_i) = -g_i^-1 x_i, sigma(x_i^-) = -f_i^-1 x_i^-, sigma(h) = h^-1,
/// extended as an anti-automorphism.
inline Element antipode(const ParamSpec& sp, const Element& a) {
    const int n = sp.rank();
    Element out;
    for (const auto& [t, c] : a) {
        Element acc = Element::from_term(MixedTerm{{}, GroupElement(n), {}}, c);
        for (auto it = t.pos.rbegin(); it != t.pos.rend(); ++it) {
            acc *= Scalar(-1);
            acc = rmul_group(sp, acc, GroupElement::g_i(n, *it).inverse());
            acc = rmul_pos(acc, *it);
        }
        acc = rmul_group(sp, acc, t.grp.inverse());
        for (auto it = t.neg.rbegin(); it != t.neg.rend(); ++it) {
            acc *= Scalar(-1);
            acc = rmul_group(sp, acc, GroupElement::f_i(n, *it).inverse());
            acc = rmul_neg(sp, acc, *it);
        }
        out += acc;
    }
    return out;
}

class TensorElement {
  public:
    using Key = std::pair<MixedTerm, MixedTerm>;
    using Map = std::map<Key, Scalar>;

    TensorElement() = default;
    static TensorElement of(const Element& a, const Element& b) {
        TensorElement r;
        for (const auto& [ta, ca] : a)
            for (const auto& [tb, cb] : b) r.add_term(ta, tb, ca * cb);
        return r;
    }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const Map& terms() const { return t_; }
    auto begin() const { return t_.begin(); }
    auto end() const { return t_.end(); }

    void add_term(const MixedTerm& l, const MixedTerm& r, const Scalar& c) {
        if (c == 0) return;
        Key k{l, r};
        auto [it, inserted] = t_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) t_.erase(it);
        }
    }
    TensorElement& operator+=(const TensorElement& o) {
        for (const auto& [k, c] : o.t_) {
            auto [it, inserted] = t_.try_emplace(k, c);
            if (!inserted) {
                it->second += c;
                if (it->second == 0) t_.erase(it);
            }
        }
        return *this;
    }
    TensorElement& operator-=(const TensorElement& o) {
        TensorElement neg = o;
        for (auto& [k, c] : neg.t_) c = -c;
        return *this += neg;
    }
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Scalar& s, TensorElement a) {
        if (s == 0) return TensorElement();
        for (auto& [k, c] : a.t_) c *= s;
        return a;
    }
    bool operator==(const TensorElement&) const = default;

    /// Legs multiply independently.
    static TensorElement product(const ParamSpec& sp, const TensorElement& a, const TensorElement& b) {
        TensorElement out;
        for (const auto& [ka, ca] : a.t_)
            for (const auto& [kb, cb] : b.t_) {
                Element l = multiply(sp, Element::from_term(ka.first, 1), Element::from_term(kb.first, 1));
                Element r = multiply(sp, Element::from_term(ka.second, 1), Element::from_term(kb.second, 1));
                Scalar c = ca * cb;
                for (const auto& [lt, lc] : l)
                    for (const auto& [rt, rc] : r) out.add_term(lt, rt, c * lc * rc);
            }
        return out;
    }

    template <class F>
    TensorElement map_legs(F&& f) const {
        TensorElement out;
        for (const auto& [k, c] : t_) {
            Element l = f(Element::from_term(k.first, 1), /*left=*/true);
            Element r = f(Element::from_term(k.second, 1), /*left=*/false);
            for (const auto& [lt, lc] : l)
                for (const auto& [rt, rc] : r) out.add_term(lt, rt, c * lc * rc);
        }
        return out;
    }

    /// (eps (x) id) and (id (x) eps); both must return the original element
    /// back when applied to a coproduct.
    Element collapse_left() const {
        Element out;
        for (const auto& [k, c] : t_)
            if (k.first.is_group_like()) out.add_term(k.second, c);
        return out;
    }
    Element collapse_right() const {
        Element out;
        for (const auto& [k, c] : t_)
            if (k.second.is_group_like()) out.add_term(k.first, c);
        return out;
    }

  private:
    Map t_;
};

/// Delta(x_i) = x_i (x) 1 + g_i (x) x_i, Delta(x_i^-) = x_i^- (x) 1 + f_i (x) x_i^-,
/// Delta(h) = h (x) h, extended multiplicatively.
inline TensorElement coproduct(const ParamSpec& sp, const Element& a) {
    const int n = sp.rank();
    TensorElement out;
    for (const auto& [t, c] : a) {
        TensorElement acc = TensorElement::of(Element::unit(n), c * Element::unit(n));
        auto mul_step = [&](const TensorElement& step) {
            acc = TensorElement::product(sp, acc, step);
        };
        for (int j : t.neg) {
            TensorElement step = TensorElement::of(Element::letter(n, j, -1), Element::unit(n));
            step += TensorElement::of(Element::group(GroupElement::f_i(n, j)), Element::letter(n, j, -1));
            mul_step(step);
        }
        if (!t.grp.is_identity())
            mul_step(TensorElement::of(Element::group(t.grp), Element::group(t.grp)));
        for (int i : t.pos) {
            TensorElement step = TensorElement::of(Element::letter(n, i, +1), Element::unit(n));
            step += TensorElement::of(Element::group(GroupElement::g_i(n, i)), Element::letter(n, i, +1));
            mul_step(step);
        }
        out += acc;
    }
    return out;
}

/// eps^- (x) eps^0 (x) id with respect to the triangular decomposition:
/// terms with a nonempty negative word die, survivors lose their group part.
inline Element project_positive(const Element& a) {
    Element out;
    for (const auto& [t, c] : a) {
        if (!t.neg.empty()) continue;
        MixedTerm nt{{}, GroupElement(t.grp.rank()), t.pos};
        out.add_term(nt, c);
    }
    return out;
}

/// Maximal constitution among the terms, per the monoid order.
inline Degree element_degree(int n, const Element& a) {
    if (a.is_zero()) throw ZeroElementError();
    std::optional<Degree> best;
    for (const auto& [t, c] : a) {
        Degree d = t.degree(n);
        if (!best || compare_degrees(d, *best) == std::strong_ordering::greater) best = d;
    }
    return *best;
}

}  // namespace qbn
