#pragma once

// Equality in U_q(so_{2n+1}): the type-B Serre quotient of F_n. Equality
// testing goes through per-multidegree slices of the Serre ideal. A slice
// of multidegree d is span{a r b} over words a, b and defining relations r;
// the slice is row-reduced once and cached, and the triangular decomposition
// lets the two legs of a mixed term be reduced independently.
//
// Also home to the four coordinate differential calculi, the differential
// form of the adjoint operators, the coproduct congruences, and the
// Sigma-monoid membership machinery used by the coideal-subalgebra layer.

#include <algorithm>
#include <functional>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "element.hpp"
#include "once_map.hpp"

namespace qbn {

enum class Side { positive, negative, full };
enum class DerivVariant { d, d_star, d_neg, d_neg_star };

/// The bracketed Lyndon-Shirshov form of the type-B Serre relations.
class SerrePresentation {
  public:
    explicit SerrePresentation(const ParamSpec& sp) : n_(sp.rank()) {
        for (int sign : {+1, -1}) {
            auto& out = sign > 0 ? pos_ : neg_;
            auto x = [&](int i) { return Element::letter(n_, i, sign); };
            for (int i = 1; i + 1 <= n_; ++i)
                out.push_back(bracket(sp, x(i), bracket(sp, x(i), x(i + 1))));
            for (int i = 1; i <= n_; ++i)
                for (int j = i + 2; j <= n_; ++j) out.push_back(bracket(sp, x(i), x(j)));
            for (int i = 1; i + 1 < n_; ++i)
                out.push_back(bracket(sp, bracket(sp, x(i), x(i + 1)), x(i + 1)));
            if (n_ >= 2)
                out.push_back(
                    bracket(sp, bracket(sp, bracket(sp, x(n_ - 1), x(n_)), x(n_)), x(n_)));
        }
    }

    int rank() const { return n_; }
    const std::vector<Element>& relations(bool negative) const { return negative ? neg_ : pos_; }

  private:
    int n_;
    std::vector<Element> pos_, neg_;
};

namespace detail {

/// Words of a fixed constitution, ordered descending: the first word is the
/// largest in the lexicographic order with x_1 > x_2 > ... > x_n.
inline void enumerate_words(std::vector<int>& remaining, Word& acc, std::vector<Word>& out) {
    bool done = true;
    for (size_t i = 0; i < remaining.size(); ++i) {
        if (remaining[i] > 0) {
            done = false;
            remaining[i] -= 1;
            acc.push_back(static_cast<int>(i) + 1);
            enumerate_words(remaining, acc, out);
            acc.pop_back();
            remaining[i] += 1;
        }
    }
    if (done) out.push_back(acc);
}

struct SparseRow {
    // (word index, coefficient), sorted by index ascending; index 0 is the
    // largest word, so the first entry is the leading monomial.
    std::vector<std::pair<int, Scalar>> e;

    bool empty() const { return e.empty(); }
    int pivot() const { return e.front().first; }
};

/// v -= c * row
inline void axpy(std::vector<std::pair<int, Scalar>>& v, const Scalar& c, const SparseRow& row) {
    std::vector<std::pair<int, Scalar>> out;
    out.reserve(v.size() + row.e.size());
    auto a = v.begin();
    auto b = row.e.begin();
    while (a != v.end() || b != row.e.end()) {
        if (b == row.e.end() || (a != v.end() && a->first < b->first)) {
            out.push_back(*a++);
        } else if (a == v.end() || b->first < a->first) {
            Scalar nc = -c * b->second;
            if (nc != 0) out.emplace_back(b->first, std::move(nc));
            ++b;
        } else {
            Scalar nc = a->second - c * b->second;
            if (nc != 0) out.emplace_back(a->first, std::move(nc));
            ++a;
            ++b;
        }
    }
    v = std::move(out);
}

/// Row-reduced slice of the Serre ideal for one multidegree.
struct Slice {
    std::vector<Word> words;           // descending
    std::map<Word, int> index;         // word -> position
    std::map<int, SparseRow> rows;     // pivot -> reduced row (pivot coef 1)

    void reduce_vec(std::vector<std::pair<int, Scalar>>& v) const {
        // Rows are in reduced echelon form, so entries created by a
        // subtraction sit on non-pivot columns; one ascending pass suffices.
        for (size_t k = 0; k < v.size();) {
            auto it = rows.find(v[k].first);
            if (it == rows.end()) {
                ++k;
                continue;
            }
            Scalar c = v[k].second;
            axpy(v, c, it->second);
            // the pivot entry vanished; continue from the same index
        }
    }

    bool insert_row(std::vector<std::pair<int, Scalar>> v) {
        reduce_vec(v);
        if (v.empty()) return false;
        Scalar lead = v.front().second;
        if (lead != 1)
            for (auto& [i, c] : v) c /= lead;
        SparseRow row{std::move(v)};
        int piv = row.pivot();
        // keep the basis fully reduced
        for (auto& [p, r] : rows) {
            for (size_t k = 0; k < r.e.size(); ++k) {
                if (r.e[k].first == piv) {
                    Scalar c = r.e[k].second;
                    axpy(r.e, c, row);
                    break;
                }
                if (r.e[k].first > piv) break;
            }
        }
        rows.emplace(piv, std::move(row));
        return true;
    }
};

}  // namespace detail

struct Verdict {
    bool pass = false;
    std::string witness;
    explicit operator bool() const { return pass; }
};

/// Additive submonoid of folded positive degrees, queried by dynamic
/// programming; generators are nonzero vectors in N^n.
class SigmaMonoid {
  public:
    explicit SigmaMonoid(int n) : n_(n) {}

    int rank() const { return n_; }
    const std::set<std::vector<int>>& generators() const { return gens_; }

    void add_generator(const std::vector<int>& g) {
        if (static_cast<int>(g.size()) != n_) throw IndexError("generator rank mismatch");
        if (std::all_of(g.begin(), g.end(), [](int e) { return e == 0; })) return;
        if (std::any_of(g.begin(), g.end(), [](int e) { return e < 0; }))
            throw IndexError("generator must be nonnegative");
        gens_.insert(g);
        memo_.clear();
    }

    bool member(const std::vector<int>& gamma) const {
        if (std::any_of(gamma.begin(), gamma.end(), [](int e) { return e < 0; })) return false;
        if (std::all_of(gamma.begin(), gamma.end(), [](int e) { return e == 0; })) return true;
        auto it = memo_.find(gamma);
        if (it != memo_.end()) return it->second;
        bool r = false;
        for (const auto& g : gens_) {
            std::vector<int> rest(gamma);
            bool ok = true;
            for (int i = 0; i < n_; ++i) {
                rest[i] -= g[i];
                if (rest[i] < 0) ok = false;
            }
            if (ok && member(rest)) {
                r = true;
                break;
            }
        }
        memo_.emplace(gamma, r);
        return r;
    }

    /// Member that is not a sum of two nonzero members.
    bool indecomposable(const std::vector<int>& gamma) const {
        if (!member(gamma)) return false;
        if (std::all_of(gamma.begin(), gamma.end(), [](int e) { return e == 0; })) return false;
        std::vector<int> a(n_, 0);
        for (;;) {
            // iterate a over the box [0, gamma]
            int i = 0;
            while (i < n_ && a[i] == gamma[i]) a[i++] = 0;
            if (i == n_) break;
            a[i] += 1;
            bool zero = std::all_of(a.begin(), a.end(), [](int e) { return e == 0; });
            bool full = a == gamma;
            if (zero || full) continue;
            std::vector<int> b(n_);
            for (int k = 0; k < n_; ++k) b[k] = gamma[k] - a[k];
            if (member(a) && member(b)) return false;
        }
        return true;
    }

  private:
    int n_;
    std::set<std::vector<int>> gens_;
    mutable std::map<std::vector<int>, bool> memo_;
};

class BorelContext {
  public:
    explicit BorelContext(ParamSpec sp, int max_degree = 12)
        : sp_(std::move(sp)), pres_(sp_), max_degree_(max_degree) {}

    const ParamSpec& spec() const { return sp_; }
    const SerrePresentation& presentation() const { return pres_; }
    int max_degree() const { return max_degree_; }

    // -- canonical representatives ------------------------------------------

    Element reduce(const Element& a, Side side = Side::full) const {
        Element out;
        for (const auto& [t, c] : a.terms()) {
            Element neg_part = side != Side::positive
                                   ? reduce_word(t.neg, /*negative=*/true)
                                   : Element::from_term(MixedTerm{t.neg, GroupElement(sp_.rank()), {}}, 1);
            Element pos_part = side != Side::negative
                                   ? reduce_word(t.pos, /*negative=*/false)
                                   : Element::from_term(MixedTerm{{}, GroupElement(sp_.rank()), t.pos}, 1);
            for (const auto& [nt, nc] : neg_part.terms())
                for (const auto& [pt, pc] : pos_part.terms())
                    out.add_term(MixedTerm{nt.neg, t.grp, pt.pos}, c * nc * pc);
        }
        return out;
    }

    bool is_zero(const Element& a) const { return reduce(a).is_zero(); }
    bool equals(const Element& a, const Element& b) const { return reduce(a - b).is_zero(); }

    /// alpha with a = alpha b in the quotient, if any. 0 ~ 0 gives alpha = 1;
    /// zero against nonzero fails.
    std::optional<Scalar> proportionality(const Element& a, const Element& b) const {
        Element ra = reduce(a), rb = reduce(b);
        if (ra.is_zero() && rb.is_zero()) return Scalar(1);
        if (ra.is_zero() || rb.is_zero()) return std::nullopt;
        const auto& [t0, c0] = *rb.begin();
        auto it = ra.terms().find(t0);
        if (it == ra.terms().end()) return std::nullopt;
        Scalar alpha = it->second / c0;
        if (ra == alpha * rb) return alpha;
        return std::nullopt;
    }

    bool tensor_equals(const TensorElement& a, const TensorElement& b) const {
        TensorElement d = a - b;
        TensorElement r = d.map_legs([&](const Element& leg, bool) { return reduce(leg); });
        return r.is_zero();
    }

    // -- differential calculi -----------------------------------------------

    Element derive(const Element& f, int i, DerivVariant v) const {
        const int n = sp_.rank();
        i = fold_index(n, i);
        bool wants_neg = v == DerivVariant::d_neg || v == DerivVariant::d_neg_star;
        Element out;
        for (const auto& [t, c] : f.terms()) {
            if (!t.grp.is_identity() || !(wants_neg ? t.pos : t.neg).empty())
                throw MixedSignError("derivative needs a pure-sign polynomial with trivial group part");
            const Word& w = wants_neg ? t.neg : t.pos;
            for (size_t k = 0; k < w.size(); ++k) {
                if (w[k] != i) continue;
                Scalar coef = c;
                switch (v) {
                    case DerivVariant::d:  // prefix chi^{x_l}(g_i) = p_{l,i}
                        for (size_t s = 0; s < k; ++s) coef *= sp_.p(w[s], i);
                        break;
                    case DerivVariant::d_star:  // suffix chi^i(g_{x_l}) = p_{i,l}
                        for (size_t s = k + 1; s < w.size(); ++s) coef *= sp_.p(i, w[s]);
                        break;
                    case DerivVariant::d_neg:  // prefix chi^{x_l^-}(f_i) = p_{i,l}^{-1}
                        for (size_t s = 0; s < k; ++s) coef /= sp_.p(i, w[s]);
                        break;
                    case DerivVariant::d_neg_star:  // suffix chi^i(f_{x_l})^{-1} = p_{l,i}^{-1}
                        for (size_t s = k + 1; s < w.size(); ++s) coef /= sp_.p(w[s], i);
                        break;
                }
                Word rest;
                rest.reserve(w.size() - 1);
                rest.insert(rest.end(), w.begin(), w.begin() + static_cast<long>(k));
                rest.insert(rest.end(), w.begin() + static_cast<long>(k) + 1, w.end());
                MixedTerm nt;
                nt.grp = GroupElement(n);
                (wants_neg ? nt.neg : nt.pos) = rest;
                out.add_term(nt, coef);
            }
        }
        return out;
    }

    /// Apply d_u = d_{i1} d_{i2} ... d_{im} for the word u (rightmost first).
    Element derive_word(const Element& f, const Word& u, DerivVariant v) const {
        Element r = f;
        for (auto it = u.rbegin(); it != u.rend(); ++it) r = derive(r, *it, v);
        return r;
    }

    /// Differential form of [x_i, u^-] and [u, x_i^-]; compares the skew
    /// bracket against the derivative expression in the quotient.
    Verdict check_adjoint(const Element& f, int i) const {
        const int n = sp_.rank();
        i = fold_index(n, i);
        if (f.is_zero()) return {true, ""};
        bool has_neg = false, has_pos = false;
        for (const auto& [t, c] : f.terms()) {
            has_neg = has_neg || !t.neg.empty();
            has_pos = has_pos || !t.pos.empty();
        }
        if (has_neg && has_pos) throw MixedSignError("adjoint check needs a pure-sign polynomial");
        bool negative = has_neg;
        Element lhs, rhs;
        GroupElement hi = GroupElement::h_i(n, i);
        if (negative) {
            // [x_i, u^-] = d*_{-i}(u^-) p(x_i, u^-) p_ii^{-1} - g_i f_i d_{-i}(u^-)
            auto d = f.uniform_degree(n);
            if (!d) throw HomogeneityError("right");
            lhs = bracket(sp_, Element::letter(n, i), f);
            Scalar pf = sp_.pform(Degree::of_word(n, {i}, +1), *d) / sp_.p(i, i);
            rhs = pf * derive(f, i, DerivVariant::d_neg_star) -
                  multiply(sp_, Element::group(hi), derive(f, i, DerivVariant::d_neg));
        } else {
            // [u, x_i^-] = d*_i(u) - p_ii^{-1} p(x_i, u) g_i f_i d_i(u)
            auto d = f.uniform_degree(n);
            if (!d) throw HomogeneityError("left");
            lhs = bracket(sp_, f, Element::letter(n, i, -1));
            Scalar pf = sp_.pform(Degree::of_word(n, {i}, +1), *d) / sp_.p(i, i);
            rhs = derive(f, i, DerivVariant::d_star) -
                  pf * multiply(sp_, Element::group(hi), derive(f, i, DerivVariant::d));
        }
        Element diff = reduce(lhs - rhs);
        if (diff.is_zero()) return {true, ""};
        const auto& [t, coef] = *diff.begin();
        std::string witness = "residual term " + scalar_str(coef) + " *";
        for (int l : t.neg) witness += " x" + std::to_string(l) + "-";
        if (!t.grp.is_identity()) witness += " h";
        for (int l : t.pos) witness += " x" + std::to_string(l);
        witness += " (of " + std::to_string(diff.size()) + ")";
        return {false, witness};
    }

    enum class Congruence { direct, dual, direct_neg, dual_neg };

    /// Delta(u) against its first-order truncation, modulo the stated ideal.
    Verdict check_coproduct_congruence(const Element& u, Congruence which) const {
        const int n = sp_.rank();
        bool neg = which == Congruence::direct_neg || which == Congruence::dual_neg;
        bool dual = which == Congruence::dual || which == Congruence::dual_neg;
        TensorElement remainder = coproduct(sp_, u);
        if (!dual) {
            remainder -= TensorElement::of(u, Element::unit(n));
            for (int i = 1; i <= n; ++i) {
                Element d = derive(u, i, neg ? DerivVariant::d_neg : DerivVariant::d);
                if (d.is_zero()) continue;
                GroupElement gi = neg ? GroupElement::f_i(n, i) : GroupElement::g_i(n, i);
                remainder -= TensorElement::of(multiply(sp_, Element::group(gi), d),
                                               Element::letter(n, i, neg ? -1 : +1));
            }
        } else {
            auto h = u.uniform_h_degree();
            if (!h) throw HomogeneityError("left");
            remainder -= TensorElement::of(Element::group(*h), u);
            for (int i = 1; i <= n; ++i) {
                Element d = derive(u, i, neg ? DerivVariant::d_neg_star : DerivVariant::d_star);
                if (d.is_zero()) continue;
                GroupElement gi = neg ? GroupElement::f_i(n, i) : GroupElement::g_i(n, i);
                Element head = multiply(sp_, Element::group(*h * gi.inverse()),
                                        Element::letter(n, i, neg ? -1 : +1));
                remainder -= TensorElement::of(head, d);
            }
        }
        for (const auto& [k, c] : remainder) {
            const MixedTerm& probe = dual ? k.first : k.second;
            const Word& w = neg ? probe.neg : probe.pos;
            bool in_ideal = static_cast<int>(w.size()) >= 2 && (neg ? probe.pos : probe.neg).empty() &&
                            (dual || probe.grp.is_identity());
            if (!in_ideal) return {false, "remainder term escapes the congruence ideal"};
        }
        return {true, ""};
    }

    /// Membership criterion for a right coideal subalgebra with root monoid
    /// `mon`: f belongs iff d_u(f) = 0 for every word u with
    /// D(f) - D(u) outside the monoid.
    bool integrability_check(const SigmaMonoid& mon, const Element& f) const {
        if (f.is_zero()) return true;
        auto d = f.uniform_degree(sp_.rank());
        if (!d || !std::all_of(d->neg.begin(), d->neg.end(), [](int e) { return e == 0; }))
            throw MixedSignError("integrability needs a homogeneous positive polynomial");
        return integ_rec(mon, reduce(f, Side::positive), d->pos);
    }

    // -- slice access (exposed for diagnostics/tests) -------------------------

    /// Number of linearly independent ideal rows in the slice.
    int slice_rank(const std::vector<int>& d, bool negative) const {
        return static_cast<int>(slice(d, negative)->rows.size());
    }
    int slice_word_count(const std::vector<int>& d) const {
        std::vector<int> rem = d;
        Word acc;
        std::vector<Word> words;
        detail::enumerate_words(rem, acc, words);
        return static_cast<int>(words.size());
    }

    /// Number of ordered PBW monomials of multidegree d in the generators
    /// u[k,m], k <= m < psi(k). The quotient slice dimension (word count
    /// minus ideal rank) must equal this when the generators form a PBW set.
    long pbw_monomial_count(const std::vector<int>& d) const {
        const int n = sp_.rank();
        std::vector<std::vector<int>> gens;
        for (int k = 1; k <= 2 * n; ++k)
            for (int m = k; m < psi(n, k); ++m) gens.push_back(Degree::interval(n, k, m).pos);
        std::function<long(size_t, std::vector<int>)> count = [&](size_t i, std::vector<int> rest) -> long {
            bool zero = std::all_of(rest.begin(), rest.end(), [](int e) { return e == 0; });
            if (zero) return 1;
            if (i == gens.size()) return 0;
            long total = 0;
            for (;;) {
                total += count(i + 1, rest);
                bool ok = true;
                for (int t = 0; t < n; ++t) {
                    rest[static_cast<size_t>(t)] -= gens[i][static_cast<size_t>(t)];
                    if (rest[static_cast<size_t>(t)] < 0) ok = false;
                }
                if (!ok) break;
            }
            return total;
        };
        return count(0, d);
    }

  private:
    bool integ_rec(const SigmaMonoid& mon, const Element& cur, const std::vector<int>& gamma) const {
        if (cur.is_zero()) return true;
        if (!mon.member(gamma)) {
            if (!reduce(cur, Side::positive).is_zero()) return false;
            return true;
        }
        int total = std::accumulate(gamma.begin(), gamma.end(), 0);
        if (total == 0) return true;
        for (int i = 1; i <= sp_.rank(); ++i) {
            if (gamma[i - 1] == 0) continue;
            std::vector<int> g2 = gamma;
            g2[i - 1] -= 1;
            if (!integ_rec(mon, derive(cur, i, DerivVariant::d), g2)) return false;
        }
        return true;
    }

    Element reduce_word(const Word& w, bool negative) const {
        const int n = sp_.rank();
        if (w.empty()) return Element::unit(n);
        std::vector<int> d(n, 0);
        for (int l : w) d[l - 1] += 1;
        auto sl = slice(d, negative);
        std::vector<std::pair<int, Scalar>> v{{sl->index.at(w), Scalar(1)}};
        sl->reduce_vec(v);
        Element out;
        for (const auto& [idx, c] : v) {
            MixedTerm t;
            t.grp = GroupElement(n);
            (negative ? t.neg : t.pos) = sl->words[static_cast<size_t>(idx)];
            out.add_term(t, c);
        }
        return out;
    }

    std::shared_ptr<const detail::Slice> slice(const std::vector<int>& d, bool negative) const {
        int total = std::accumulate(d.begin(), d.end(), 0);
        if (total > max_degree_) throw DegreeBudgetExceeded(d);
        return (negative ? neg_slices_ : pos_slices_).get(d, [&] { return build_slice(d, negative); });
    }

    std::shared_ptr<const detail::Slice> build_slice(const std::vector<int>& d, bool negative) const {
        const int n = sp_.rank();
        auto sl = std::make_shared<detail::Slice>();
        {
            std::vector<int> rem = d;
            Word acc;
            detail::enumerate_words(rem, acc, sl->words);
        }
        std::sort(sl->words.begin(), sl->words.end());  // letter 1 first = descending order
        for (int i = 0; i < static_cast<int>(sl->words.size()); ++i) sl->index[sl->words[i]] = i;

        auto word_vec = [&](const std::map<Word, Scalar>& poly) {
            std::vector<std::pair<int, Scalar>> v;
            v.reserve(poly.size());
            for (const auto& [w, c] : poly) v.emplace_back(sl->index.at(w), c);
            std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
            return v;
        };

        // I_d = sum_i x_i I_{d - e_i}  +  sum_r r * (words of d - deg r)
        for (int i = 1; i <= n; ++i) {
            if (d[i - 1] == 0) continue;
            std::vector<int> d2 = d;
            d2[i - 1] -= 1;
            auto sub = slice(d2, negative);
            for (const auto& [piv, row] : sub->rows) {
                std::map<Word, Scalar> poly;
                for (const auto& [idx, c] : row.e) {
                    Word w = sub->words[static_cast<size_t>(idx)];
                    w.insert(w.begin(), i);
                    poly[w] = c;
                }
                sl->insert_row(word_vec(poly));
            }
        }
        for (const Element& r : pres_.relations(negative)) {
            std::vector<int> rd(n, 0);
            std::map<Word, Scalar> rpoly;
            for (const auto& [t, c] : r.terms()) {
                const Word& w = negative ? t.neg : t.pos;
                rpoly[w] = c;
            }
            if (rpoly.empty()) continue;
            for (int l : rpoly.begin()->first) rd[l - 1] += 1;
            std::vector<int> rem(n, 0);
            bool fits = true;
            for (int i = 0; i < n; ++i) {
                rem[i] = d[i] - rd[i];
                if (rem[i] < 0) fits = false;
            }
            if (!fits) continue;
            std::vector<Word> tails;
            {
                Word acc;
                detail::enumerate_words(rem, acc, tails);
            }
            for (const Word& b : tails) {
                std::map<Word, Scalar> poly;
                for (const auto& [w, c] : rpoly) {
                    Word full = w;
                    full.insert(full.end(), b.begin(), b.end());
                    poly[full] = c;
                }
                sl->insert_row(word_vec(poly));
            }
        }
        return sl;
    }

    ParamSpec sp_;
    SerrePresentation pres_;
    int max_degree_;
    mutable OnceMap<std::vector<int>, std::shared_ptr<const detail::Slice>> pos_slices_, neg_slices_;
};

}  // namespace qbn
