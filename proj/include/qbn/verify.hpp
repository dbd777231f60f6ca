#pragma once

// The lemma-by-lemma verification harness. Each suite enumerates the
// admissible index/set configurations at the requested rank, evaluates both
// sides of the cited identity through the quotient machinery, and reports
// per-case pass/fail/skip. Proportional claims assert a nonzero scalar,
// vanishing claims assert reduction to zero, structural claims assert the
// stated shape. Suites run at several parameter specializations by default.

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "borel.hpp"
#include "generators.hpp"
#include "schemes.hpp"

namespace qbn {

struct CaseFailure {
    std::string key;
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::vector<std::string> spec_fingerprints;
    long cases = 0;
    long skipped = 0;
    std::vector<CaseFailure> failures;
    std::vector<std::string> skips;
    std::map<std::string, long> tag_counts;  // case-key prefix -> how many ran
    std::string policy = "exhaustive";
    std::vector<std::string> notes;
    double wall_ms = 0;
    bool pass() const { return failures.empty(); }
};

struct SuiteOptions {
    int n = 2;
    std::uint64_t seed = 1;
    long trials = 500;
    int jobs = 1;
    int max_degree = 12;
    int specializations = 3;
    std::optional<ParamSpec> spec;  // run on this spec only
};

namespace detail {

struct Case {
    std::string key;
    std::function<std::string()> run;  // empty string = pass
};

class Session {
  public:
    Session(ParamSpec spec, const SuiteOptions& opt, std::string fingerprint)
        : sp(std::move(spec)), bc(sp, opt.max_degree), gen(sp), options(opt),
          fingerprint_(std::move(fingerprint)) {}

    const ParamSpec sp;
    BorelContext bc;
    Generators gen;
    const SuiteOptions& options;
    int n() const { return sp.rank(); }

    void add(std::string key, std::function<std::string()> fn) {
        cases_.push_back({std::move(key), std::move(fn)});
    }

    void run_into(SuiteReport& rep) {
        // cap the exhaustive range: sample deterministically beyond it
        std::vector<size_t> order(cases_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        if (cases_.size() > 50000) {
            std::mt19937_64 rng(options.seed ^ 0x5eedu);
            std::shuffle(order.begin(), order.end(), rng);
            order.resize(5000);
            std::sort(order.begin(), order.end());
            rep.policy = "sampled-5000-of-" + std::to_string(cases_.size());
        }
        std::vector<std::string> results(order.size());
        std::vector<int> flags(order.size(), 0);  // 0 pass, 1 fail, 2 skip
        auto work = [&](size_t begin, size_t step) {
            for (size_t i = begin; i < order.size(); i += step) {
                const Case& c = cases_[order[i]];
                try {
                    std::string msg = c.run();
                    if (!msg.empty()) {
                        results[i] = msg;
                        flags[i] = 1;
                    }
                } catch (const DegreeBudgetExceeded& e) {
                    std::string d = "[";
                    for (size_t k = 0; k < e.multidegree.size(); ++k)
                        d += (k ? "," : "") + std::to_string(e.multidegree[k]);
                    d += "]";
                    results[i] = "skipped: degree budget exceeded at " + d;
                    flags[i] = 2;
                } catch (const std::exception& e) {
                    results[i] = std::string("exception: ") + e.what();
                    flags[i] = 1;
                }
            }
        };
        int jobs = std::max(1, options.jobs);
        if (jobs == 1) {
            work(0, 1);
        } else {
            std::vector<std::thread> pool;
            for (int t = 0; t < jobs; ++t) pool.emplace_back(work, static_cast<size_t>(t), static_cast<size_t>(jobs));
            for (auto& th : pool) th.join();
        }
        for (size_t i = 0; i < order.size(); ++i) {
            rep.cases += 1;
            const std::string& key = cases_[order[i]].key;
            rep.tag_counts[key.substr(0, key.find_first_of(" #/"))] += 1;
            if (flags[i] == 1)
                rep.failures.push_back({fingerprint_ + "/" + key, results[i]});
            else if (flags[i] == 2) {
                rep.skipped += 1;
                rep.skips.push_back(fingerprint_ + "/" + key + ": " + results[i]);
            }
        }
        rep.spec_fingerprints.push_back(fingerprint_);
    }

    // -- helpers shared by the suites -----------------------------------------

    Element x(int i, int sign = +1) const { return Element::letter(n(), i, sign); }

    Element word_elem(const Word& w, int sign) const {
        MixedTerm t;
        t.grp = GroupElement(n());
        (sign >= 0 ? t.pos : t.neg) = w;
        return Element::from_term(t, 1);
    }

    std::optional<Element> try_bracket(const Element& u, const Element& v) const {
        try {
            return bracket(sp, u, v);
        } catch (const HomogeneityError&) {
            return std::nullopt;
        }
    }

    /// chi^u(H-degree of v) for homogeneous u, v.
    std::optional<Scalar> pairing(const Element& u, const Element& v) const {
        auto cu = u.gamma_degree(n());
        auto hv = v.uniform_h_degree();
        if (!cu || !hv) return std::nullopt;
        return sp.chi_folded(*cu, *hv);
    }

    static std::string term_text(const Element& e) {
        if (e.is_zero()) return "0";
        const auto& [t, c] = *e.begin();
        std::string out = scalar_str(c) + "*";
        for (int l : t.neg) out += "x" + std::to_string(l) + "-";
        for (size_t i = 0; i < t.grp.g.size(); ++i)
            if (t.grp.g[i]) out += "g" + std::to_string(i + 1);
        for (size_t i = 0; i < t.grp.f.size(); ++i)
            if (t.grp.f[i]) out += "f" + std::to_string(i + 1);
        for (int l : t.pos) out += "x" + std::to_string(l);
        if (e.size() > 1) out += "+...(" + std::to_string(e.size()) + " terms)";
        return out;
    }
    std::string sides_text(const Element& a, const Element& b) const {
        return " [lhs reduced: " + term_text(bc.reduce(a)) + "; rhs reduced: " + term_text(bc.reduce(b)) + "]";
    }

    std::string expect_zero(const Element& e, const std::string& what) const {
        if (bc.is_zero(e)) return "";
        return what + ": expected 0" + sides_text(e, Element());
    }
    std::string expect_equal(const Element& a, const Element& b, const std::string& what) const {
        if (bc.equals(a, b)) return "";
        return what + ": sides differ" + sides_text(a, b);
    }
    std::string expect_proportional(const Element& a, const Element& b, const std::string& what) const {
        auto al = bc.proportionality(a, b);
        if (al && *al != 0) return "";
        return what + (al ? ": zero factor" : ": not proportional") + sides_text(a, b);
    }

    /// Exact solve of sum_j alpha_j basis_j = target in the quotient; all
    /// elements are reduced first.
    std::optional<std::vector<Scalar>> solve_in_quotient(const std::vector<Element>& basis,
                                                         const Element& target) const {
        std::vector<Element> rb;
        rb.reserve(basis.size());
        for (const auto& b : basis) rb.push_back(bc.reduce(b));
        Element rt = bc.reduce(target);
        std::map<MixedTerm, size_t> rows;
        for (const auto& b : rb)
            for (const auto& [t, c] : b.terms()) rows.try_emplace(t, rows.size());
        for (const auto& [t, c] : rt.terms()) rows.try_emplace(t, rows.size());
        size_t R = rows.size(), C = rb.size();
        std::vector<std::vector<Scalar>> M(R, std::vector<Scalar>(C + 1, Scalar(0)));
        for (size_t j = 0; j < C; ++j)
            for (const auto& [t, c] : rb[j].terms()) M[rows[t]][j] = c;
        for (const auto& [t, c] : rt.terms()) M[rows[t]][C] = c;
        // gaussian elimination
        std::vector<int> pivot_col(R, -1);
        size_t rank = 0;
        for (size_t col = 0; col < C && rank < R; ++col) {
            size_t sel = rank;
            while (sel < R && M[sel][col] == 0) ++sel;
            if (sel == R) continue;
            std::swap(M[sel], M[rank]);
            Scalar inv = scalar_inverse(M[rank][col]);
            for (size_t j = col; j <= C; ++j) M[rank][j] *= inv;
            for (size_t r = 0; r < R; ++r) {
                if (r == rank || M[r][col] == 0) continue;
                Scalar f = M[r][col];
                for (size_t j = col; j <= C; ++j) M[r][j] -= f * M[rank][j];
            }
            pivot_col[rank] = static_cast<int>(col);
            ++rank;
        }
        for (size_t r = rank; r < R; ++r)
            if (M[r][C] != 0) return std::nullopt;  // inconsistent
        std::vector<Scalar> sol(C, Scalar(0));
        for (size_t r = 0; r < rank; ++r) sol[static_cast<size_t>(pivot_col[r])] = M[r][C];
        // verify (guards against free columns hiding non-uniqueness)
        Element acc;
        for (size_t j = 0; j < C; ++j) acc += sol[j] * rb[j];
        if (!(acc == rt)) return std::nullopt;
        return sol;
    }

  private:
    std::vector<Case> cases_;
    std::string fingerprint_;
};

inline std::string fingerprint_of(const ParamSpec& sp) {
    std::ostringstream os;
    os << "n=" << sp.rank() << ",q=" << scalar_str(sp.q());
    for (int i = 1; i <= sp.rank(); ++i)
        for (int j = i + 1; j <= sp.rank(); ++j)
            os << ",p" << i << j << "=" << scalar_str(sp.p(i, j));
    return os.str();
}

inline std::vector<ParamSpec> specializations(const SuiteOptions& opt) {
    if (opt.spec) return {*opt.spec};
    static const Scalar qs[] = {Scalar(2), Scalar(3), Scalar(5, 3), Scalar(7, 2), Scalar(4, 7)};
    std::vector<ParamSpec> out;
    int count = std::max(1, opt.specializations);
    for (int i = 0; i < count; ++i)
        out.push_back(ParamSpec::make(opt.n, qs[i % 5], {}, opt.seed + 101 * static_cast<unsigned>(i)));
    return out;
}

}  // namespace detail

using SuiteBuilder = std::function<void(detail::Session&)>;

// ---------------------------------------------------------------------------
// suite bodies
// ---------------------------------------------------------------------------

namespace suites {

/// jak1/ja/jak3/jak4, br1f/br1/br2, bri, cuq1..cuq4, and the alignment
/// independence of Lemma indle, on seeded random homogeneous elements.
inline void bracket_identities(detail::Session& s) {
    const int n = s.n();
    std::mt19937_64 rng(s.options.seed * 77 + 13);
    auto random_word = [&](int len, const std::vector<int>& alphabet) {
        Word w;
        for (int t = 0; t < len; ++t)
            w.push_back(alphabet[rng() % alphabet.size()]);
        return w;
    };
    std::vector<int> full;
    for (int i = 1; i <= n; ++i) full.push_back(i);
    auto random_homogeneous = [&](int maxdeg, int sign) {
        int len = 1 + static_cast<int>(rng() % static_cast<unsigned>(maxdeg));
        Word base = random_word(len, full);
        GroupElement h(n);
        for (int i = 0; i < n; ++i) {
            h.g[i] = static_cast<int>(rng() % 3) - 1;
            h.f[i] = static_cast<int>(rng() % 3) - 1;
        }
        Element out;
        int pieces = 1 + static_cast<int>(rng() % 2);
        for (int p = 0; p < pieces; ++p) {
            Word w = base;
            std::shuffle(w.begin(), w.end(), rng);
            MixedTerm t;
            t.grp = h;
            (sign >= 0 ? t.pos : t.neg) = w;
            out.add_term(t, Scalar(1 + static_cast<long>(rng() % 5)));
        }
        return out;
    };
    auto random_group = [&]() {
        GroupElement h(n);
        for (int i = 0; i < n; ++i) {
            h.g[i] = static_cast<int>(rng() % 3) - 1;
            h.f[i] = static_cast<int>(rng() % 3) - 1;
        }
        return h;
    };

    auto triple_case = [n, &s](Element u, Element v, Element w, GroupElement g, int letter) {
        return [=, &s]() -> std::string {
            const ParamSpec& sp = s.sp;
            std::string err;
            auto note = [&err](const std::string& m) {
                if (err.empty()) err = m;
            };
            auto uv = s.try_bracket(u, v);
            auto uw = s.try_bracket(u, w);
            auto vw = s.try_bracket(v, w);
            auto p = [&](const Element& a, const Element& b) { return s.pairing(a, b); };
            // (jak1)
            if (uv && vw && uw) {
                auto lhs = s.try_bracket(*uv, w);
                auto r1 = s.try_bracket(u, *vw);
                auto r2 = s.try_bracket(*uw, v);
                auto pwv = p(w, v), pvw = p(v, w);
                if (lhs && r1 && r2 && pwv && pvw && *pwv != 0) {
                    Element rhs = *r1 + scalar_inverse(*pwv) * *r2 +
                                  (*pvw - scalar_inverse(*pwv)) * multiply(sp, *uw, v);
                    if (!(*lhs == rhs)) note("jak1");
                }
                // (ja)
                auto r3 = s.try_bracket(v, *uw);
                auto pvu = p(v, u), puv = p(u, v);
                if (lhs && r1 && r3 && pvu && puv && *pvu != 0) {
                    Element rhs = *r1 - scalar_inverse(*pvu) * *r3 +
                                  (scalar_inverse(*pvu) - *puv) * multiply(sp, v, *uw);
                    if (!(*lhs == rhs)) note("ja");
                }
                // (jak3)
                if (uw->is_zero() && lhs && r1 && !(*lhs == *r1)) note("jak3");
                // (jak4)
                if (uv->is_zero() && puv && pvu && *puv * *pvu == 1 && r1 && r3 &&
                    !(*r1 == *puv * *r3))
                    note("jak4");
            }
            // (br1f): [uv, w] = p(v,w) [u,w] v + u [v,w]
            if (uw && vw) {
                auto lhs = s.try_bracket(multiply(sp, u, v), w);
                auto pvw = p(v, w);
                if (lhs && pvw) {
                    Element rhs = *pvw * multiply(sp, *uw, v) + multiply(sp, u, *vw);
                    if (!(*lhs == rhs)) note("br1f");
                    if (uw->is_zero() && !(*lhs == multiply(sp, u, *vw))) note("br2");
                }
            }
            // (br1): [u, vw] = [u,v] w + p(u,v) v [u,w]
            if (uv && uw) {
                auto lhs = s.try_bracket(u, multiply(sp, v, w));
                auto puv = p(u, v);
                if (lhs && puv) {
                    Element rhs = multiply(sp, *uv, w) + *puv * multiply(sp, v, *uw);
                    if (!(*lhs == rhs)) note("br1");
                }
            }
            // (bri)
            {
                auto puv = p(u, v), pvu = p(v, u);
                auto vu = s.try_bracket(v, u);
                if (uv && vu && puv && pvu && *puv * *pvu == 1 && !(*uv == -*puv * *vu)) note("bri");
            }
            // (cuq1): [u, g v] = chi^u(g) g [u, v]
            if (uv) {
                auto lhs = s.try_bracket(u, multiply(sp, Element::group(g), v));
                auto cu = u.gamma_degree(n);
                if (lhs && cu) {
                    Element rhs = sp.chi_folded(*cu, g) * multiply(sp, Element::group(g), *uv);
                    if (!(*lhs == rhs)) note("cuq1");
                }
            }
            // (cuq2), (cuq21): [g u, v]
            if (uv) {
                auto lhs = s.try_bracket(multiply(sp, Element::group(g), u), v);
                auto puv = p(u, v);
                auto cv = v.gamma_degree(n);
                if (lhs && puv && cv) {
                    Scalar chvg = sp.chi_folded(*cv, g);
                    Element gE = Element::group(g);
                    Element rhs2 = multiply(sp, gE, *uv) +
                                   *puv * (Scalar(1) - chvg) * multiply(sp, {gE, v, u});
                    if (!(*lhs == rhs2)) note("cuq2");
                    Element rhs21 = chvg * multiply(sp, gE, *uv) +
                                    (Scalar(1) - chvg) * multiply(sp, {gE, u, v});
                    if (!(*lhs == rhs21)) note("cuq21");
                }
            }
            // (cuq3)/(cuq4) with [x_i, x_i^-] developed
            {
                GroupElement hi = GroupElement::h_i(n, letter);
                Element inner = Element::unit(n) - Element::group(hi);
                auto cu = u.gamma_degree(n);
                if (cu) {
                    Element lhs = bracket_declared(sp, u, *cu, inner, hi);
                    Element rhs = (Scalar(1) - sp.chi_folded(*cu, hi)) * u;
                    if (!(lhs == rhs)) note("cuq3");
                }
                auto hu = u.uniform_h_degree();
                if (hu && cu) {
                    Element lhs = bracket(sp, inner, u);
                    Element rhs = (sp.chi_folded(*cu, hi) - 1) * multiply(sp, Element::group(hi), u);
                    if (!(lhs == rhs)) note("cuq4");
                }
            }
            return err;
        };
    };

    for (long trial = 0; trial < s.options.trials; ++trial) {
        int du = 1 + static_cast<int>(rng() % 2);
        int dv = 1 + static_cast<int>(rng() % 2);
        int dw = 1 + static_cast<int>(rng() % (6 - std::min(4, du + dv)));
        Element u = random_homogeneous(du, rng() % 2 ? +1 : -1);
        Element v = random_homogeneous(dv, rng() % 2 ? +1 : -1);
        Element w = random_homogeneous(dw, rng() % 2 ? +1 : -1);
        s.add("triple#" + std::to_string(trial),
              triple_case(u, v, w, random_group(), 1 + static_cast<int>(rng() % static_cast<unsigned>(n))));
    }

    // Deterministic triples on which the conditional identities fire
    // nontrivially. jak3/br2 need [u,w] = 0 with [u,v], [v,w] != 0: mix a
    // positive and a negative x_1-word against a negative x_n-word. jak4
    // needs [u,v] = 0 with p_uv p_vu = 1 and [v,[u,w]] != 0: take the
    // group-like u = g_1 f_1^{-1}, which pairs trivially with x_1-words but
    // twists x_2-words.
    if (n >= 2) {
        int idx = 0;
        Element twist = Element::group(GroupElement::g_i(n, 1) * GroupElement::f_i(n, 1).inverse());
        for (int a = 1; a <= 2; ++a)
            for (int b = 1; b <= 2; ++b)
                for (int cc = 1; cc <= 2; ++cc) {
                    Element pos1 = s.word_elem(Word(static_cast<size_t>(a), 1), +1);
                    Element neg1 = s.word_elem(Word(static_cast<size_t>(b), 1), -1);
                    Element negn = s.word_elem(Word(static_cast<size_t>(cc), n), -1);
                    Element posn = s.word_elem(Word(static_cast<size_t>(cc), n), +1);
                    Element pos1b = s.word_elem(Word(static_cast<size_t>(b), 1), +1);
                    Element pos2c = s.word_elem(Word(static_cast<size_t>(cc), 2), +1);
                    s.add("cond-jak3#" + std::to_string(idx),
                          triple_case(pos1, neg1, negn, GroupElement(n), 1));
                    s.add("cond-jak4#" + std::to_string(idx),
                          triple_case(twist, pos1b, pos2c, GroupElement(n), n));
                    s.add("cond-br2#" + std::to_string(idx),
                          triple_case(pos1, posn, negn, GroupElement(n), 1));
                    ++idx;
                }
    }

    // Colored forms of the Jacobi/antisymmetry identities on pure-sign
    // words: [[u,v],w^-] = [u,[v,w^-]] + p_wv [[u,w^-],v],
    // [u^-,w] = -p_uw^{-1} [w,u^-], the negative-left variant, and
    // [u,[v^-,w^-]] = [[u,v^-],w^-] + p_vu [v^-,[u,w^-]].
    std::mt19937_64 rng2(s.options.seed * 99 + 5);
    for (long trial = 0; trial < std::min<long>(s.options.trials, 200); ++trial) {
        auto rnd_word = [&](int maxlen) {
            Word w;
            int len = 1 + static_cast<int>(rng2() % static_cast<unsigned>(maxlen));
            for (int t = 0; t < len; ++t)
                w.push_back(1 + static_cast<int>(rng2() % static_cast<unsigned>(n)));
            return w;
        };
        Element u = s.word_elem(rnd_word(2), +1);
        Element v = s.word_elem(rnd_word(2), +1);
        Element wm = s.word_elem(rnd_word(2), -1);
        Element tm = s.word_elem(rnd_word(1), -1);
        s.add("colored#" + std::to_string(trial), [=, &s]() -> std::string {
            const ParamSpec& sp = s.sp;
            auto p = [&](const Element& a, const Element& b) { return *s.pairing(a, b); };
            // (uno); the coefficient p_wv is chi^w(g_v) for the underlying
            // positive word w, i.e. the inverse of the pairing of w^- with v
            {
                auto vw = s.try_bracket(v, wm);
                if (vw) {
                    auto lhs = s.try_bracket(bracket(sp, u, v), wm);
                    auto mid = s.try_bracket(u, *vw);
                    auto r2 = s.try_bracket(bracket(sp, u, wm), v);
                    if (lhs && mid && r2) {
                        Element rhs = *mid + scalar_inverse(p(wm, v)) * *r2;
                        if (!(*lhs == rhs)) return "uno";
                    }
                }
            }
            // (dos): [u^-, w] = -p_uw^{-1} [w, u^-]
            {
                Element um = tm;
                Element w2 = u;
                Element lhs = bracket(sp, um, w2);
                Scalar puw = scalar_inverse(p(um, w2));  // p_{uw} = p(u,w) with u positive
                Element rhs = -scalar_inverse(puw) * bracket(sp, w2, um);
                if (!(lhs == rhs)) return "dos";
            }
            // (tres): [[u^-,v^-],w] = [u^-,[v^-,w]] + p_vw^{-1} [[u^-,w],v^-]
            {
                Element um = wm, vm = tm, w2 = u;
                auto vw = s.try_bracket(vm, w2);
                auto uw = s.try_bracket(um, w2);
                if (vw && uw) {
                    auto lhs = s.try_bracket(bracket(sp, um, vm), w2);
                    auto r1 = s.try_bracket(um, *vw);
                    auto r2 = s.try_bracket(*uw, vm);
                    Scalar pvw = scalar_inverse(p(vm, w2));  // p(v,w), v positive word of vm
                    if (lhs && r1 && r2) {
                        Element rhs = *r1 + scalar_inverse(pvw) * *r2;
                        if (!(*lhs == rhs)) return "tres";
                    }
                }
            }
            // (cua): [u,[v^-,w^-]] = [[u,v^-],w^-] + p_vu [v^-,[u,w^-]]
            {
                auto uv = s.try_bracket(u, tm);
                auto uw = s.try_bracket(u, wm);
                if (uv && uw) {
                    auto lhs = s.try_bracket(u, bracket(sp, tm, wm));
                    auto r1 = s.try_bracket(*uv, wm);
                    auto r2 = s.try_bracket(tm, *uw);
                    if (lhs && r1 && r2) {
                        Scalar pvu = scalar_inverse(p(tm, u));  // p(v,u) for positive v
                        Element rhs = *r1 + pvu * *r2;
                        if (!(*lhs == rhs)) return "cua";
                    }
                }
            }
            return "";
        });
    }

    // Lemma indle: alignment independence for chains with commuting
    // non-neighbors: y_1, y_2 positive in x_1, y_3, y_4 negative in x_n.
    if (n >= 2) {
        for (long trial = 0; trial < std::min<long>(s.options.trials, 100); ++trial) {
            auto wlen = [&]() { return 1 + static_cast<int>(rng() % 2); };
            Element y1 = s.word_elem(Word(static_cast<size_t>(wlen()), 1), +1);
            Element y2 = s.word_elem(Word(static_cast<size_t>(wlen()), 1), +1);
            Element y3 = s.word_elem(Word(static_cast<size_t>(wlen()), n), -1);
            Element y4 = s.word_elem(Word(static_cast<size_t>(wlen()), n), -1);
            s.add("indle#" + std::to_string(trial), [=, &s]() -> std::string {
                const ParamSpec& sp = s.sp;
                Element a123 = bracket(sp, bracket(sp, y1, y2), y3);
                Element b123 = bracket(sp, y1, bracket(sp, y2, y3));
                if (!(a123 == b123)) return "indle m=3";
                Element left = bracket(sp, a123, y4);
                Element mid = bracket(sp, bracket(sp, y1, y2), bracket(sp, y3, y4));
                Element right = bracket(sp, y1, bracket(sp, y2, bracket(sp, y3, y4)));
                Element right2 = bracket(sp, y1, bracket(sp, bracket(sp, y2, y3), y4));
                if (!(left == mid) || !(left == right) || !(left == right2)) return "indle m=4";
                return "";
            });
        }
    }
}

/// Lemmas suu, suu1, suu2 in the mixed algebra.
inline void mixed_pairings(detail::Session& s) {
    const int n = s.n();
    for (int j1 = 1; j1 <= n; ++j1)
        for (int j2 = 1; j2 <= n; ++j2) {
            if (j1 == j2) continue;
            for (int d1 = 1; d1 <= 2; ++d1)
                for (int d2 = 1; d2 <= 2; ++d2) {
                    std::ostringstream key;
                    key << "suu i=" << j1 << " j=" << j2 << " d=" << d1 << d2;
                    s.add(key.str(), [=, &s]() -> std::string {
                        Element u = s.word_elem(Word(static_cast<size_t>(d1), j1), +1);
                        Element v = s.word_elem(Word(static_cast<size_t>(d2), j2), -1);
                        Element b = bracket(s.sp, u, v);
                        if (!b.is_zero()) return "suu: nonzero bracket";
                        return "";
                    });
                }
        }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            s.add("suu1 i=" + std::to_string(i) + " j=" + std::to_string(j), [=, &s]() -> std::string {
                const ParamSpec& sp = s.sp;
                Element lhs = bracket(sp, bracket(sp, s.x(i), s.x(j)),
                                      bracket(sp, s.x(j, -1), s.x(i, -1)));
                Scalar coef = Scalar(1) - sp.p(i, j) * sp.p(j, i);
                Element rhs = coef * (Element::unit(n) -
                                      Element::group(GroupElement::h_i(n, i) * GroupElement::h_i(n, j)));
                if (!(lhs == rhs)) return "suu1: mismatch";
                return "";
            });
            s.add("suu2 i=" + std::to_string(i) + " j=" + std::to_string(j), [=, &s]() -> std::string {
                const ParamSpec& sp = s.sp;
                Element lhs = bracket(sp, bracket(sp, bracket(sp, s.x(i), s.x(j)), s.x(j)),
                                      bracket(sp, s.x(j, -1), bracket(sp, s.x(j, -1), s.x(i, -1))));
                Scalar pp = sp.p(i, j) * sp.p(j, i);
                Scalar eps = (Scalar(1) + sp.p(j, j)) * (Scalar(1) - pp) * (Scalar(1) - pp * sp.p(j, j));
                GroupElement big =
                    GroupElement::h_i(n, i) * GroupElement::h_i(n, j) * GroupElement::h_i(n, j);
                Element rhs = eps * (Element::unit(n) - Element::group(big));
                if (!(lhs == rhs)) return "suu2: mismatch";
                return "";
            });
        }
}

/// sepp, rsc, too/too1/too2, NU, rww, ins2.
inline void borel_basics(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    // sepp
    for (int j = 1; j <= n; ++j)
        for (int dl = 1; dl <= 2; ++dl)
            for (int dr = 1; dr <= 2; ++dr) {
                if (j == 1 || j == n) {
                    // one of the sides is empty unless 1 < j < n; still test
                    // the nontrivial ones at the borders
                }
                std::vector<int> left, right;
                for (int i = 1; i < j; ++i) left.push_back(i);
                for (int i = j + 1; i <= n; ++i) right.push_back(i);
                if (left.empty() || right.empty()) continue;
                std::ostringstream key;
                key << "sepp j=" << j << " d=" << dl << dr;
                s.add(key.str(), [=, &s]() -> std::string {
                    Word wl, wr;
                    for (int t = 0; t < dl; ++t) wl.push_back(left[static_cast<size_t>(t) % left.size()]);
                    for (int t = 0; t < dr; ++t) wr.push_back(right[static_cast<size_t>(t) % right.size()]);
                    Element u = s.word_elem(wl, +1), v = s.word_elem(wr, +1);
                    std::string e = s.expect_zero(bracket(s.sp, u, v), "sepp fwd");
                    if (!e.empty()) return e;
                    return s.expect_zero(bracket(s.sp, v, u), "sepp bwd");
                });
            }
    // rsc: left-normed ~ right-normed when p_ij p_ji = p_jj^{1-a}
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            for (int a = 1; a <= 4; ++a) {
                Scalar cond = scalar_pow(s.sp.p(j, j), 1 - a);
                if (s.sp.p(i, j) * s.sp.p(j, i) != cond) continue;
                std::ostringstream key;
                key << "rsc i=" << i << " j=" << j << " a=" << a;
                s.add(key.str(), [=, &s]() -> std::string {
                    const ParamSpec& sp = s.sp;
                    Element lnorm = s.x(i);
                    for (int t = 0; t < a; ++t) lnorm = bracket(sp, lnorm, s.x(j));
                    Element rnorm = s.x(i);
                    for (int t = 0; t < a; ++t) rnorm = bracket(sp, s.x(j), rnorm);
                    // raw proportionality in the free algebra
                    if (lnorm.is_zero() && rnorm.is_zero()) return "";
                    if (lnorm.is_zero() || rnorm.is_zero()) return "rsc: one side vanished";
                    const auto& [t0, c0] = *rnorm.begin();
                    auto it = lnorm.terms().find(t0);
                    if (it == lnorm.terms().end()) return "rsc: support mismatch";
                    Scalar al = it->second / c0;
                    if (!(lnorm == al * rnorm)) return "rsc: not proportional";
                    return "";
                });
            }
        }
    // too
    for (int lam = 2; lam < N; ++lam) {
        if (lam == n || lam == n + 1) continue;
        s.add("too lambda=" + std::to_string(lam), [=, &s]() -> std::string {
            Element mid = s.gen.u(lam - 1, lam + 1);
            std::string e = s.expect_zero(bracket(s.sp, s.x(fold_index(n, lam)), mid), "too left");
            if (!e.empty()) return e;
            return s.expect_zero(bracket(s.sp, mid, s.x(fold_index(n, lam))), "too right");
        });
    }
    // too1 / too2
    for (int k = 1; k <= n; ++k)
        for (int a = k + 1; a <= n; ++a)
            for (int lam = k; lam < a; ++lam)
                s.add("too1 k=" + std::to_string(k) + " a=" + std::to_string(a) + " l=" + std::to_string(lam),
                      [=, &s] { return s.expect_zero(bracket(s.sp, s.x(lam), s.gen.u(k, a)), "too1"); });
    for (int k = n + 1; k <= N; ++k)
        for (int a = k + 1; a <= N; ++a)
            for (int lam = k + 1; lam <= a; ++lam)
                s.add("too2 k=" + std::to_string(k) + " a=" + std::to_string(a) + " l=" + std::to_string(lam),
                      [=, &s] {
                          return s.expect_zero(
                              bracket(s.sp, s.gen.u(k, a), s.x(fold_index(n, lam))), "too2");
                      });
    // NU
    for (int k = 1; k <= N; ++k)
        for (int i = k; i <= N; ++i)
            for (int j = i + 1; j <= N; ++j)
                for (int m = j + 1; m <= N; ++m) {
                    if (m == psi(n, i) - 1 || j == psi(n, k)) continue;
                    std::ostringstream key;
                    key << "NU " << k << "," << i << "," << j << "," << m;
                    if (m != psi(n, k))
                        s.add(key.str() + " fwd", [=, &s] {
                            return s.expect_zero(bracket(s.sp, s.gen.u(k, i), s.gen.u(j + 1, m)), "NU fwd");
                        });
                    if (i != psi(n, j) - 1)
                        s.add(key.str() + " bwd", [=, &s] {
                            return s.expect_zero(bracket(s.sp, s.gen.u(j + 1, m), s.gen.u(k, i)), "NU bwd");
                        });
                }
    // rww
    for (int k = 1; k <= n; ++k)
        for (int m = n + 1; m <= N; ++m) {
            if (m == psi(n, k)) continue;
            s.add("rww k=" + std::to_string(k) + " m=" + std::to_string(m), [=, &s]() -> std::string {
                Element u = s.gen.u(k, m);
                Element a = bracket(s.sp, s.gen.u(k, n), s.gen.u(n + 1, m));
                std::string e = s.expect_equal(u, a, "rww fwd");
                if (!e.empty()) return e;
                Scalar beta = -scalar_inverse(
                    s.sp.pform(Degree::interval(n, n + 1, m), Degree::interval(n, k, n)));
                Element b = beta * bracket(s.sp, s.gen.u(n + 1, m), s.gen.u(k, n));
                return s.expect_equal(u, b, "rww bwd");
            });
        }
    // ins2: equality off the exceptional indices, strict failure on them
    for (int k = 1; k <= N; ++k)
        for (int m = k + 1; m <= N; ++m) {
            if (m == psi(n, k)) continue;
            for (int i = k; i < m; ++i) {
                bool exceptional = (i == psi(n, m) - 1 || i == psi(n, k));
                std::ostringstream key;
                key << "ins2 " << k << "," << i << "," << m << (exceptional ? " exc" : "");
                s.add(key.str(), [=, &s]() -> std::string {
                    Element lhs = bracket(s.sp, s.gen.u(k, i), s.gen.u(i + 1, m));
                    bool eq = s.bc.equals(lhs, s.gen.u(k, m));
                    if (!exceptional && !eq) return "ins2: decomposition failed";
                    if (exceptional && eq) return "ins2: exceptional index unexpectedly satisfied";
                    return "";
                });
            }
        }
}

/// pdee/pdu tables, the coproduct formula, the adjoint differential forms,
/// and the four coproduct congruences.
inline void derivative_tables(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    const Scalar& q = s.sp.q();
    Scalar lead = Scalar(1) - scalar_inverse(q * q);
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m) {
            for (int i = 1; i <= n; ++i) {
                std::ostringstream key;
                key << "pdee/" << k << "," << m << " d_" << i;
                s.add(key.str(), [=, &s]() -> std::string {
                    Element lhs = s.bc.derive(s.gen.u(k, m), i, DerivVariant::d);
                    Element rhs;
                    if (i == fold_index(n, k))
                        rhs = k == m ? Element::unit(n) : lead * s.gen.tau(k) * s.gen.u(k + 1, m);
                    return s.expect_equal(lhs, rhs, "pdee");
                });
                std::ostringstream key2;
                key2 << "pdu/" << k << "," << m << " d*_" << i;
                s.add(key2.str(), [=, &s]() -> std::string {
                    Element lhs = s.bc.derive(s.gen.u(k, m), i, DerivVariant::d_star);
                    Element rhs;
                    if (i == fold_index(n, m))
                        rhs = k == m ? Element::unit(n) : lead * s.gen.tau(m - 1) * s.gen.u(k, m - 1);
                    return s.expect_equal(lhs, rhs, "pdu");
                });
            }
            s.add("co/" + std::to_string(k) + "," + std::to_string(m), [=, &s]() -> std::string {
                Element u = s.gen.u(k, m);
                TensorElement lhs = coproduct(s.sp, u);
                TensorElement rhs = TensorElement::of(u, Element::unit(n));
                rhs += TensorElement::of(Element::group(GroupElement::g_range(n, k, m)), u);
                for (int i = k; i <= m - 1; ++i) {
                    Element left = multiply(s.sp, Element::group(GroupElement::g_range(n, k, i)),
                                            s.gen.u(i + 1, m));
                    rhs += s.gen.tau(i) * lead * TensorElement::of(left, s.gen.u(k, i));
                }
                if (!s.bc.tensor_equals(lhs, rhs)) return "co: coproduct formula mismatch";
                return "";
            });
            using Cg = BorelContext::Congruence;
            s.add("calc/u[" + std::to_string(k) + "," + std::to_string(m) + "]", [=, &s]() -> std::string {
                if (!s.bc.check_coproduct_congruence(s.gen.u(k, m), Cg::direct).pass)
                    return "calc failed";
                if (!s.bc.check_coproduct_congruence(s.gen.u(k, m), Cg::dual).pass)
                    return "calcdu failed";
                if (!s.bc.check_coproduct_congruence(s.gen.u(k, m, -1), Cg::direct_neg).pass)
                    return "calc1 failed";
                if (!s.bc.check_coproduct_congruence(s.gen.u(k, m, -1), Cg::dual_neg).pass)
                    return "dum2 failed";
                return "";
            });
        }
    // adjoint forms on all words of degree <= 4
    std::vector<Word> words{{}};
    for (int d = 0; d < 4; ++d) {
        std::vector<Word> next;
        for (const auto& w : words)
            for (int i = 1; i <= n; ++i) {
                Word e = w;
                e.push_back(i);
                next.push_back(e);
            }
        for (const auto& w : next) {
            std::string wkey;
            for (int l : w) wkey += std::to_string(l);
            for (int i = 1; i <= n; ++i) {
                s.add("sqi4/" + wkey + " i=" + std::to_string(i), [=, &s]() -> std::string {
                    if (!s.bc.check_adjoint(s.word_elem(w, +1), i).pass) return "sqi4 failed";
                    return "";
                });
                s.add("sqi3/" + wkey + " i=" + std::to_string(i), [=, &s]() -> std::string {
                    if (!s.bc.check_adjoint(s.word_elem(w, -1), i).pass) return "sqi3 failed";
                    return "";
                });
            }
            if (static_cast<int>(w.size()) <= 3) {
                using Cg = BorelContext::Congruence;
                s.add("calc/word " + wkey, [=, &s]() -> std::string {
                    if (!s.bc.check_coproduct_congruence(s.word_elem(w, +1), Cg::direct).pass)
                        return "calc failed";
                    if (!s.bc.check_coproduct_congruence(s.word_elem(w, +1), Cg::dual).pass)
                        return "calcdu failed";
                    if (!s.bc.check_coproduct_congruence(s.word_elem(w, -1), Cg::direct_neg).pass)
                        return "calc1 failed";
                    if (!s.bc.check_coproduct_congruence(s.word_elem(w, -1), Cg::dual_neg).pass)
                        return "dum2 failed";
                    return "";
                });
            }
        }
        words = std::move(next);
    }
}

/// kom1, kom2 and the avoidance corollary ruk3.
inline void single_letter_brackets(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    for (int k = 1; k <= N; ++k)
        for (int m = k + 1; m <= N; ++m)
            for (int i = 1; i <= n; ++i) {
                std::ostringstream key;
                key << "kom1 [" << k << "," << m << "] i=" << i;
                s.add(key.str(), [=, &s]() -> std::string {
                    Element lhs = bracket(s.sp, s.gen.u(k, m), s.x(i, -1));
                    bool at_k = i == fold_index(n, k), at_m = i == fold_index(n, m);
                    if (!at_k && !at_m) return s.expect_zero(lhs, "kom1 zero case");
                    if (m == psi(n, k)) return "";  // lemma leaves this open
                    if (at_k) {
                        Element rhs = multiply(s.sp, Element::group(GroupElement::h_i(n, k)),
                                               s.gen.u(k + 1, m));
                        return s.expect_proportional(lhs, rhs, "kom1 head case");
                    }
                    return s.expect_proportional(lhs, s.gen.u(k, m - 1), "kom1 tail case");
                });
                std::ostringstream key2;
                key2 << "kom2 [" << k << "," << m << "]^- x_" << i;
                s.add(key2.str(), [=, &s]() -> std::string {
                    Element lhs = bracket(s.sp, s.x(i), s.gen.u(k, m, -1));
                    bool at_k = i == fold_index(n, k), at_m = i == fold_index(n, m);
                    if (!at_k && !at_m) return s.expect_zero(lhs, "kom2 zero case");
                    if (m == psi(n, k)) return "";
                    if (at_k) {
                        Element rhs = multiply(s.sp, Element::group(GroupElement::h_i(n, k)),
                                               s.gen.u(k + 1, m, -1));
                        return s.expect_proportional(lhs, rhs, "kom2 head case");
                    }
                    return s.expect_proportional(lhs, s.gen.u(k, m - 1, -1), "kom2 tail case");
                });
            }
    // ruk3
    auto outside = [&](int a, int lo, int hi) { return a < lo || a > hi; };
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m)
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j) {
                    bool first = outside(k, i, j) && outside(m, i, j) && outside(psi(n, k), i, j) &&
                                 outside(psi(n, m), i, j);
                    bool second = outside(i, k, m) && outside(j, k, m) && outside(psi(n, i), k, m) &&
                                  outside(psi(n, j), k, m);
                    if (!first && !second) continue;
                    std::ostringstream key;
                    key << "ruk3 [" << k << "," << m << "][" << i << "," << j << "]-";
                    s.add(key.str(), [=, &s] {
                        return s.expect_zero(bracket(s.sp, s.gen.u(k, m), s.gen.u(i, j, -1)), "ruk3");
                    });
                }
}

/// Propositions ruk4 and ruk5.
inline void vanishing(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    auto outside = [&](int a, int lo, int hi) { return a < lo || a > hi; };
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m)
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j) {
                    if (i == k || j == m) continue;
                    bool r4 = outside(psi(n, m), i, j) && outside(psi(n, k), i, j);
                    bool r5 = outside(psi(n, j), k, m) && outside(psi(n, i), k, m);
                    if (!r4 && !r5) continue;
                    std::ostringstream key;
                    key << (r4 ? "ruk4" : "ruk5") << " [" << k << "," << m << "][" << i << "," << j
                        << "]-";
                    s.add(key.str(), [=, &s] {
                        return s.expect_zero(bracket(s.sp, s.gen.u(k, m), s.gen.u(i, j, -1)),
                                             r4 ? "ruk4" : "ruk5");
                    });
                }
}

namespace detail_sets {
inline std::vector<std::set<int>> subsets(int k, int m) {
    std::vector<int> base;
    for (int e = k; e < m; ++e) base.push_back(e);
    std::vector<std::set<int>> out;
    for (std::uint32_t mask = 0; mask < (1u << base.size()); ++mask) {
        std::set<int> sset;
        for (size_t b = 0; b < base.size(); ++b)
            if (mask & (1u << b)) sset.insert(base[b]);
        out.push_back(std::move(sset));
    }
    return out;
}
}  // namespace detail_sets

/// Theorem des1 (with Corollary dus1 as the S = [k,m) mirror check) and the
/// cross-commutation formula of Proposition fkk1.
inline void cross_values(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m) {
            if (m != psi(n, k)) {
                s.add("dus1 [" + std::to_string(k) + "," + std::to_string(m) + "]", [=, &s]() -> std::string {
                    Element lhs = bracket(s.sp, s.gen.u(k, m), s.gen.u(psi(n, m), psi(n, k), -1));
                    Element rhs = Element::unit(n) - Element::group(GroupElement::h_range(n, k, m));
                    return s.expect_proportional(lhs, rhs, "dus1");
                });
            }
            for (const auto& S : detail_sets::subsets(k, m)) {
                if (!is_regular(n, k, m, S, Color::white) && !is_regular(n, k, m, S, Color::black))
                    continue;
                std::ostringstream key;
                key << "des1 [" << k << "," << m << "] S={";
                for (int e : S) key << e << " ";
                key << "}";
                s.add(key.str(), [=, &s]() -> std::string {
                    std::set<int> comp;
                    for (int e = k; e < m; ++e)
                        if (!S.count(e)) comp.insert(e);
                    Element lhs = bracket(s.sp, s.gen.phi(k, m, S), s.gen.phi(k, m, comp, -1));
                    Element rhs = Element::unit(n) - Element::group(GroupElement::h_range(n, k, m));
                    return s.expect_proportional(lhs, rhs, "des1");
                });
            }
        }
    // fkk1 / (wff1)
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m)
            for (int i = 1; i <= N; ++i)
                for (int j = i; j <= N; ++j) {
                    if (i == k || j == m) continue;
                    if (!(psi(n, j) <= k && k <= psi(n, i) && psi(n, i) <= m)) continue;
                    if (psi(n, m) == i && psi(n, k) == j) continue;
                    std::ostringstream key;
                    key << "fkk1 [" << k << "," << m << "][" << i << "," << j << "]-";
                    s.add(key.str(), [=, &s]() -> std::string {
                        Element lhs = bracket(s.sp, s.gen.u(k, m), s.gen.u(i, j, -1));
                        Element rhs = Element::group(GroupElement::h_range(n, k, psi(n, i)));
                        if (psi(n, k) + 1 <= j) rhs = multiply(s.sp, rhs, s.gen.u(psi(n, k) + 1, j, -1));
                        if (psi(n, i) + 1 <= m) rhs = multiply(s.sp, rhs, s.gen.u(psi(n, i) + 1, m));
                        return s.expect_proportional(lhs, rhs, "wff1");
                    });
                }
}

/// Theorem str: regular pairs whose ST and ST* overlays are strong have
/// vanishing bracket.
inline void strong_schemes(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    long found = 0;
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m)
            for (const auto& S : detail_sets::subsets(k, m)) {
                Scheme pos(n, k, m, S, +1);
                if (!is_regular(pos)) continue;
                for (int i = 1; i <= N; ++i)
                    for (int j = i; j <= N; ++j)
                        for (const auto& T : detail_sets::subsets(i, j)) {
                            Scheme neg(n, i, j, T, -1);
                            if (!is_regular(neg)) continue;
                            if (!is_strong(overlay_columns(pos, neg, OverlayVariant::ST))) continue;
                            if (!is_strong(overlay_columns(pos, neg, OverlayVariant::STs))) continue;
                            ++found;
                            std::ostringstream key;
                            key << "str [" << k << "," << m << "]S" << S.size() << " [" << i << ","
                                << j << "]T" << T.size() << "#" << found;
                            s.add(key.str(), [=, &s] {
                                return s.expect_zero(
                                    bracket(s.sp, s.gen.phi(k, m, S), s.gen.phi(i, j, T, -1)),
                                    "str");
                            });
                        }
            }
}

/// Proposition xn0 and the decompositions desc1/desc2/desc3.
inline void dualities(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m)
            for (const auto& S : detail_sets::subsets(k, m)) {
                Scheme sch(n, k, m, S, +1);
                bool white = is_regular(sch, Color::white), black = is_regular(sch, Color::black);
                std::ostringstream tag;
                tag << "[" << k << "," << m << "]S={";
                for (int e : S) tag << e << " ";
                tag << "}";
                if (white || black) {
                    s.add("xn0 " + tag.str(), [=, &s]() -> std::string {
                        Scheme st = star(sch);
                        return s.expect_proportional(s.gen.phi(k, m, S),
                                                     s.gen.phi(st.k, st.m, st.set), "xn0");
                    });
                    s.add("desc3 " + tag.str(), [=, &s]() -> std::string {
                        Element lhs = multiply(s.sp, Element::group(GroupElement::g_range(n, k, m)),
                                               antipode(s.sp, s.gen.phi(k, m, S)));
                        Scheme pd = psi_dual(sch);
                        std::string e = s.expect_proportional(
                            lhs, s.gen.phi(pd.k, pd.m, pd.set), "desc3 psi-dual");
                        if (!e.empty()) return e;
                        return s.expect_proportional(lhs, s.gen.phi(k, m, complement_dual(sch).set),
                                                     "desc3 complement");
                    });
                }
                // desc1: S u {t} white-regular and t not in S, or S black-regular
                // and t not in S \ {n}
                for (int t = k; t < m; ++t) {
                    std::set<int> St = S;
                    St.insert(t);
                    bool c1 = !S.count(t) && is_regular(n, k, m, St, Color::white);
                    bool c2 = black && (!S.count(t) || t == n);
                    if (c1 || c2)
                        s.add("desc1 " + tag.str() + " t=" + std::to_string(t), [=, &s]() -> std::string {
                            Element rhs = bracket(s.sp, s.gen.phi(k, t, S), s.gen.phi(1 + t, m, S));
                            return s.expect_proportional(s.gen.phi(k, m, S), rhs, "desc1");
                        });
                }
                // desc2: S white-regular and t in S u {n}, or S \ {t}
                // black-regular and t in S
                for (int t = k; t < m; ++t) {
                    std::set<int> St = S;
                    St.erase(t);
                    bool c1 = white && (S.count(t) || t == n);
                    bool c2 = S.count(t) && is_regular(n, k, m, St, Color::black);
                    if (c1 || c2)
                        s.add("desc2 " + tag.str() + " s=" + std::to_string(t), [=, &s]() -> std::string {
                            Element rhs = bracket(s.sp, s.gen.phi(1 + t, m, S), s.gen.phi(k, t, S));
                            return s.expect_proportional(s.gen.phi(k, m, S), rhs, "desc2");
                        });
                }
            }
}

/// Sigma-monoid statements: simple roots, membership by integrability, the
/// lattice monotonicity, and differential closedness.
inline void coideal_roots(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m)
            for (const auto& S : detail_sets::subsets(k, m)) {
                Scheme sch(n, k, m, S, +1);
                bool white = is_regular(sch, Color::white), black = is_regular(sch, Color::black);
                if (!white && !black) continue;
                std::ostringstream tag;
                tag << "[" << k << "," << m << "]S={";
                for (int e : S) tag << e << " ";
                tag << "}";
                s.add("sig " + tag.str(), [=, &s]() -> std::string {
                    SigmaMonoid mon = sigma_generators(sch);
                    // the generator's own degree is a member
                    if (!mon.member(Degree::interval(n, k, m).pos)) return "sig: [k:m] not a member";
                    // letters belong iff their degree does (late1 at degree 1)
                    for (int i = 1; i <= n; ++i) {
                        std::vector<int> e(static_cast<size_t>(n), 0);
                        e[static_cast<size_t>(i) - 1] = 1;
                        if (s.bc.integrability_check(mon, s.x(i)) != mon.member(e))
                            return "late1: letter membership mismatch";
                    }
                    // lat: enlarging the generator set never shrinks membership
                    SigmaMonoid bigger = mon;
                    std::vector<int> extra(static_cast<size_t>(n), 0);
                    extra[0] = 1;
                    bigger.add_generator(extra);
                    std::vector<int> gamma(static_cast<size_t>(n), 0);
                    for (;;) {
                        int i = 0;
                        while (i < n && gamma[static_cast<size_t>(i)] == 2) gamma[static_cast<size_t>(i++)] = 0;
                        if (i == n) break;
                        gamma[static_cast<size_t>(i)] += 1;
                        if (mon.member(gamma) && !bigger.member(gamma))
                            return "lat: membership shrank under a larger generator set";
                    }
                    return "";
                });
                for (int t = k - 1; t <= m; ++t) {
                    if (sch.black(t)) continue;
                    for (int b = t + 1; b <= m; ++b) {
                        if (!sch.black(b)) continue;
                        bool sig1_ok = white && !(sch.has_point(psi(n, 1 + t)) && sch.black(psi(n, 1 + t)));
                        bool sig2_ok = black && !(sch.has_point(psi(n, 1 + b)) && !sch.black(psi(n, 1 + b)));
                        bool sig3_ok = !(t < n && n < b);
                        if (!sig1_ok && !sig2_ok && !sig3_ok) continue;
                        std::ostringstream key;
                        key << "sig123 " << tag.str() << " t=" << t << " s=" << b;
                        s.add(key.str(), [=, &s]() -> std::string {
                            SigmaMonoid mon = sigma_generators(sch);
                            if (sig1_ok || sig2_ok) {
                                if (!mon.indecomposable(Degree::interval(n, 1 + t, b).pos))
                                    return "sig1/sig2: [1+t:s] decomposable";
                            }
                            Element f = s.gen.phi(1 + t, b, S);
                            if (!s.bc.integrability_check(mon, f))
                                return "sig3: Phi^S(1+t,s) fails the membership criterion";
                            // lat2: its derivatives stay inside
                            for (int i = 1; i <= n; ++i) {
                                Element df = s.bc.derive(s.bc.reduce(f, Side::positive), i, DerivVariant::d);
                                if (!s.bc.integrability_check(mon, df))
                                    return "lat2: derivative escaped the subalgebra";
                            }
                            return "";
                        });
                    }
                }
            }
}

/// Lemma ed/(but1), Lemma ed1/(but), the summation identities (zz2)/(zz3),
/// and the projection statement of Lemma xic.
inline void ladder(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    // ed
    for (int k = 1; k <= n; ++k)
        for (int b = k; b < n; ++b)
            for (const auto& S : detail_sets::subsets(k, n)) {
                if (!S.count(b)) continue;
                std::ostringstream key;
                key << "ed [" << k << "," << n << "] s=" << b << " S={";
                for (int e : S) key << e << " ";
                key << "}";
                s.add(key.str(), [=, &s]() -> std::string {
                    std::set<int> comp;
                    for (int e = k; e < b; ++e)
                        if (!S.count(e)) comp.insert(e);
                    Element lhs = bracket(s.sp, s.gen.phi(k, n, S), s.gen.phi(k, b, comp, -1));
                    return s.expect_proportional(lhs, s.gen.phi(1 + b, n, S), "ed");
                });
            }
    // ed1 on scheme pairs with one black-black column and white-white lead
    for (int m = 2; m <= n; ++m)
        for (int k = 1; k <= m; ++k)
            for (int i = 1; i <= m; ++i) {
                if (i == k) continue;
                for (const auto& S : detail_sets::subsets(k, m))
                    for (const auto& T : detail_sets::subsets(i, m)) {
                        Scheme ps(n, k, m, S, +1), ts(n, i, m, T, -1);
                        auto cols = overlay_columns(ps, ts, OverlayVariant::ST);
                        bool ok = true;
                        const OverlayColumn* firstc = nullptr;
                        for (const auto& c : cols) {
                            if (!c.complete()) continue;
                            if (!firstc) firstc = &c;
                            bool bb = *c.top == Color::black && *c.bottom == Color::black;
                            if (bb && c.label != m) ok = false;
                        }
                        if (!firstc || !(*firstc->top == Color::white && *firstc->bottom == Color::white))
                            ok = false;
                        if (!ok) continue;
                        std::ostringstream key;
                        key << "ed1 [" << k << "|" << i << "," << m << "] S" << S.size() << "T"
                            << T.size();
                        for (int e : S) key << "s" << e;
                        for (int e : T) key << "t" << e;
                        int nu = std::max(i, k);
                        s.add(key.str(), [=, &s]() -> std::string {
                            Element lhs = bracket(s.sp, s.gen.phi(k, m, S), s.gen.phi(i, m, T, -1));
                            std::vector<Element> basis;
                            std::vector<bool> ww;
                            for (int b = nu - 1; b <= m - 1; ++b) {
                                Element pb = b >= i ? s.gen.phi(i, b, T, -1) : Element::unit(n);
                                Element qb = b >= k ? s.gen.phi(k, b, S) : Element::unit(n);
                                basis.push_back(multiply(s.sp, pb, qb));
                                Scheme top(n, k, m, S, +1), bot(n, i, m, T, -1);
                                bool w = top.has_point(b) && !top.black(b) && bot.has_point(b) &&
                                         !bot.black(b);
                                ww.push_back(w);
                            }
                            auto sol = s.solve_in_quotient(basis, lhs);
                            if (!sol) return "ed1: bracket is not a combination of the tails";
                            for (size_t t = 0; t < sol->size(); ++t) {
                                if (ww[t] && (*sol)[t] == 0) return "ed1: vanishing on a white-white column";
                                if (!ww[t] && (*sol)[t] != 0) return "ed1: nonzero off white-white columns";
                            }
                            return "";
                        });
                    }
            }
    // zz2
    for (int i = 1; i <= n; ++i)
        for (int k = i + 1; k <= n; ++k)
            for (int t = k; t <= n; ++t) {
                std::ostringstream key;
                key << "zz2 i=" << i << " k=" << k << " t=" << t;
                s.add(key.str(), [=, &s]() -> std::string {
                    Element lhs = bracket(s.sp, s.gen.u(k, t), s.gen.u(i, t, -1));
                    std::vector<Element> basis;
                    for (int b = k - 1; b <= t - 1; ++b) {
                        Element nb = b >= i ? s.gen.u(i, b, -1) : Element::unit(n);
                        Element pb = b >= k ? s.gen.u(k, b) : Element::unit(n);
                        basis.push_back(multiply(s.sp, nb, pb));
                    }
                    auto sol = s.solve_in_quotient(basis, lhs);
                    if (!sol) return "zz2: expansion failed";
                    for (const auto& a : *sol)
                        if (a == 0) return "zz2: vanishing coefficient";
                    return "";
                });
            }
    // zz3
    for (int t = n + 1; t <= N; ++t)
        for (int m = t; m <= N; ++m)
            for (int j = t; j <= N; ++j) {
                if (m == j) continue;
                int mu = std::min(m, j);
                std::ostringstream key;
                key << "zz3 t=" << t << " m=" << m << " j=" << j;
                s.add(key.str(), [=, &s]() -> std::string {
                    Element lhs = bracket(s.sp, s.gen.u(t, m), s.gen.u(t, j, -1));
                    std::vector<Element> basis;
                    for (int a = t + 1; a <= mu + 1; ++a) {
                        Element e = Element::group(GroupElement::h_range(n, t, a - 1));
                        if (a <= j) e = multiply(s.sp, e, s.gen.u(a, j, -1));
                        if (a <= m) e = multiply(s.sp, e, s.gen.u(a, m));
                        basis.push_back(e);
                    }
                    auto sol = s.solve_in_quotient(basis, lhs);
                    if (!sol) return "zz3: expansion failed";
                    for (const auto& a : *sol)
                        if (a == 0) return "zz3: vanishing coefficient";
                    return "";
                });
            }
    // xic
    for (int k = 1; k <= n; ++k)
        for (int m = n + 1; m <= N; ++m)
            for (const auto& S : detail_sets::subsets(k, m)) {
                if (!is_regular(n, k, m, S, Color::black)) continue;
                std::ostringstream key;
                key << "xic [" << k << "," << m << "] S={";
                for (int e : S) key << e << " ";
                key << "}";
                s.add(key.str(), [=, &s]() -> std::string {
                    std::set<int> comp;
                    for (int e = k; e < n; ++e)
                        if (!S.count(e)) comp.insert(e);
                    Element br = bracket(s.sp, s.gen.phi(k, m, S), s.gen.phi(k, n, comp, -1));
                    Element proj = project_positive(br);
                    Element red = s.bc.reduce(proj, Side::positive);
                    if (red.is_zero()) return "xic: projection vanished";
                    Degree expect = Degree::interval(n, n + 1, m);
                    for (const auto& [t, c] : red.terms())
                        if (!(t.degree(n) == expect)) return "xic: wrong degree";
                    return "";
                });
            }
}

/// Root-sequence counts and the |W|^2 pair bound, with the documented
/// out-of-scope exclusions.
inline void counts(detail::Session& s) {
    const int n = s.n();
    s.add("root-count n=" + std::to_string(n), [=]() -> std::string {
        long expect = 1;
        for (int i = 1; i <= n; ++i) expect *= 2 * n - 2 * i + 2;
        if (count_root_sequences(n) != expect) return "count formula mismatch";
        long seen = 0;
        enumerate_root_sequences(n, [&](const std::vector<int>&) { ++seen; });
        if (seen != expect) return "enumeration disagrees with the count";
        return "";
    });
    s.add("pair-count n=" + std::to_string(n), [=]() -> std::string {
        long c = count_root_sequences(n);
        long pairs = c * c;
        if (n == 2 && pairs != 64) return "pair count at n=2 must be 64";
        if (n == 1 && pairs != 4) return "pair count at n=1 must be 4";
        if (n == 3 && pairs != 2304) return "pair count at n=3 must be 2304";
        return "";
    });
}

/// Consistency of the combinatorial checker itself: regularity census against
/// the shifted-scheme oracle, the dop/dop1/si/si1 lemmas, and the rho
/// invariance of the pair verdicts.
inline void checker_consistency(detail::Session& s) {
    const int n = s.n();
    const int N = 2 * n;
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m) {
            std::ostringstream key;
            key << "census [" << k << "," << m << "]";
            s.add(key.str(), [=]() -> std::string {
                for (const auto& S : detail_sets::subsets(k, m)) {
                    Scheme sch(n, k, m, S);
                    for (Color c : {Color::white, Color::black}) {
                        if (is_regular(sch, c) != is_regular_shifted_oracle(sch, c))
                            return "census: quantifier form disagrees with the shifted oracle";
                    }
                    Scheme comp = complement_dual(sch);
                    if (is_regular(sch, Color::white) != is_regular(comp, Color::black))
                        return "dop violated";
                    Scheme pd = psi_dual(sch);
                    if (is_regular(sch, Color::white) != is_regular(pd, Color::white) ||
                        is_regular(sch, Color::black) != is_regular(pd, Color::black))
                        return "dop1 violated";
                    if (star(star(sch)) != sch) return "star not involutive";
                }
                return "";
            });
        }
    // si / si1
    for (int k = 1; k <= N; ++k)
        for (int m = k; m <= N; ++m) {
            std::ostringstream key;
            key << "si/si1 [" << k << "," << m << "]";
            s.add(key.str(), [=]() -> std::string {
                for (const auto& S : detail_sets::subsets(k, m)) {
                    Scheme sch(n, k, m, S);
                    if (is_regular(sch, Color::white)) {
                        for (int b = k; b <= m; ++b) {
                            if (!sch.black(b)) continue;
                            for (int t = k - 1; t < b; ++t) {
                                bool sub = is_regular(n, 1 + t, b, S, Color::white);
                                int pt = psi(n, t) - 1;
                                bool cond =
                                    (sch.has_point(pt) && !sch.black(pt)) || !(t <= pt && pt <= b);
                                if (sub != cond) return "si violated";
                            }
                        }
                    }
                    if (is_regular(sch, Color::black)) {
                        for (int t = k - 1; t <= m; ++t) {
                            if (sch.black(t)) continue;
                            for (int b = t + 1; b <= m; ++b) {
                                bool sub = is_regular(n, 1 + t, b, S, Color::black);
                                int pb = psi(n, b) - 1;
                                bool cond =
                                    (sch.has_point(pb) && sch.black(pb)) || !(t <= pb && pb <= b);
                                if (sub != cond) return "si1 violated";
                            }
                        }
                    }
                }
                return "";
            });
        }
    // bal2 on random regular pairs
    std::mt19937_64 rng(s.options.seed * 31 + 7);
    long done = 0;
    while (done < 1000) {
        int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(N));
        int m = k + static_cast<int>(rng() % static_cast<unsigned>(N - k + 1));
        int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(N));
        int j = i + static_cast<int>(rng() % static_cast<unsigned>(N - i + 1));
        std::set<int> S, T;
        for (int e = k; e < m; ++e)
            if (rng() % 2) S.insert(e);
        for (int e = i; e < j; ++e)
            if (rng() % 2) T.insert(e);
        Scheme pos(n, k, m, S, +1), neg(n, i, j, T, -1);
        if (!is_regular(pos) || !is_regular(neg)) continue;
        ++done;
        s.add("bal2 #" + std::to_string(done), [=]() -> std::string {
            auto v = bale_check(pos, neg);
            auto ca = overlay_columns(pos, neg, OverlayVariant::ST);
            auto cb = overlay_columns(pos, neg, OverlayVariant::SsTs);
            if (is_balanced(ca) != is_balanced(cb) || has_gra3_form(ca) != has_gra3_form(cb))
                return "bal2: ST vs S*T* differ";
            auto cc = overlay_columns(pos, neg, OverlayVariant::STs);
            auto cd = overlay_columns(pos, neg, OverlayVariant::SsT);
            if (is_balanced(cc) != is_balanced(cd) || has_gra3_form(cc) != has_gra3_form(cd))
                return "bal2: ST* vs S*T differ";
            if (bale_check(star(pos), neg).passes != v.passes) return "bal2: star(pos) changed verdict";
            if (bale_check(pos, star(neg)).passes != v.passes) return "bal2: star(neg) changed verdict";
            return "";
        });
    }
}

}  // namespace suites

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "bracket_identities", "mixed_pairings",  "borel_basics", "derivative_tables",
        "single_letter_brackets", "vanishing",   "cross_values", "strong_schemes",
        "dualities",          "coideal_roots",   "ladder",       "counts",
        "checker_consistency"};
    return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteOptions& options) {
    static const std::map<std::string, SuiteBuilder> builders = {
        {"bracket_identities", suites::bracket_identities},
        {"mixed_pairings", suites::mixed_pairings},
        {"borel_basics", suites::borel_basics},
        {"derivative_tables", suites::derivative_tables},
        {"single_letter_brackets", suites::single_letter_brackets},
        {"vanishing", suites::vanishing},
        {"cross_values", suites::cross_values},
        {"strong_schemes", suites::strong_schemes},
        {"dualities", suites::dualities},
        {"coideal_roots", suites::coideal_roots},
        {"ladder", suites::ladder},
        {"counts", suites::counts},
        {"checker_consistency", suites::checker_consistency},
    };
    auto it = builders.find(name);
    if (it == builders.end()) throw std::invalid_argument("unknown suite: " + name);
    SuiteReport rep;
    rep.suite = name;
    bool parameter_free = name == "counts" || name == "checker_consistency";
    SuiteOptions opt = options;
    if (parameter_free) {
        opt.specializations = 1;
        rep.notes.push_back("combinatorial suite: parameter-independent, single run");
    }
    if (name == "counts") {
        rep.notes.push_back(
            "out of scope by design: the A_n pair-count table (C_n, p_n) relies on externally "
            "computed data and is not reproduced");
        rep.notes.push_back(
            "out of scope by design: end-to-end subalgebra-closure testing of the necessary "
            "condition needs the external root-sequence-to-generators construction; the suite "
            "verifies the ingredient lemmas and the checker's invariances instead");
    }
    auto t0 = std::chrono::steady_clock::now();
    for (const ParamSpec& sp : detail::specializations(opt)) {
        detail::Session session(sp, opt, detail::fingerprint_of(sp));
        it->second(session);
        session.run_into(rep);
    }
    rep.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    std::sort(rep.failures.begin(), rep.failures.end(),
              [](const CaseFailure& a, const CaseFailure& b) { return a.key < b.key; });
    return rep;
}

}  // namespace qbn
