#pragma once

// Black/white scheme combinatorics. A scheme is the row of colored points
// labeled k-1 .. m attached to the data (k, m, S): the first point is white,
// the last is black, and an interior point i is black iff i is in S. On top
// of the single schemes live the shifted two-row rendering, the white/black
// regularity predicates, the psi-dual and complement transforms, the four
// overlay diagrams of a positive/negative pair, the balanced / gra3 / strong
// predicates with the pair checker, Sigma-monoid generator extraction, and
// root-sequence enumeration.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "borel.hpp"
#include "grading.hpp"

namespace qbn {

enum class Color { white, black };
enum class RenderStyle { flat, two_line, shifted };
enum class OverlayVariant { ST, STs, SsT, SsTs };

inline const char* variant_name(OverlayVariant v) {
    switch (v) {
        case OverlayVariant::ST: return "ST";
        case OverlayVariant::STs: return "ST*";
        case OverlayVariant::SsT: return "S*T";
        case OverlayVariant::SsTs: return "S*T*";
    }
    return "?";
}

struct Scheme {
    int n = 0;
    int k = 0, m = 0;
    std::set<int> set;  // subset of [k, m)
    int sign = +1;      // +1 positive, -1 negative; bookkeeping only

    Scheme() = default;
    Scheme(int n_, int k_, int m_, std::set<int> s, int sign_ = +1)
        : n(n_), k(k_), m(m_), sign(sign_) {
        if (!(1 <= k && k <= m && m <= 2 * n)) throw IndexError("scheme needs 1 <= k <= m <= 2n");
        for (int e : s)
            if (k <= e && e < m) set.insert(e);  // stored clipped
    }

    bool has_point(int label) const { return k - 1 <= label && label <= m; }
    bool black(int label) const {
        if (!has_point(label)) throw IndexError("label not on the scheme");
        if (label == m) return true;
        if (label == k - 1) return false;
        return set.count(label) > 0;
    }
    bool operator==(const Scheme&) const = default;
};

// -- regularity ---------------------------------------------------------------

/// Definition of white/black (k,m)-regularity, evaluated verbatim. When the
/// interval word has degree <= 1 in x_n (m <= n or k > n), every set is
/// regular of both colors.
inline bool is_regular(int n, int k, int m, const std::set<int>& S, Color color) {
    if (!(1 <= k && k <= m && m <= 2 * n)) throw IndexError("is_regular needs 1 <= k <= m <= 2n");
    if (m <= n || k > n) return true;
    auto in_S = [&](int e) { return k <= e && e < m && S.count(e) > 0; };
    if (color == Color::white) {
        auto in_boundary = [&](int e) { return in_S(e) || e == k - 1 || e == m; };
        for (int i = k - 1; i < m; ++i) {
            int pi = psi(n, i);
            if (!(k <= pi && pi <= m + 1)) continue;
            if (in_boundary(i) && in_boundary(pi - 1)) return false;
        }
        return true;
    }
    auto in_core = [&](int e) { return in_S(e) && e != k - 1 && e != m; };
    for (int i = k; i <= m; ++i) {
        int pi = psi(n, i);
        if (!(k <= pi && pi <= m + 1)) continue;
        if (!in_core(i) && !in_core(pi - 1)) return false;
    }
    return true;
}

inline bool is_regular(const Scheme& s, Color color) { return is_regular(s.n, s.k, s.m, s.set, color); }
inline bool is_regular(const Scheme& s) {
    return is_regular(s, Color::white) || is_regular(s, Color::black);
}

// -- transforms ---------------------------------------------------------------

/// Flip the interior colors: S -> [k,m) \ S.
inline Scheme complement_dual(const Scheme& s) {
    std::set<int> c;
    for (int e = s.k; e < s.m; ++e)
        if (!s.set.count(e)) c.insert(e);
    return Scheme(s.n, s.k, s.m, std::move(c), s.sign);
}

/// The index map S -> psi(S)-1 on the interval (psi(m), psi(k)), no complement.
inline Scheme psi_dual(const Scheme& s) {
    std::set<int> t;
    for (int e : s.set) t.insert(psi(s.n, e) - 1);
    return Scheme(s.n, psi(s.n, s.m), psi(s.n, s.k), std::move(t), s.sign);
}

/// The star transform (k,m,S) -> (psi(m), psi(k), complement of psi(S)-1).
inline Scheme star(const Scheme& s) { return complement_dual(psi_dual(s)); }

// -- renderings ---------------------------------------------------------------

struct ShiftedColumn {
    int bottom_label = 0;  // in [k-1, n] when present
    std::optional<Color> bottom, top;
    int top_label() const { return 0; }  // see shifted_columns
};

/// Columns of the shifted two-row representation. Column a pairs the points
/// labeled a (bottom) and psi(a)-1 (top); a = n pairs with itself and the
/// point n is shown twice. Ordered by a ascending, which is top label
/// descending.
inline std::vector<ShiftedColumn> shifted_columns(const Scheme& s) {
    if (!(s.k <= s.n && s.n < s.m)) throw StyleNotApplicable("shifted form needs k <= n < m");
    std::vector<ShiftedColumn> cols;
    int lo = std::min(s.k - 1, psi(s.n, s.m) - 1);
    for (int a = lo; a <= s.n; ++a) {
        ShiftedColumn col;
        col.bottom_label = a;
        if (s.has_point(a)) col.bottom = s.black(a) ? Color::black : Color::white;
        int t = psi(s.n, a) - 1;
        if (s.has_point(t)) col.top = s.black(t) ? Color::black : Color::white;
        if (col.bottom || col.top) cols.push_back(col);
    }
    return cols;
}

namespace detail {
inline std::string glyph(Color c) { return c == Color::black ? "●" : "∘"; }
}  // namespace detail

inline std::string render(const Scheme& s, RenderStyle style) {
    std::string out;
    if (style == RenderStyle::flat) {
        for (int l = s.k - 1; l <= s.m; ++l) {
            if (!out.empty()) out += ' ';
            out += std::to_string(l) + ":" + detail::glyph(s.black(l) ? Color::black : Color::white);
        }
        return out;
    }
    if (!(s.k <= s.n && s.n < s.m))
        throw StyleNotApplicable("two-line and shifted styles need k <= n < m");
    auto cell = [&](std::optional<int> label, std::optional<Color> c) {
        std::string r = label && c ? std::to_string(*label) + ":" + detail::glyph(*c) : std::string();
        while (r.size() < 8) r += ' ';
        return r;
    };
    std::string top, bottom;
    if (style == RenderStyle::two_line) {
        // column a pairs the points a and psi(a)
        int lo = std::min(s.k - 1, psi(s.n, s.m));
        for (int a = lo; a <= s.n; ++a) {
            bool hb = s.has_point(a);
            int t = psi(s.n, a);
            bool ht = s.has_point(t);
            if (!hb && !ht) continue;
            top += cell(ht ? std::optional<int>(t) : std::nullopt,
                        ht ? std::optional<Color>(s.black(t) ? Color::black : Color::white) : std::nullopt);
            bottom += cell(hb ? std::optional<int>(a) : std::nullopt,
                           hb ? std::optional<Color>(s.black(a) ? Color::black : Color::white) : std::nullopt);
        }
    } else {
        for (const auto& col : shifted_columns(s)) {
            int t = psi(s.n, col.bottom_label) - 1;
            top += cell(col.top ? std::optional<int>(t) : std::nullopt, col.top);
            bottom += cell(col.bottom ? std::optional<int>(col.bottom_label) : std::nullopt, col.bottom);
        }
    }
    while (!top.empty() && top.back() == ' ') top.pop_back();
    while (!bottom.empty() && bottom.back() == ' ') bottom.pop_back();
    return top + "\n" + bottom;
}

/// Shifted-scheme reading of regularity (used as the independent oracle
/// against the quantifier form): white-regular iff painting k-1 black leaves
/// no column with two black points; black-regular iff painting m white
/// leaves no column with two white points.
inline bool is_regular_shifted_oracle(const Scheme& s, Color color) {
    if (s.m <= s.n || s.k > s.n) return true;
    for (const auto& col : shifted_columns(s)) {
        if (!col.bottom || !col.top) continue;
        int b = col.bottom_label, t = psi(s.n, b) - 1;
        auto painted = [&](int label, Color c) {
            if (color == Color::white && label == s.k - 1) return Color::black;
            if (color == Color::black && label == s.m) return Color::white;
            return c;
        };
        Color cb = painted(b, *col.bottom), ct = painted(t, *col.top);
        if (color == Color::white && cb == Color::black && ct == Color::black) return false;
        if (color == Color::black && cb == Color::white && ct == Color::white) return false;
    }
    return true;
}

// -- overlays of a pair --------------------------------------------------------

struct OverlayColumn {
    int label = 0;
    std::optional<Color> top, bottom;
    bool complete() const { return top && bottom; }
};

/// The two rows of an overlay aligned by label: top is the positive scheme
/// (S or S*), bottom the negative one (T or T*).
inline std::vector<OverlayColumn> overlay_columns(const Scheme& pos, const Scheme& neg,
                                                  OverlayVariant variant) {
    Scheme top = (variant == OverlayVariant::SsT || variant == OverlayVariant::SsTs) ? star(pos) : pos;
    Scheme bot = (variant == OverlayVariant::STs || variant == OverlayVariant::SsTs) ? star(neg) : neg;
    std::vector<OverlayColumn> cols;
    int lo = std::min(top.k - 1, bot.k - 1), hi = std::max(top.m, bot.m);
    for (int l = lo; l <= hi; ++l) {
        OverlayColumn col;
        col.label = l;
        if (top.has_point(l)) col.top = top.black(l) ? Color::black : Color::white;
        if (bot.has_point(l)) col.bottom = bot.black(l) ? Color::black : Color::white;
        if (col.top || col.bottom) cols.push_back(col);
    }
    return cols;
}

/// No complete white-white column strictly before a complete black-black one.
inline bool is_balanced(const std::vector<OverlayColumn>& cols) {
    bool seen_ww = false;
    for (const auto& c : cols) {
        if (!c.complete()) continue;
        if (*c.top == Color::white && *c.bottom == Color::white) seen_ww = true;
        else if (seen_ww && *c.top == Color::black && *c.bottom == Color::black) return false;
    }
    return true;
}

/// The exceptional shape of the main theorem: both rows span the same label
/// interval (so the first column is white-white and the last black-black by
/// construction) and every intermediate column is complete with opposite
/// colors.
inline bool has_gra3_form(const std::vector<OverlayColumn>& cols) {
    if (cols.size() < 2) return false;
    // coincident row extents: every column of the overlay is complete
    for (const auto& c : cols)
        if (!c.complete()) return false;
    if (!(*cols.front().top == Color::white && *cols.front().bottom == Color::white)) return false;
    if (!(*cols.back().top == Color::black && *cols.back().bottom == Color::black)) return false;
    for (size_t i = 1; i + 1 < cols.size(); ++i)
        if (*cols[i].top == *cols[i].bottom) return false;
    return true;
}

inline bool is_strongly_white(const std::vector<OverlayColumn>& cols) {
    int complete = 0;
    const OverlayColumn* first_complete = nullptr;
    for (const auto& c : cols) {
        if (!c.complete()) continue;
        ++complete;
        if (!first_complete) first_complete = &c;
        if (*c.top == Color::black && *c.bottom == Color::black) return false;
    }
    if (cols.empty() || cols.front().complete()) return false;
    if (complete >= 2 &&
        !(*first_complete->top == Color::white && *first_complete->bottom == Color::white))
        return false;
    return true;
}

inline bool is_strongly_black(const std::vector<OverlayColumn>& cols) {
    int complete = 0;
    const OverlayColumn* last_complete = nullptr;
    for (const auto& c : cols) {
        if (!c.complete()) continue;
        ++complete;
        last_complete = &c;
        if (*c.top == Color::white && *c.bottom == Color::white) return false;
    }
    if (cols.empty() || cols.back().complete()) return false;
    if (complete >= 2 &&
        !(*last_complete->top == Color::black && *last_complete->bottom == Color::black))
        return false;
    return true;
}

inline bool is_strong(const std::vector<OverlayColumn>& cols) {
    return is_strongly_white(cols) || is_strongly_black(cols);
}

// -- the necessary-condition checker -------------------------------------------

struct BaleVerdict {
    bool passes = false;
    bool all_balanced = false;
    std::optional<OverlayVariant> gra3_witness;
    std::array<bool, 4> balanced{};
    std::array<bool, 4> gra3{};
};

/// Necessary condition for the triangular composition: either all four
/// overlays are balanced, or one of them has the gra3 form. Inputs must be
/// regular (the theorem speaks about regular generators).
inline BaleVerdict bale_check(const Scheme& pos, const Scheme& neg) {
    if (!is_regular(pos)) throw NotRegularError("positive scheme set is not (k,m)-regular");
    if (!is_regular(neg)) throw NotRegularError("negative scheme set is not (i,j)-regular");
    BaleVerdict v;
    v.all_balanced = true;
    constexpr OverlayVariant variants[] = {OverlayVariant::ST, OverlayVariant::STs,
                                           OverlayVariant::SsT, OverlayVariant::SsTs};
    for (int i = 0; i < 4; ++i) {
        auto cols = overlay_columns(pos, neg, variants[i]);
        v.balanced[static_cast<size_t>(i)] = is_balanced(cols);
        v.gra3[static_cast<size_t>(i)] = has_gra3_form(cols);
        if (!v.balanced[static_cast<size_t>(i)]) v.all_balanced = false;
        if (v.gra3[static_cast<size_t>(i)] && !v.gra3_witness) v.gra3_witness = variants[i];
    }
    v.passes = v.all_balanced || v.gra3_witness.has_value();
    return v;
}

// -- roots ---------------------------------------------------------------------

/// Generators of Sigma(U^S(k,m)): folded degrees [1+t : s] over white t and
/// black s on the scheme, t < s.
inline SigmaMonoid sigma_generators(const Scheme& s) {
    SigmaMonoid mon(s.n);
    for (int t = s.k - 1; t <= s.m; ++t) {
        if (s.black(t)) continue;
        for (int b = t + 1; b <= s.m; ++b) {
            if (!s.black(b)) continue;
            mon.add_generator(Degree::interval(s.n, 1 + t, b).pos);
        }
    }
    return mon;
}

/// Root sequences theta with 0 <= theta_i <= 2n-2i+1, lexicographic.
inline void enumerate_root_sequences(int n, const std::function<void(const std::vector<int>&)>& fn) {
    if (n < 1) throw IndexError("rank must be positive");
    std::vector<int> theta(static_cast<size_t>(n), 0);
    for (;;) {
        fn(theta);
        int i = n - 1;
        while (i >= 0 && theta[static_cast<size_t>(i)] == 2 * n - 2 * (i + 1) + 1) --i;
        if (i < 0) return;
        theta[static_cast<size_t>(i)] += 1;
        for (int j = i + 1; j < n; ++j) theta[static_cast<size_t>(j)] = 0;
    }
}

inline long count_root_sequences(int n) {
    if (n < 1) throw IndexError("rank must be positive");
    long c = 1;
    for (int i = 1; i <= n; ++i) c *= 2 * n - 2 * i + 2;
    return c;
}

}  // namespace qbn
