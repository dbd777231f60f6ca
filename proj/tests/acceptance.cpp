// Acceptance suite: one criterion per line, pass/fail, exact arithmetic
// throughout (all identities are verified by exact equality or exact
// proportionality after reduction; there are no tolerances to tune). Each
// criterion also carries a wall-clock budget, which is enforced.

#include <chrono>
#include <cstring>
#include <iostream>
#include <sstream>

#include "qbn/verify.hpp"

using namespace qbn;

namespace {

int g_failures = 0;

struct Criterion {
    std::string name;
    double budget_seconds;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    std::vector<std::string> problems;

    Criterion(std::string n, double budget) : name(std::move(n)), budget_seconds(budget) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void absorb(const SuiteReport& rep, const std::string& label) {
        if (!rep.pass()) {
            std::ostringstream os;
            os << label << ": " << rep.failures.size() << " failures, first: "
               << rep.failures.front().key << " -> " << rep.failures.front().detail;
            problems.push_back(os.str());
        }
        if (rep.skipped > 0)
            problems.push_back(label + ": " + std::to_string(rep.skipped) +
                               " cases skipped (degree budget)");
    }
    /// Every listed identity family must have actually generated cases.
    void require_tags(const SuiteReport& rep, const std::vector<std::string>& tags,
                      const std::string& label) {
        for (const auto& t : tags) {
            auto it = rep.tag_counts.find(t);
            if (it == rep.tag_counts.end() || it->second == 0)
                problems.push_back(label + ": no cases ran for '" + t + "'");
        }
    }
    ~Criterion() {
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > budget_seconds) {
            std::ostringstream os;
            os << "exceeded the " << budget_seconds << " s budget";
            problems.push_back(os.str());
        }
        bool ok = problems.empty();
        if (!ok) ++g_failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "  (" << secs << " s)\n";
        for (const auto& p : problems) std::cout << "        " << p << "\n";
        std::cout.flush();
    }
};

SuiteOptions options(int n, long trials = 500, int jobs = 8) {
    SuiteOptions opt;
    opt.n = n;
    opt.seed = 1;
    opt.trials = trials;
    opt.jobs = jobs;
    opt.specializations = 3;
    return opt;
}

}  // namespace

int main() {
    std::cout << "acceptance suite: exact-arithmetic verification of U_q(so_{2n+1})\n";

    {  // 1. parameter constraints for n = 1..4
        Criterion c("1. parameter-constraint suite (n = 1..4, 3 specializations)", 1.0);
        for (int n = 1; n <= 4; ++n) {
            int spec_idx = 0;
            for (const Scalar& q : {Scalar(2), Scalar(3), Scalar(5, 3)}) {
                ParamSpec sp = ParamSpec::make(n, q, {}, 1 + 101 * static_cast<unsigned>(spec_idx++));
                try {
                    sp.validate();
                } catch (const std::exception& e) {
                    c.require(false, std::string("validate threw: ") + e.what());
                    continue;
                }
                Scalar q2 = q * q;
                c.require(sp.p(n, n) == q, "p_nn != q");
                for (int i = 1; i < n; ++i) {
                    c.require(sp.p(i, i) == q2, "p_ii != q^2");
                    c.require(sp.p(i, i + 1) * sp.p(i + 1, i) == scalar_inverse(q2),
                              "p_{i,i+1} p_{i+1,i} != q^-2");
                }
                for (int i = 1; i <= n; ++i)
                    for (int j = i + 2; j <= n; ++j)
                        c.require(sp.p(i, j) * sp.p(j, i) == 1, "p_ij p_ji != 1, j > i+1");
            }
        }
        for (const Scalar& bad : {Scalar(0), Scalar(1), Scalar(-1)}) {
            try {
                ParamSpec::make(2, bad);
                c.require(false, "forbidden q accepted");
            } catch (const std::invalid_argument&) {
            }
        }
        try {
            ParamSpec::make(2, 2, {{{1, 2}, Scalar(0)}});
            c.require(false, "zero free entry accepted");
        } catch (const std::invalid_argument&) {
        }
    }

    {  // 2. bracket-identity property suite
        Criterion c("2. bracket identities on >= 500 random homogeneous triples (n = 2)", 30.0);
        SuiteOptions opt = options(2, 200);  // 200 triples x 3 specializations
        auto rep = run_suite("bracket_identities", opt);
        c.absorb(rep, "bracket_identities");
        c.require(rep.cases >= 500, "fewer than 500 cases ran");
        c.require_tags(rep, {"triple", "cond-jak3", "cond-jak4", "cond-br2", "colored", "indle"},
                       "bracket_identities");
    }

    {  // 3. suu1 / suu2
        Criterion c("3. Lemmas suu1 and suu2 for all i != j (n = 2, 3)", 10.0);
        for (int n : {2, 3}) {
            auto rep = run_suite("mixed_pairings", options(n));
            c.absorb(rep, "n=" + std::to_string(n));
            c.require_tags(rep, {"suu", "suu1", "suu2"}, "mixed_pairings");
        }
    }

    {  // 4. sigma/mu closed forms
        Criterion c("4. sigma/mu closed forms equal direct evaluation (n = 2, 3, 4)", 5.0);
        for (int n : {2, 3, 4}) {
            int spec_idx = 0;
            for (const Scalar& q : {Scalar(2), Scalar(3), Scalar(5, 3)}) {
                ParamSpec sp = ParamSpec::make(n, q, {}, 7 + 31 * static_cast<unsigned>(spec_idx++));
                Generators gen(sp);
                for (int k = 1; k <= 2 * n; ++k)
                    for (int m = k; m <= 2 * n; ++m) {
                        if (gen.sigma_direct(k, m) != gen.sigma_closed(k, m))
                            c.require(false, "sigma mismatch at (" + std::to_string(k) + "," +
                                                 std::to_string(m) + ")");
                        for (int i = k; i < m; ++i)
                            if (gen.mu_direct(k, m, i) != gen.mu_closed(k, m, i))
                                c.require(false, "mu mismatch at (" + std::to_string(k) + "," +
                                                     std::to_string(m) + "," + std::to_string(i) + ")");
                    }
            }
        }
    }

    {  // 5. coproduct formula, derivative tables, adjoints
        Criterion c("5. coproduct (co), tables (pdee)/(pdu), adjoints (sqi3)/(sqi4) (n = 2, 3)", 120.0);
        for (int n : {2, 3}) {
            auto rep = run_suite("derivative_tables", options(n));
            c.absorb(rep, "n=" + std::to_string(n));
            c.require_tags(rep, {"pdee", "pdu", "co", "calc", "sqi3", "sqi4"}, "derivative_tables");
        }
    }

    {  // 6. single-letter brackets and basic decompositions
        Criterion c("6. ruk1/ruk2/ruk3 and NU/ins2/rww (n = 2 exhaustive, n = 3 in budget)", 600.0);
        for (int n : {2, 3}) {
            auto kom = run_suite("single_letter_brackets", options(n));
            c.absorb(kom, "kom n=" + std::to_string(n));
            c.require_tags(kom, {"kom1", "kom2", "ruk3"}, "single_letter_brackets");
            auto basics = run_suite("borel_basics", options(n));
            c.absorb(basics, "basics n=" + std::to_string(n));
            c.require_tags(basics, {"NU", "ins2", "rww", "rsc", "too1", "too2"}, "borel_basics");
            if (n == 3) c.require_tags(basics, {"sepp", "too"}, "borel_basics");
        }
    }

    {  // 7. Theorem des1
        Criterion c("7. des1: [Phi^S, Phi^Sbar_-] ~ 1 - h_{k->m} (n = 2 exhaustive, n = 3 >= 200 cases)",
                    600.0);
        // census anchor at n = 2, interval (1,3)
        {
            std::vector<std::set<int>> white, black;
            for (std::uint32_t mask = 0; mask < 4; ++mask) {
                std::set<int> S;
                if (mask & 1) S.insert(1);
                if (mask & 2) S.insert(2);
                if (is_regular(2, 1, 3, S, Color::white)) white.push_back(S);
                if (is_regular(2, 1, 3, S, Color::black)) black.push_back(S);
            }
            c.require(white.size() == 1 && white[0].empty(), "(1,3) white census is exactly {{}}");
            c.require(black.size() == 1 && black[0] == std::set<int>{1, 2},
                      "(1,3) black census is exactly {{1,2}}");
        }
        long des1_cases = 0;
        for (int n : {2, 3}) {
            SuiteOptions opt = options(n);
            // the exhaustive des1 space at n = 3 is 46 regular configurations
            // per specialization; five specializations give >= 200 cases
            if (n == 3) opt.specializations = 5;
            auto rep = run_suite("cross_values", opt);
            for (const auto& f : rep.failures)
                if (f.key.find("des1") != std::string::npos || f.key.find("dus1") != std::string::npos)
                    c.require(false, f.key + " -> " + f.detail);
            if (rep.skipped) c.require(false, "skips in cross_values");
            c.require_tags(rep, {"des1", "dus1"}, "cross_values");
            if (n == 3) {
                for (const ParamSpec& sp : qbn::detail::specializations(opt)) {
                    for (int k = 1; k <= 2 * n; ++k)
                        for (int m = k; m <= 2 * n; ++m)
                            for (std::uint32_t mask = 0; mask < (1u << std::max(0, m - k)); ++mask) {
                                std::set<int> S;
                                for (int b = 0; b < m - k; ++b)
                                    if (mask & (1u << b)) S.insert(k + b);
                                if (is_regular(n, k, m, S, Color::white) ||
                                    is_regular(n, k, m, S, Color::black))
                                    ++des1_cases;
                            }
                    (void)sp;
                }
            }
        }
        c.require(des1_cases >= 200, "fewer than 200 des1 cases at n = 3 (got " +
                                         std::to_string(des1_cases) + ")");
    }

    {  // 8. vanishing propositions and the cross formula
        Criterion c("8. ruk4/ruk5 vanishing and fkk1 (wff1) (n = 2, 3)", 900.0);
        for (int n : {2, 3}) {
            auto van = run_suite("vanishing", options(n));
            c.absorb(van, "vanishing n=" + std::to_string(n));
            c.require_tags(van, {"ruk4", "ruk5"}, "vanishing");
            auto rep = run_suite("cross_values", options(n));
            for (const auto& f : rep.failures)
                if (f.key.find("fkk1") != std::string::npos) c.require(false, f.key + " -> " + f.detail);
            c.require_tags(rep, {"fkk1"}, "cross_values");
        }
    }

    {  // 9. Theorem str
        Criterion c("9. str: strong ST and ST* overlays force a vanishing bracket (n = 2)", 600.0);
        auto rep = run_suite("strong_schemes", options(2));
        c.absorb(rep, "strong_schemes");
        c.require(rep.cases > 0, "no strong pairs found");
    }

    {  // 10. dualities
        Criterion c("10. xn0, desc1/desc2/desc3 dualities (n = 2 exhaustive)", 300.0);
        auto rep = run_suite("dualities", options(2));
        c.absorb(rep, "dualities");
        c.require_tags(rep, {"xn0", "desc1", "desc2", "desc3"}, "dualities");
    }

    {  // 11. ladder identities
        Criterion c("11. ed/(but1), ed1 coefficient pattern, (zz2)/(zz3), xic (n = 2, 3)", 600.0);
        for (int n : {2, 3}) {
            auto rep = run_suite("ladder", options(n));
            c.absorb(rep, "n=" + std::to_string(n));
            c.require_tags(rep, {"ed", "ed1", "zz2", "zz3", "xic"}, "ladder");
        }
    }

    {  // 12. combinatorics
        Criterion c("12. regularity census, dop/dop1/si/si1, bal2 invariance, root counts", 120.0);
        for (int n : {2, 3}) {
            auto rep = run_suite("checker_consistency", options(n));
            c.absorb(rep, "checker n=" + std::to_string(n));
            c.require_tags(rep, {"census", "si/si1", "bal2"}, "checker_consistency");
        }
        for (int n : {1, 2, 3}) c.absorb(run_suite("counts", options(n)), "counts n=" + std::to_string(n));
        c.require(count_root_sequences(1) == 2, "|W(B_1)| = 2");
        c.require(count_root_sequences(2) == 8, "|W(B_2)| = 8");
        c.require(count_root_sequences(3) == 48, "|W(B_3)| = 48");
        c.require(count_root_sequences(2) * count_root_sequences(2) == 64, "pair count 64 at n = 2");
    }

    {  // 13. documented exclusions
        Criterion c("13. out-of-scope items are documented in reports", 5.0);
        auto rep = run_suite("counts", options(2));
        bool has_an = false, has_bale = false;
        for (const auto& note : rep.notes) {
            if (note.find("pair-count table") != std::string::npos) has_an = true;
            if (note.find("subalgebra-closure") != std::string::npos) has_bale = true;
        }
        c.require(has_an, "A_n pair-count exclusion not documented");
        c.require(has_bale, "subalgebra-closure exclusion not documented");
    }

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed\n"
                                  : "acceptance: " + std::to_string(g_failures) + " criteria failed\n");
    return g_failures == 0 ? 0 : 1;
}
