#include <catch2/catch_amalgamated.hpp>

#include "qbn/verify.hpp"

using namespace qbn;

namespace {

SuiteOptions fast_options(int n = 2) {
    SuiteOptions opt;
    opt.n = n;
    opt.seed = 42;
    opt.trials = 40;
    opt.specializations = 1;
    opt.jobs = 2;
    return opt;
}

void expect_pass(const SuiteReport& rep) {
    for (const auto& f : rep.failures) {
        UNSCOPED_INFO(f.key << " -> " << f.detail);
    }
    CHECK(rep.pass());
    CHECK(rep.cases > 0);
}

}  // namespace

TEST_CASE("suite registry") {
    CHECK(suite_names().size() == 13);
    CHECK_THROWS_AS(run_suite("nope", fast_options()), std::invalid_argument);
}

TEST_CASE("bracket_identities at n=2") { expect_pass(run_suite("bracket_identities", fast_options())); }

TEST_CASE("mixed_pairings at n=2") { expect_pass(run_suite("mixed_pairings", fast_options())); }

TEST_CASE("borel_basics at n=2") { expect_pass(run_suite("borel_basics", fast_options())); }

TEST_CASE("derivative_tables at n=2") { expect_pass(run_suite("derivative_tables", fast_options())); }

TEST_CASE("single_letter_brackets at n=2") {
    expect_pass(run_suite("single_letter_brackets", fast_options()));
}

TEST_CASE("vanishing at n=2") { expect_pass(run_suite("vanishing", fast_options())); }

TEST_CASE("cross_values at n=2") { expect_pass(run_suite("cross_values", fast_options())); }

TEST_CASE("strong_schemes at n=2") { expect_pass(run_suite("strong_schemes", fast_options())); }

TEST_CASE("dualities at n=2") { expect_pass(run_suite("dualities", fast_options())); }

TEST_CASE("coideal_roots at n=2") { expect_pass(run_suite("coideal_roots", fast_options())); }

TEST_CASE("ladder at n=2") { expect_pass(run_suite("ladder", fast_options())); }

TEST_CASE("counts") {
    for (int n : {1, 2, 3}) {
        auto rep = run_suite("counts", fast_options(n));
        expect_pass(rep);
        CHECK(rep.notes.size() >= 2);
    }
}

TEST_CASE("checker_consistency at n=2") {
    expect_pass(run_suite("checker_consistency", fast_options()));
}

TEST_CASE("reports are deterministic in spec and seed") {
    SuiteOptions opt = fast_options();
    auto a = run_suite("cross_values", opt);
    auto b = run_suite("cross_values", opt);
    CHECK(a.cases == b.cases);
    CHECK(a.spec_fingerprints == b.spec_fingerprints);
    CHECK(a.failures.size() == b.failures.size());
    CHECK(a.policy == b.policy);
    // worker count must not change the verdicts
    SuiteOptions serial = opt;
    serial.jobs = 1;
    auto c = run_suite("cross_values", serial);
    CHECK(c.cases == a.cases);
    CHECK(c.failures.size() == a.failures.size());
}

TEST_CASE("budget shortfalls surface as skips, not passes") {
    SuiteOptions opt = fast_options();
    opt.max_degree = 2;
    auto rep = run_suite("vanishing", opt);
    CHECK(rep.skipped > 0);
    CHECK(!rep.skips.empty());
}
