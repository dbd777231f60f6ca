#include <catch2/catch_amalgamated.hpp>

#include "qbn/generators.hpp"
#include "qbn/io.hpp"

using namespace qbn;

TEST_CASE("spec JSON round trip") {
    ParamSpec sp = ParamSpec::make(3, Scalar(5, 3), {{{1, 2}, Scalar(7, 4)}}, 11);
    json j = spec_to_json(sp);
    ParamSpec back = spec_from_json(j);
    CHECK(back.rank() == 3);
    CHECK(back.q() == sp.q());
    for (int i = 1; i <= 3; ++i)
        for (int c = 1; c <= 3; ++c) CHECK(back.p(i, c) == sp.p(i, c));
    // matrices violating the solved constraints are rejected
    json broken = j;
    broken["p"][1][0] = "9";
    CHECK_THROWS_AS(spec_from_json(broken), std::invalid_argument);
}

TEST_CASE("element JSON round trip is the identity on normal forms") {
    ParamSpec sp = ParamSpec::make(2, 2, {{{1, 2}, 3}});
    Generators gen(sp);
    for (const Element& e : {gen.phi(1, 3, {1, 2}), gen.u(1, 4, -1),
                             multiply(sp, gen.u(1, 2), gen.u(1, 2, -1))}) {
        json j = element_to_json(e);
        CHECK(element_from_json(2, j) == e);
    }
    // deterministic order: serializing twice gives identical text
    Element e = gen.phi(1, 3, {1});
    CHECK(element_to_json(e).dump() == element_to_json(e).dump());
}

TEST_CASE("scheme and verdict JSON") {
    Scheme pos(2, 1, 2, {}, +1), neg(2, 3, 4, {}, -1);
    json js = scheme_to_json(pos);
    Scheme back = scheme_from_json(2, js);
    CHECK(back == pos);
    BaleVerdict v = bale_check(pos, neg);
    json jv = bale_to_json(pos, neg, v);
    CHECK(jv.at("passes").get<bool>());
    CHECK(jv.at("gra3_witness").get<std::string>() == "ST*");
    CHECK(jv.at("overlays").contains("S*T*"));
}

TEST_CASE("suite report JSON") {
    SuiteOptions opt;
    opt.n = 2;
    opt.specializations = 1;
    opt.trials = 5;
    SuiteReport rep = run_suite("counts", opt);
    json j = report_to_json(rep);
    CHECK(j.at("pass").get<bool>());
    CHECK(j.at("cases").get<long>() == rep.cases);
    CHECK(j.at("notes").size() >= 2);
}

TEST_CASE("verdict JSON shape") {
    Verdict ok{true, ""};
    CHECK(verdict_to_json(ok).dump() == "{\"pass\":true}");
    Verdict bad{false, "counterexample"};
    json j = verdict_to_json(bad);
    CHECK_FALSE(j.at("pass").get<bool>());
    CHECK(j.at("witness").get<std::string>() == "counterexample");
}
