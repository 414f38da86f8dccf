#include "doctest.h"
#include "hd/suites.hpp"

using namespace hd;

TEST_SUITE("cli") {

TEST_CASE("segment info") {
    auto j = segment_info(Multisegment::parse("[4,5];[2,4];[1,3]"));
    CHECK(j["m_profile_line"] == "m(m,1)=1, m(m,2)=2, m(m,3)=2, m(m,4)=2, m(m,5)=1");
    auto k = segment_info(Multisegment::parse("[5,7];[3,5];[2,4];[1,3]"));
    CHECK_FALSE(k.contains("w"));  // not elliptic
    auto e = segment_info(Multisegment::parse("[0,1];[-1,0]"));
    CHECK(e["w"] == "(1,2)");
    CHECK(e["temp"] == "[-1,1];[0,0]");
}

TEST_CASE("module report") {
    auto j = module_report(Multisegment::parse("[-1,1]"), Rat(1));
    CHECK(j["hd_dim"] == 2);
    CHECK(j["D_zero"] == true);
    CHECK_THROWS_AS(module_report(Multisegment::parse("[0,0]"), Rat(1)), std::invalid_argument);
}

TEST_CASE("bgg report") {
    auto j = bgg_report(Multisegment::parse("[0,1];[-1,0]"));
    REQUIRE(j["terms"].size() == 2);
    CHECK(j["terms"][1]["sign"] == -1);
    CHECK(j["w_character"]["(2,2)"] == 1);
}

TEST_CASE("family strings") {
    CHECK(family_string(Partition({3, 2, 2})) == "W_7(m,m+1,m+2,m-1,m,m-2,m-1)");
    CHECK(family_string(Partition({1})) == "W_1(m)");
    auto rs = build_root_system('C', 2, Rat(17, 10));
    CHECK(family_point(rs, Partition({2}), Rat(17, 20)) == QVec{Rat(17, 20), Rat(37, 20)});
}

TEST_CASE("suites") {
    SweepConfig cfg;
    CHECK(run_suite("paper-examples", cfg).pass);
    CHECK(run_suite("golden", cfg).pass);
    cfg.type = 'C';
    auto tc = run_suite("typec", cfg);
    CHECK(tc.pass);
    CHECK(tc.summary["nonzero_central_characters"].size() <= 2);
    cfg.m = Rat(3, 2);
    CHECK_THROWS_AS(run_suite("typec", cfg), std::invalid_argument);
    CHECK_THROWS_AS(run_suite("no-such-suite", SweepConfig{}), std::invalid_argument);
    SweepConfig big;
    big.l = 9;
    CHECK_THROWS_AS(run_suite("combinatorics", big), std::invalid_argument);
}

TEST_CASE("vanishing sweep at l = 3, window 1") {
    SweepConfig cfg;
    cfg.l = 3;
    cfg.window = 1;
    auto rep = run_suite("vanishing", cfg);
    CHECK(rep.pass);
    CHECK(rep.summary["nonzero"] == 1);
}

TEST_CASE("parallel and serial runs agree") {
    SweepConfig cfg;
    cfg.l = 3;
    cfg.window = 2;
    for (const char* s : {"d2", "vanishing", "kato"}) {
        auto a = run_suite(s, cfg);
        cfg.jobs = 3;
        auto b = run_suite(s, cfg);
        cfg.jobs = 1;
        CHECK(a.records == b.records);
        CHECK(a.pass == b.pass);
        // replay determinism
        CHECK(run_suite(s, cfg).records == a.records);
    }
}

}
