#include "doctest.h"
#include "hd/clifford.hpp"
#include "hd/segments.hpp"

using namespace hd;

TEST_SUITE("segments") {

TEST_CASE("parse and print") {
    auto m = Multisegment::parse(" [-1,1] ; [0,0]");
    CHECK(m.str() == "[-1,1];[0,0]");
    CHECK(m.l() == 4);
    CHECK(m.in_Z());
    CHECK(!m.is_ladder());
    CHECK_THROWS_AS(Multisegment::parse("[1,0]"), ParseError);
    CHECK_THROWS_AS(Multisegment::parse("[1,2];"), ParseError);
    CHECK_THROWS_AS(Multisegment::parse("[1 2]"), ParseError);
    try {
        Multisegment::parse("[1,2]x");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.pos == 5);
    }
}

TEST_CASE("m-profile") {
    auto m = Multisegment::parse("[4,5];[2,4];[1,3]");
    std::vector<int> got;
    for (int e = 1; e <= 5; ++e) got.push_back(m_profile(m, e));
    CHECK(got == std::vector<int>{1, 2, 2, 2, 1});
    CHECK(m_profile(m, 0) == 0);
    CHECK(m_profile(m, 9) == 0);
    int total = 0;
    for (auto [e, c] : m_profile_all(m)) total += c;
    CHECK(total == m.l());
}

TEST_CASE("tempered form") {
    auto t = temp_of(Multisegment::parse("[0,1];[-1,0]"));
    REQUIRE(t);
    CHECK(t->str() == "[-1,1];[0,0]");
    CHECK(temp_of(Multisegment::parse("[-1,1]"))->str() == "[-1,1]");
    CHECK(!temp_of(Multisegment::parse("[0,1]")));
    CHECK(!is_elliptic_cc(Multisegment::parse("[1,1];[0,0]")));
    CHECK(is_symmetric(Multisegment::parse("[-2,2];[0,0]")));
}

TEST_CASE("linkage classes") {
    auto m = Multisegment::parse("[5,7];[3,5];[2,4];[1,3]");
    auto cls = linkage_classes(m);
    REQUIRE(cls.size() == 3);
    std::vector<std::pair<int, int>> J;
    for (auto& f : cls) J.push_back({f.a, f.b});
    CHECK(J == std::vector<std::pair<int, int>>{{2, 7}, {3, 5}, {1, 3}});
    CHECK(linkage_classes(Multisegment::parse("[0,1];[-1,0]")).size() == 2);
    CHECK(linkage_classes(Multisegment::parse("[2,4]")).size() == 1);
    CHECK_THROWS(linkage_classes(Multisegment::parse("[-1,1];[0,0]")));
}

TEST_CASE("w of a ladder") {
    CHECK(cycle_notation(w_of(Multisegment::parse("[7,10];[4,8];[3,6]")).perm) == "(1,3)");
    auto w2 = w_of(Multisegment::parse("[5,7];[3,5];[2,4];[1,3]"));
    CHECK(cycle_notation(w2.perm) == "(1,4,2,3)");
    CHECK(cycle_notation(w_of(Multisegment::parse("[0,1];[-1,0]")).perm) == "(1,2)");
    CHECK(cycle_notation(w_of(Multisegment::parse("[-1,1]")).perm) == "id");
}

TEST_CASE("alpha and lambda") {
    auto a = alpha_of(Multisegment::parse("[0,1];[-1,0]"));
    CHECK(a.hk == std::vector<int>{3, 1});
    CHECK(a.ht == std::vector<int>{2, 1});
    CHECK(a.alpha.str() == "(2,2)");
    auto b = alpha_of(Multisegment::parse("[-1,1]"));
    CHECK(b.alpha_prime.str() == "(3)");
    CHECK(b.alpha.str() == "(1,1,1)");
    CHECK(lambda_of(Multisegment::parse("[3,7];[2,6];[1,3]")).str() == "(5,5,3)");
    // (5,1,1,1): arm 4, leg 3
    auto p = from_frobenius({4}, {3});
    CHECK(p.str() == "(5,1,1,1)");
    CHECK(p.hook(0, 0) == 8);
    CHECK(p.hook(1, 0) == 3);
    CHECK(from_frobenius({2, 0}, {1, 0}).str() == "(3,2)");
    CHECK_THROWS(from_frobenius({1, 1}, {1, 0}));
}

TEST_CASE("bgg terms") {
    auto t = bgg_terms(Multisegment::parse("[0,1];[-1,0]"));
    REQUIRE(t.size() == 2);
    CHECK(t[0].m->str() == "[0,1];[-1,0]");
    CHECK(t[1].m->str() == "[-1,1];[0,0]");
    CHECK(t[1].length == 1);
    auto m = Multisegment::parse("[7,10];[4,8];[3,6]");
    auto terms = bgg_terms(m);
    CHECK(terms.size() == 6);
    for (auto& x : terms) {
        bool zero = false;
        for (int k = 0; k < 3; ++k) zero |= m.segs[x.w[k] - 1].a > m.segs[k].b + 1;
        CHECK(zero == !x.m.has_value());
        if (x.m) CHECK(x.m->l() == m.l());
    }
    CHECK(bgg_terms(Multisegment::parse("[2,5]")).size() == 1);
}

TEST_CASE("enumeration") {
    auto z = enumerate_Z(2, 1);
    CHECK(z.size() == 5);
    for (auto& m : enumerate_Z(5, 2)) {
        CHECK(m.in_Z());
        CHECK(m.l() == 5);
    }
}

TEST_CASE("ladder invariants on full enumerations") {
    int checked = 0;
    for (int l = 1; l <= 8; ++l)
        for (auto& m : enumerate_Z(l, l)) {
            if (!m.is_ladder() || !is_elliptic_cc(m)) continue;
            ++checked;
            CHECK(up_and_then_down(m));
            auto w = w_of(m);
            auto al = alpha_of(m);
            CHECK(al.alpha.size() == l);
            // ht(e) = w(N) - N + e with a_N the left end of the first member of the e-th class
            for (size_t e = 0; e < w.by_b.size(); ++e) {
                int N = w.classes[w.by_b[e]].members[0] + 1;
                CHECK(al.ht[e] == w.perm[N - 1] - N + (int)e + 1);
            }
        }
    CHECK(checked > 20);
}

TEST_CASE("prediction") {
    auto p = ladder_hd_prediction(Multisegment::parse("[0,1];[-1,0]"));
    CHECK(p.lambda.str() == "(3,1)");
    CHECK(p.k_n == Scalar(1));
    CHECK(p.k_l == Scalar(1));
    CHECK(p.block_swapped == 4);
    auto q = ladder_hd_prediction(Multisegment::parse("[-1,1]"));
    CHECK(q.basic);
    CHECK(q.basic_dim == 2);
    auto r = ladder_hd_prediction(Multisegment::parse("[-2,2];[-1,1];[0,0]"));
    CHECK(r.lambda.str() == "(5,3,1)");
}

}
