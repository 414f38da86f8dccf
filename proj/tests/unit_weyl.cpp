#include "doctest.h"
#include "hd/weyl.hpp"

#include <random>

using namespace hd;

TEST_SUITE("weyl") {

TEST_CASE("root system sizes") {
    auto a2 = build_root_system('A', 2);
    CHECK(a2.positive.size() == 3);
    CHECK(a2.positive == std::vector<IVec>{{1, -1, 0}, {1, 0, -1}, {0, 1, -1}});
    CHECK(WeylGroup(a2).order() == 6);
    auto a1 = build_root_system('A', 1);
    CHECK(a1.positive.size() == 1);
    CHECK(WeylGroup(a1).order() == 2);
    auto c2 = build_root_system('C', 2, Rat(17, 10));
    CHECK(c2.positive.size() == 4);
    CHECK(WeylGroup(c2).order() == 8);
    for (int n = 1; n <= 4; ++n) CHECK((int)build_root_system('C', n, Rat(1)).positive.size() == n * n);
    CHECK_THROWS(build_root_system('C', 2));
    CHECK_THROWS(build_root_system('B', 2, Rat(1)));
    CHECK_THROWS(build_root_system('A', 0));
    CHECK(c2.c({2, 0}) == Rat(17, 10));
    CHECK(c2.c({1, -1}) == Rat(1));
}

TEST_CASE("closure of type C roots under reflections") {
    auto c3 = build_root_system('C', 3, Rat(2));
    for (auto& a : c3.roots)
        for (auto& b : c3.roots) {
            QVec bv(b.begin(), b.end());
            QVec r = c3.reflect(a, bv);
            IVec ri;
            for (auto& x : r) ri.push_back((int)x.small_num());
            CHECK(std::find(c3.roots.begin(), c3.roots.end(), ri) != c3.roots.end());
        }
}

TEST_CASE("longest element") {
    auto a1 = WeylGroup(build_root_system('A', 1));
    CHECK(a1.longest() == a1.simple(0));
    auto a2 = WeylGroup(build_root_system('A', 2));
    int best = 0;
    for (int k = 0; k < a2.order(); ++k) best = std::max(best, a2.length(k));
    CHECK(best == 3);
    CHECK(a2.length(a2.longest()) == 3);
    CHECK(a2.act(a2.longest(), IVec{1, 2, 3}) == IVec{3, 2, 1});
    auto c2 = WeylGroup(build_root_system('C', 2, Rat(1)));
    CHECK(c2.length(c2.longest()) == 4);
    CHECK(c2.matrix(c2.longest()) == Mat::identity(2, Scalar(-1)));
    CHECK(c2.word(c2.longest()) == std::vector<int>{0, 1, 0, 1});
}

TEST_CASE("reflection identity and invariance of the form") {
    std::mt19937 rng(7);
    for (char t : {'A', 'C'}) {
        auto rs = t == 'A' ? build_root_system('A', 3) : build_root_system('C', 3, Rat(3, 2));
        WeylGroup w(rs);
        for (size_t p = 0; p < rs.positive.size(); ++p)
            for (int trial = 0; trial < 200; ++trial) {
                QVec u(rs.dim), v(rs.dim);
                for (int i = 0; i < rs.dim; ++i) {
                    u[i] = Rat((long long)(rng() % 21) - 10, 1 + rng() % 5);
                    v[i] = Rat((long long)(rng() % 21) - 10, 1 + rng() % 5);
                }
                QVec sv = w.act(w.reflection((int)p), v), su = w.act(w.reflection((int)p), u);
                CHECK(sv == rs.reflect(rs.positive[p], v));
                Rat a, b;
                for (int i = 0; i < rs.dim; ++i) a += u[i] * v[i], b += su[i] * sv[i];
                CHECK(a == b);
            }
    }
}

TEST_CASE("reduced words are lexicographically least") {
    WeylGroup w(build_root_system('A', 3));
    for (int k = 0; k < w.order(); ++k) {
        auto wd = w.word(k);
        CHECK((int)wd.size() == w.length(k));
    }
    // Brute force: enumerate all words of length l(w) and take the least that evaluates to w.
    for (int k = 0; k < w.order(); ++k) {
        int L = w.length(k);
        std::vector<int> cur(L, 0);
        std::vector<int> found;
        while (true) {
            int x = 0;
            for (int g : cur) x = w.mul(x, w.simple(g));
            if (x == k) { found = cur; break; }
            int pos = L - 1;
            while (pos >= 0 && cur[pos] == w.roots().rank - 1) cur[pos--] = 0;
            if (pos < 0) break;
            cur[pos]++;
        }
        CHECK(found == w.word(k));
    }
}

TEST_CASE("size bound") {
    CHECK_THROWS_AS(WeylGroup(build_root_system('A', 10)), std::length_error);
}

TEST_CASE("character tables") {
    WeylGroup s2(build_root_system('A', 1));
    auto& t2 = s2.char_table();
    REQUIRE(t2.num() == 2);
    CHECK(t2.chars[t2.find("(2)")].values == std::vector<Scalar>{1, 1});
    CHECK(t2.chars[t2.find("(1,1)")].values == std::vector<Scalar>{1, -1});

    WeylGroup s3(build_root_system('A', 2));
    auto& t3 = s3.char_table();
    REQUIRE(t3.num() == 3);
    // classes ordered by least element: identity, (12), then a 3-cycle
    const auto& cd = *t3.classes;
    CHECK(s3.cycle_type(cd.reps[0]) == Partition({1, 1, 1}));
    CHECK(s3.cycle_type(cd.reps[1]) == Partition({2, 1}));
    CHECK(s3.cycle_type(cd.reps[2]) == Partition({3}));
    CHECK(t3.chars[t3.find("(2,1)")].values == std::vector<Scalar>{2, 0, -1});

    for (int l = 2; l <= 6; ++l) {
        WeylGroup w(build_root_system('A', l - 1));
        auto& t = w.char_table();
        CHECK(check_orthogonality(t));
        long long s = 0;
        for (auto& c : t.chars) s += c.degree().to_rat().small_num() * c.degree().to_rat().small_num();
        CHECK(s == w.order());
        CHECK(t.num() == (int)partitions_of(l).size());
    }
    for (int n = 1; n <= 3; ++n) {
        WeylGroup w(build_root_system('C', n, Rat(1)));
        auto& t = w.char_table();
        CHECK(check_orthogonality(t));
        long long s = 0;
        for (auto& c : t.chars) s += c.degree().to_rat().small_num() * c.degree().to_rat().small_num();
        CHECK(s == w.order());
    }
}

TEST_CASE("multiplicity") {
    WeylGroup s3(build_root_system('A', 2));
    auto& t = s3.char_table();
    for (auto& c : t.chars) CHECK(multiplicity(c, c) == 1);
    ClassFunction reg;
    reg.classes = t.classes;
    reg.values = {6, 0, 0};
    CHECK(multiplicity(reg, t.chars[t.find("(2,1)")]) == 2);
    ClassFunction bad = reg;
    bad.values = {1, 0, 0};
    CHECK_THROWS(multiplicity(bad, t.chars[0]));
}

TEST_CASE("partitions") {
    for (int n = 1; n <= 12; ++n)
        for (auto& p : partitions_of(n)) CHECK(p.transpose().transpose() == p);
    CHECK(partitions_of(5).size() == 7);
    CHECK(Partition({3, 1}).transpose() == Partition({2, 1, 1}));
    CHECK(dominates(Partition({3, 1}), Partition({2, 2})));
    CHECK(!dominates(Partition({2, 2}), Partition({3, 1})));
    CHECK(!dominates(Partition({3, 1, 1, 1}), Partition({2, 2, 2})));
    CHECK(!dominates(Partition({2, 2, 2}), Partition({3, 1, 1, 1})));
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(mn_character(Partition({3, 1}), Partition({1, 1, 1, 1})) == 3);
    CHECK(strict_partitions_of(6).size() == 4);
}

}
