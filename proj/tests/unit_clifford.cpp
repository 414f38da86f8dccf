#include "doctest.h"
#include "hd/clifford.hpp"

#include <random>

using namespace hd;

namespace {
bool anticommute_ok(const std::vector<Mat>& g) {
    int d = g.empty() ? 0 : g[0].rows();
    for (size_t a = 0; a < g.size(); ++a)
        for (size_t b = 0; b < g.size(); ++b) {
            Mat s = g[a] * g[b] + g[b] * g[a];
            if (s != Mat::identity(d, Scalar(a == b ? -2 : 0))) return false;
        }
    return true;
}
}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("rank one") {
    auto ctx = build_spin_context(build_root_system('A', 1));
    CHECK(ctx.n == 1);
    CHECK(ctx.odd);
    CHECK(ctx.s_plus.dim() == 1);
    CHECK(ctx.s_minus.dim() == 1);
    auto gp = ctx.gammas_on(1), gm = ctx.gammas_on(-1);
    CHECK((gp[0](0, 0) == Scalar::i() || gp[0](0, 0) == -Scalar::i()));
    CHECK(gp[0](0, 0) == -gm[0](0, 0));
}

TEST_CASE("dimensions and anticommutation") {
    for (int l = 2; l <= 7; ++l) {
        auto ctx = build_spin_context(build_root_system('A', l - 1));
        CHECK(ctx.simple_dim() == (1 << ((l - 1) / 2)));
        CHECK(anticommute_ok(ctx.onb_gammas));
        if (ctx.odd) {
            CHECK(anticommute_ok(ctx.gammas_on(1)));
            CHECK(anticommute_ok(ctx.gammas_on(-1)));
        }
    }
    for (int n = 1; n <= 4; ++n) {
        auto ctx = build_spin_context(build_root_system('C', n, Rat(17, 10)));
        CHECK(ctx.simple_dim() == (1 << (n / 2)));
        CHECK(anticommute_ok(ctx.onb_gammas));
    }
    auto a2 = build_spin_context(build_root_system('A', 2));
    CHECK(a2.spin_dim == 2);
    CHECK(a2.onb_gammas[0] * a2.onb_gammas[1] == -(a2.onb_gammas[1] * a2.onb_gammas[0]));
}

TEST_CASE("A3: the two simple modules are inequivalent") {
    auto ctx = build_spin_context(build_root_system('A', 3));
    auto gp = ctx.gammas_on(1), gm = ctx.gammas_on(-1);
    CHECK(gp[0].rows() == 2);
    Scalar tp = (gp[0] * gp[1] * gp[2]).trace(), tm = (gm[0] * gm[1] * gm[2]).trace();
    CHECK(!tp.is_zero());
    CHECK(tp == -tm);
}

TEST_CASE("g~_v squares to -<v,v>") {
    std::mt19937 rng(3);
    for (auto rs : {build_root_system('A', 3), build_root_system('C', 3, Rat(2))}) {
        auto ctx = build_spin_context(rs);
        for (int t = 0; t < 100; ++t) {
            QVec v(rs.dim);
            for (auto& x : v) x = Rat((long long)(rng() % 11) - 5, 1 + rng() % 3);
            if (rs.type == RootType::A) {
                Rat s;
                for (auto& x : v) s += x;
                v.back() -= s;
            }
            Rat n2;
            for (auto& x : v) n2 += x * x;
            Mat g = ctx.gtilde(v);
            CHECK(g * g == Mat::identity(ctx.spin_dim, Scalar(-n2)));
        }
    }
}

TEST_CASE("stilde") {
    auto rs1 = build_root_system('A', 1);
    auto c1 = build_spin_context(rs1);
    Mat s = c1.stilde(0);
    CHECK(s * s == Mat::identity(c1.spin_dim, Scalar(-1)));
    auto rs2 = build_root_system('A', 2);
    auto c2 = build_spin_context(rs2);
    Mat p = c2.stilde(rs2.simple[0]) * c2.stilde(rs2.simple[1]);
    CHECK(p * p * p == Mat::identity(c2.spin_dim, Scalar(-1)));
    // conjugation by s~_alpha permutes g~_beta by the reflection
    WeylGroup w(rs2);
    std::mt19937 rng(5);
    for (size_t a = 0; a < rs2.positive.size(); ++a) {
        Mat sa = c2.stilde((int)a), sainv = sa.scaled(Scalar(-1));
        for (int t = 0; t < 100; ++t) {
            QVec v(3);
            for (auto& x : v) x = Rat((long long)(rng() % 11) - 5);
            v[2] = -v[0] - v[1];
            QVec rv = w.act(w.reflection((int)a), v);
            // s~ g~_v s~^-1 = -g~_{s(v)} for an odd element
            CHECK(sa * c2.gtilde(v) * sainv == -c2.gtilde(rv));
        }
    }
}

TEST_CASE("spin cover of S3 and S4") {
    auto rs = build_root_system('A', 2);
    WeylGroup w(rs);
    auto ctx = build_spin_context(rs);
    SpinCover cov(w, ctx);
    CHECK(cov.order() == 12);
    auto& t = cov.char_table();
    CHECK(check_orthogonality(t));
    std::vector<long long> dims;
    long long sq = 0;
    for (int r : cov.genuine()) {
        long long d = t.chars[r].degree().to_rat().small_num();
        dims.push_back(d);
        sq += d * d;
    }
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<long long>{1, 1, 2});
    CHECK(sq == 6);
    CHECK(t.find("(3)") >= 0);
    CHECK(t.find("(2,1)+") >= 0);
    for (int r : cov.genuine()) CHECK(t.chars[r].values[t.classes->sizes.size() > 1 ? cov.group().class_of(1) : 0] == -t.chars[r].degree());

    auto rs4 = build_root_system('A', 3);
    WeylGroup w4(rs4);
    auto ctx4 = build_spin_context(rs4);
    SpinCover cov4(w4, ctx4);
    auto& t4 = cov4.char_table();
    CHECK(cov4.order() == 48);
    int k = t4.find("(3,1)");
    REQUIRE(k >= 0);
    CHECK(t4.chars[k].degree() == Scalar(4));
    CHECK(t4.find("(4)+") >= 0);
    CHECK(t4.find("(4)-") >= 0);
}

TEST_CASE("projection and kernel") {
    auto rs = build_root_system('A', 3);
    WeylGroup w(rs);
    auto ctx = build_spin_context(rs);
    SpinCover cov(w, ctx);
    CHECK(cov.lift(1) == -cov.lift(0));
    for (size_t p = 0; p < rs.positive.size(); ++p) {
        int e = cov.stilde_elt((int)p);
        CHECK(cov.lift(e) == ctx.stilde((int)p));
        CHECK(SpinCover::project(e) == w.reflection((int)p));
    }
    // homomorphism check on random pairs
    std::mt19937 rng(1);
    for (int t = 0; t < 50; ++t) {
        int a = rng() % cov.order(), b = rng() % cov.order();
        CHECK(cov.lift(a) * cov.lift(b) == cov.lift(cov.mul(a, b)));
    }
}

TEST_CASE("genuine sum rule") {
    for (int l = 2; l <= 6; ++l) {
        auto rs = build_root_system('A', l - 1);
        WeylGroup w(rs);
        auto ctx = build_spin_context(rs);
        SpinCover cov(w, ctx);
        auto& t = cov.char_table();
        long long sq = 0;
        for (int r : cov.genuine()) {
            long long d = t.chars[r].degree().to_rat().small_num();
            sq += d * d;
        }
        CHECK(sq == factorial(l));
        int expect = 0;
        for (auto& lam : strict_partitions_of(l)) expect += is_dp_plus(lam) ? 1 : 2;
        CHECK((int)cov.genuine().size() == expect);
        for (auto& lam : strict_partitions_of(l)) {
            std::string lab = lam.str() + (is_dp_plus(lam) ? "" : "+");
            int r = t.find(lab);
            REQUIRE(r >= 0);
            CHECK(t.chars[r].degree() == Scalar(spin_irrep_dimension(lam)));
        }
    }
    for (int n = 1; n <= 3; ++n) {
        auto rs = build_root_system('C', n, Rat(17, 10));
        WeylGroup w(rs);
        auto ctx = build_spin_context(rs);
        SpinCover cov(w, ctx);
        auto& t = cov.char_table();
        CHECK(check_orthogonality(t));
        long long sq = 0;
        for (int r : cov.genuine()) {
            long long d = t.chars[r].degree().to_rat().small_num();
            sq += d * d;
        }
        CHECK(sq == w.order());
    }
}

TEST_CASE("strict partition bookkeeping") {
    CHECK(spin_irrep_dimension(Partition({3})) == 2);
    CHECK(spin_irrep_dimension(Partition({2, 1})) == 1);
    CHECK(spin_irrep_dimension(Partition({3, 1})) == 4);
    CHECK_THROWS(spin_irrep_dimension(Partition({2, 2})));
    CHECK(is_dp_plus(Partition({3})));
    CHECK(epsilon_of(Partition({3})) == Scalar(1));
    CHECK(!is_dp_plus(Partition({2, 1})));
    CHECK(epsilon_of(Partition({2, 1})) == sqrt_of(2L));
    CHECK(!is_dp_plus(Partition({4})));
}

TEST_CASE("size bound") {
    CHECK_THROWS_AS(build_spin_context(build_root_system('A', 13)), std::length_error);
}

}
