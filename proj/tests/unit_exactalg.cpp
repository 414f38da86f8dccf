#include "doctest.h"
#include "hd/matrix.hpp"

#include <random>

using namespace hd;

namespace {

Scalar random_scalar(std::mt19937& g) {
    std::uniform_int_distribution<int> c(-5, 5), d(1, 4), pick(0, 3);
    const long rads[] = {1, 2, 3, 6};
    Scalar s;
    for (int k = 0; k < 3; ++k) {
        Scalar coef = Scalar::gauss(Rat(c(g), d(g)), Rat(c(g), d(g)));
        s += coef * sqrt_of(rads[pick(g)]);
    }
    return s;
}

Mat random_mat(std::mt19937& g, int r, int c, int lo = -3, int hi = 3) {
    std::uniform_int_distribution<int> u(lo, hi);
    Mat m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = Scalar(u(g));
    return m;
}

}  // namespace

TEST_SUITE("exactalg") {
TEST_CASE("rational fast path and overflow promotion") {
    Rat a(INT64_MAX - 1), b(3);
    Rat s = a + b;
    CHECK_FALSE(s.is_small());
    CHECK(s - b == a);
    CHECK((s - b).is_small());
    CHECK(Rat(6, -4) == Rat(-3, 2));
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat::parse("-12/8") == Rat(-3, 2));
}

TEST_CASE("sqrt_of examples") {
    CHECK(sqrt_of(1) == Scalar(1));
    CHECK(sqrt_of(4) == Scalar(2));
    Scalar s8 = sqrt_of(8);
    CHECK(s8.str() == "2*sqrt(2)");
    CHECK(s8 * s8 == Scalar(8));
    CHECK(sqrt_of(Rat(1, 2)) * sqrt_of(Rat(1, 2)) == Scalar(Rat(1, 2)));
    CHECK(sqrt_of(6) == sqrt_of(2) * sqrt_of(3));
    CHECK(sqrt_of(12).real_sign() == 1);
}

TEST_CASE("text form round trip") {
    Scalar x = Scalar::parse("3/2 + 1/2*i + (2 - i)*sqrt(2)");
    CHECK(x.str() == "3/2 + 1/2*i + (2 - i)*sqrt(2)");
    CHECK(Scalar::parse(x.str()) == x);
    CHECK(Scalar::parse("-sqrt(3)/3").str() == "-1/3*sqrt(3)");
    CHECK(Scalar::parse("i*i") == Scalar(-1));
    CHECK_THROWS_AS(Scalar::parse("2 + * 3"), ParseError);
    try {
        Scalar::parse("1 + q");
    } catch (const ParseError& e) {
        CHECK(e.pos == 4);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 g(7);
    for (int t = 0; t < 1000; ++t) {
        Scalar a = random_scalar(g), b = random_scalar(g), c = random_scalar(g);
        REQUIRE(a * (b + c) == a * b + a * c);
        REQUIRE((a * b) * c == a * (b * c));
        if (!a.is_zero() && t % 10 == 0) REQUIRE(a * a.inv() == Scalar(1));
    }
}

TEST_CASE("real sign is exact") {
    CHECK((sqrt_of(2) + sqrt_of(3) - sqrt_of(10)).real_sign() == -1);  // 3.146 < 3.162
    CHECK((Scalar(3) - sqrt_of(2) * sqrt_of(3) - Scalar(Rat(-55, 100))).real_sign() == 1);
}

TEST_CASE("kernel and image examples") {
    CHECK(kernel(Mat(3, 3)).dim() == 3);
    for (int n = 1; n <= 4; ++n) {
        CHECK(kernel(Mat::identity(n)).dim() == 0);
        CHECK(image(Mat::identity(n)).dim() == n);
    }
    Mat m(2, 2);
    m(0, 0) = Scalar(1);
    m(0, 1) = sqrt_of(2);
    m(1, 0) = sqrt_of(2);
    m(1, 1) = Scalar(2);
    Subspace k = kernel(m);
    REQUIRE(k.dim() == 1);
    Vec v{-sqrt_of(2), Scalar(1)};
    CHECK(m.apply(v) == Vec{Scalar(), Scalar()});
    CHECK(k.contains(v));
}

TEST_CASE("rank-nullity and echelon canonicality") {
    std::mt19937 g(11);
    for (int t = 0; t < 30; ++t) {
        int r = 1 + t % 5, c = 1 + (t * 7) % 6;
        Mat m = random_mat(g, r, c, -1, 1);
        CHECK(rank(m) == c - kernel(m).dim());
        CHECK(image(m).dim() == rank(m));
        // change of basis of the row span gives the identical echelon basis
        Subspace s = Subspace::span(m);
        Mat p = random_mat(g, r, r);
        if (!inverse(p)) continue;
        CHECK(Subspace::span(p * m) == s);
    }
}

TEST_CASE("sum and intersection") {
    Subspace a = Subspace::span(Mat::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
    Subspace b = Subspace::span(Mat::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}}, 4));
    CHECK(subspace_intersect(a, b).dim() == 0);
    CHECK(subspace_sum(a, b).dim() == 4);
    CHECK(subspace_intersect(a, a) == a);
    CHECK(subspace_sum(a, a) == a);
    std::mt19937 g(3);
    for (int t = 0; t < 50; ++t) {
        Subspace x = Subspace::span(random_mat(g, 2, 4, -2, 2));
        Subspace y = Subspace::span(random_mat(g, 3, 4, -2, 2));
        Subspace i = subspace_intersect(x, y);
        // oracle: rank of stacked bases
        int sum_rank = rank(vstack(x.basis(), y.basis()));
        CHECK(sum_rank + i.dim() == x.dim() + y.dim());
        CHECK(x.contains(i));
        CHECK(y.contains(i));
        CHECK(quotient_dim(x, i) == x.dim() - i.dim());
    }
    CHECK_THROWS(quotient_dim(a, b));
}

TEST_CASE("generalized eigenspaces") {
    Mat d(3, 3);
    d(0, 0) = Scalar(1);
    d(1, 1) = Scalar(1);
    d(2, 2) = Scalar(2);
    auto ws = simultaneous_generalized_eigenspaces({d});
    REQUIRE(ws.size() == 2);
    CHECK(ws[0].weight == std::vector<Rat>{Rat(1)});
    CHECK(ws[0].space.dim() == 2);
    CHECK(ws[1].space.dim() == 1);
    Mat j(2, 2);
    j(0, 0) = Scalar(5);
    j(1, 1) = Scalar(5);
    j(0, 1) = Scalar(1);
    auto wj = simultaneous_generalized_eigenspaces({j});
    REQUIRE(wj.size() == 1);
    CHECK(wj[0].space.dim() == 2);
    CHECK(wj[0].weight == std::vector<Rat>{Rat(5)});
    Mat a(2, 2), b(2, 2);
    a(0, 1) = Scalar(1);
    b(1, 0) = Scalar(1);
    CHECK_THROWS(simultaneous_generalized_eigenspaces({a, b}));
}

TEST_CASE("charpoly and rational roots") {
    Mat m = Mat::from_rows({{2, 1, 0}, {0, 2, 0}, {0, 0, Scalar(Rat(-3, 2))}});
    auto roots = rational_roots(charpoly(m));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == Rat(-3, 2));
    CHECK(roots[1].first == Rat(2));
    CHECK(roots[1].second == 2);
}
}
