#include "doctest.h"
#include "hd/awring.hpp"

using namespace hd;

namespace {

HAlgebra typeA(int l) { return HAlgebra::make(build_root_system('A', l - 1)); }

int partition_index(int l, std::vector<int> p) {
    auto parts = partitions_of(l);
    for (size_t k = 0; k < parts.size(); ++k)
        if (parts[k] == Partition(p)) return (int)k;
    return -1;
}

// Lowest W-type of E(m): sigma_{lambda(m)^T}, realized inside the graded module X.
struct Lowest {
    int sigma = -1;
    Subspace U;
};
Lowest lowest(const HAlgebra& alg, const HModule& X, const Multisegment& m) {
    std::vector<int> lens;
    for (auto& s : m.segs) lens.push_back(s.length());
    Lowest out;
    out.sigma = partition_index(m.l(), Partition(lens).transpose().parts);
    Subspace iso = isotypic_component(alg, X, alg.W->char_table().chars[out.sigma]);
    out.U = subspace_intersect(iso, X.grading->plus);
    if (out.U.dim() == 0) out.U = subspace_intersect(iso, X.grading->minus);
    return out;
}

}  // namespace

TEST_SUITE("awring") {

TEST_CASE("A1 worked example") {
    auto alg = typeA(2);
    auto X = induce(alg, {}, {}, {Rat(0), Rat(0)});
    REQUIRE(X.dim == 2);
    const auto& ct = alg.W->char_table();
    Subspace triv = isotypic_component(alg, X, ct.chars[partition_index(2, {2})]);
    REQUIRE(triv.dim() == 1);
    auto gr = assoc_graded(alg, X, triv);
    CHECK(gr.graded_dims == std::vector<int>{1, 1});
    CHECK(audit(aw_algebra(alg), gr.M).ok);
    // v0 = e1 - e2 raises u to the degree-one line and kills it there
    Mat v0 = gr.M.v[0] - gr.M.v[1];
    CHECK_FALSE(v0.is_zero());
    CHECK((v0 * v0).is_zero());
}

TEST_CASE("sigma must generate") {
    auto alg = typeA(3);
    auto E = induce_multisegment(alg, Multisegment::parse("[-1,1]"));
    auto X = module_sum(E, E);
    Subspace one = Subspace::span(std::vector<Vec>{Vec{Scalar(1), Scalar(0)}}, 2);
    CHECK_THROWS_WITH(assoc_graded(alg, X, one), "not a choice of deformation");
}

TEST_CASE("free Kato module") {
    auto alg = typeA(2);
    auto K = kato_free(alg, {Mat::identity(1)}, partition_index(2, {2}), 4);
    CHECK(K.module.graded_dims == std::vector<int>{1, 2, 3, 4, 5});
    CHECK_FALSE(K.stabilized);
    CHECK(audit(aw_algebra(alg), K.module.M).ok);
    auto alg3 = typeA(3);
    int refl = partition_index(3, {2, 1});
    // reflection representation of S3 on the simple-root basis
    Mat s1(2, 2), s2(2, 2);
    s1(0, 0) = Scalar(-1); s1(0, 1) = Scalar(1); s1(1, 1) = Scalar(1);
    s2(0, 0) = Scalar(1); s2(1, 0) = Scalar(1); s2(1, 1) = Scalar(-1);
    auto K2 = kato_free(alg3, {s1, s2}, refl, 2);
    CHECK(K2.module.graded_dims == std::vector<int>{2, 6, 12});
    CHECK(audit(aw_algebra(alg3), K2.module.M).ok);
}

TEST_CASE("Kato quotients") {
    auto alg = typeA(2);
    int sgn = partition_index(2, {1, 1}), triv = partition_index(2, {2});
    auto K = big_kato(alg, {Mat::identity(1).scaled(Scalar(-1))}, sgn, type_a_order(*alg.W), 6);
    CHECK(K.stabilized);
    CHECK(K.module.graded_dims == std::vector<int>{1});
    // trivial: only tau = triv lies below, so the sign parts survive in degree one
    auto Kt = big_kato(alg, {Mat::identity(1)}, triv, type_a_order(*alg.W), 6);
    CHECK(Kt.stabilized);
    CHECK(Kt.module.graded_dims == std::vector<int>{1, 1});
    CHECK(audit(aw_algebra(alg), Kt.module.M).ok);
}

TEST_CASE("tempered modules against Kato modules") {
    for (const char* text : {"[-1,1]", "[-1,1];[0,0]"}) {
        auto m = Multisegment::parse(text);
        auto alg = typeA(m.l());
        auto ctx = build_spin_context(alg.rs);
        SpinCover cover(*alg.W, ctx);
        auto X = graded_version(alg, induce_multisegment(alg, m));
        auto lw = lowest(alg, X, m);
        REQUIRE(lw.U.dim() > 0);
        auto gr = assoc_graded(alg, X, lw.U);
        auto K = big_kato(alg, restrict_w(X, lw.U), lw.sigma, type_a_order(*alg.W), 10);
        CHECK(K.stabilized);
        CHECK(gr.graded_dims == K.module.graded_dims);
        auto hA = dirac_A_cohomology(alg, cover, gr);
        auto h = dirac_cohomology(dirac_matrix(alg, cover, X));
        CHECK(hA.dim == h.dim);
        CHECK(hA.character.values == h.character.values);
        CHECK(dirac_A_cohomology(alg, cover, K.module).character.values == h.character.values);
    }
    auto alg = typeA(4);
    auto X = graded_version(alg, induce_multisegment(alg, Multisegment::parse("[-1,1];[0,0]")));
    auto gr = assoc_graded(alg, X, lowest(alg, X, Multisegment::parse("[-1,1];[0,0]")).U);
    CHECK(gr.graded_dims == std::vector<int>{3, 1});
}

TEST_CASE("D_A") {
    auto alg = typeA(3);
    auto ctx = build_spin_context(alg.rs);
    SpinCover cover(*alg.W, ctx);
    // one-dimensional, degree zero: D_A = 0
    auto E = induce_multisegment(alg, Multisegment::parse("[-1,1]"));
    AWModule M;
    M.M = E;
    for (auto& v : M.M.v) v = Mat(1, 1);
    M.graded_dims = {1};
    auto h = dirac_A_cohomology(alg, cover, M);
    CHECK(h.dim == ctx.spin_dim);

    auto alg4 = typeA(4);
    auto ctx4 = build_spin_context(alg4.rs);
    SpinCover cover4(*alg4.W, ctx4);
    auto a0 = aw_algebra(alg4);
    auto m = Multisegment::parse("[0,2];[-1,-1]");
    auto X = graded_version(alg4, induce_multisegment(alg4, m));
    auto gr = assoc_graded(alg4, X, lowest(alg4, X, m).U);
    CHECK(audit(a0, gr.M).ok);
    auto dc = dirac_matrix(a0, cover4, gr.M);
    CHECK(d_squared_audit(dc).printed_ok);
    CHECK(omega_term(dc).is_zero());
    // vanishing of H_{D_A} forces vanishing of H_D
    CHECK(dirac_cohomology(dc).dim == 0);
    CHECK(dirac_cohomology(dirac_matrix(alg4, cover4, X)).dim == 0);
}

}
