#include "doctest.h"
#include "hd/dirac.hpp"

using namespace hd;

namespace {

struct Setup {
    HAlgebra alg;
    SpinContext ctx;
    std::unique_ptr<SpinCover> cover;
    explicit Setup(int l) : alg(HAlgebra::make(build_root_system('A', l - 1))), ctx(build_spin_context(alg.rs)) {
        cover = std::make_unique<SpinCover>(*alg.W, ctx);
    }
};

HModule E_of(const HAlgebra& alg, const char* m) { return induce_multisegment(alg, Multisegment::parse(m)); }

}  // namespace

TEST_SUITE("dirac") {

TEST_CASE("D vanishes on the sign module") {
    Setup s(3);
    auto E = E_of(s.alg, "[-1,1]");
    auto dc = dirac_matrix(s.alg, *s.cover, E);
    CHECK(dc.D.is_zero());
    auto h = dirac_cohomology(dc);
    CHECK(h.dim == dc.dim());
    CHECK(decompose(*s.cover, h.character).str() == "(3)");
    auto cc = central_character(s.alg, E);
    REQUIRE(cc);
    CHECK(vogan_check(s.alg, *s.cover, h.character, *cc, Rat(1)).pass);
}

TEST_CASE("anticommutation and D squared") {
    Setup s(4);
    for (const char* m : {"[0,1];[-1,0]", "[-1,1];[0,0]", "[0,2];[-1,-1]"}) {
        auto E = E_of(s.alg, m);
        for (const HModule& X : {E, simple_quotient(s.alg, E)}) {
            auto dc = dirac_matrix(s.alg, *s.cover, X);
            CHECK(anticommutation_ok(dc));
            auto au = d_squared_audit(dc);
            CHECK(au.printed_ok);
        }
    }
}

TEST_CASE("basis independence") {
    Setup s(4);
    auto X = simple_quotient(s.alg, E_of(s.alg, "[0,1];[-1,0]"));
    auto dc = dirac_matrix(s.alg, *s.cover, X);
    for (std::vector<int> order : {std::vector<int>{2, 1, 0}, std::vector<int>{1, 2, 0}}) {
        auto ctx2 = build_spin_context(s.alg.rs, order);
        CHECK(dirac_matrix_onb(s.alg, ctx2, X) == dc.D);
    }
}

TEST_CASE("cohomology values") {
    Setup s(4);
    auto h0 = dirac_cohomology(dirac_matrix(s.alg, *s.cover, E_of(s.alg, "[0,1];[-1,0]")));
    CHECK(h0.dim == 0);

    auto L = simple_quotient(s.alg, E_of(s.alg, "[0,1];[-1,0]"));
    CHECK(L.dim == 2);
    auto h1 = dirac_cohomology(dirac_matrix(s.alg, *s.cover, L));
    CHECK(hd_dim(h1, 1) == 4);
    CHECK(hd_dim(h1, -1) == 4);
    CHECK(decompose(*s.cover, hd_character(h1, 1)).str() == "(3,1)");

    auto L2 = simple_quotient(s.alg, E_of(s.alg, "[0,2];[-1,-1]"));
    auto h2 = dirac_cohomology(dirac_matrix(s.alg, *s.cover, L2));
    CHECK(decompose(*s.cover, hd_character(h2, 1)).str() == "(4)+");
    CHECK(decompose(*s.cover, hd_character(h2, -1)).str() == "(4)-");
    auto cc = central_character(s.alg, L2);
    REQUIRE(cc);
    auto rep = vogan_check(s.alg, *s.cover, hd_character(h2, 1), *cc, Rat(1));
    CHECK(rep.pass);
    REQUIRE(rep.rows.size() == 1);
    CHECK(rep.rows[0].a == Scalar(5));
}

TEST_CASE("index") {
    Setup s(4);
    auto E = E_of(s.alg, "[0,2];[-1,-1]");
    auto X = extend_to_graded(s.alg, E);
    CHECK(is_zero_function(dirac_index(s.alg, *s.cover, X)));
    auto h = dirac_cohomology(dirac_matrix(s.alg, *s.cover, X));
    CHECK(is_zero_function(hd_index(h)));
    // tempered: index equals H_D^+ - H_D^-
    auto T = graded_version(s.alg, E_of(s.alg, "[-1,1];[0,0]"));
    auto ht = dirac_cohomology(dirac_matrix(s.alg, *s.cover, T));
    auto di = dirac_index(s.alg, *s.cover, T), hi = hd_index(ht);
    CHECK(di.values == hi.values);
}

}
