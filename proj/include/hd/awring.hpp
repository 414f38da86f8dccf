#pragma once
// Graded modules over the skew group ring A_W = S(V) x W, associated graded modules of
// filtered H-modules, Kato modules, and the operator D_A.
//
// A_W is the graded Hecke algebra with c = 0, so A_W-modules are stored as HModules over
// the algebra returned by aw_algebra(); D_A is the Dirac operator of that algebra.
#include "hd/dirac.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hd {

struct AWModule {
    HModule M;                    // t: block diagonal; v: raise maps degree i -> i+1
    std::vector<int> graded_dims; // dims of the pieces, degree 0 first
    int dim() const { return M.dim; }
};

HAlgebra aw_algebra(const HAlgebra& alg);

// Projection onto the isotypic component of chi (as a subspace of X).
Subspace isotypic_component(const HAlgebra& alg, const HModule& X, const ClassFunction& chi);
// W-representation on an X-stable subspace: t-matrices restricted.
std::vector<Mat> restrict_w(const HModule& X, const Subspace& s);

// Filtration X_i = sum_{k <= i} V^k sigma and its associated graded module. Throws
// std::invalid_argument("not a choice of deformation") if sigma does not generate X.
AWModule assoc_graded(const HAlgebra& alg, const HModule& X, const Subspace& sigma);

// tau <= sigma on Irr W (indices into the W character table).
using WOrder = std::function<bool(int tau, int sigma)>;
// Type A closure order transported to W-labels: sigma_nu <= sigma_kappa iff nu dominates kappa.
WOrder type_a_order(const WeylGroup& W);

struct KatoModule {
    AWModule module;
    int sigma = -1;     // index into the W character table
    int truncation = 0; // degrees computed
    bool stabilized = false;
};
// K_sigma = A_W (x)_W sigma truncated to degrees 0..N; sigma given by matrices of the simple
// reflections.
KatoModule kato_free(const HAlgebra& alg, const std::vector<Mat>& sigma_rep, int sigma_index, int N);
// K_sigma modulo images of positive-degree graded maps from K_tau, tau <= sigma.
KatoModule big_kato(const HAlgebra& alg, const std::vector<Mat>& sigma_rep, int sigma_index,
                    const WOrder& order, int N);

// H_{D_A} of a finite-dimensional graded module, with its Delta_A-character.
DiracCohomology dirac_A_cohomology(const HAlgebra& alg, const SpinCover& cover, const AWModule& M);

}  // namespace hd
