#pragma once
// Dirac operator D = sum_i e~_i (x) g~_{e_i} on X (x) S, Dirac cohomology as a W~-module,
// the D^2 identity, a-values and the Dirac index.
#include "hd/clifford.hpp"
#include "hd/hecke.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hd {

struct DiracContext {
    const HAlgebra* alg = nullptr;
    const SpinCover* cover = nullptr;
    HModule X;
    Mat D;          // on X (x) S_full
    int sdim = 0;   // dim S_full
    std::vector<Mat> vt;  // e~_j per coordinate of V

    // Delta(e) = t_w (x) lift(e) for e in W~.
    Mat delta(int e) const;
    int dim() const { return X.dim * sdim; }
};

DiracContext dirac_matrix(const HAlgebra& alg, const SpinCover& cover, const HModule& X);
// The same element written over the orthonormal basis of another spin context (e.g. a
// Gram-Schmidt run in a different order); must agree with dirac_matrix exactly.
Mat dirac_matrix_onb(const HAlgebra& alg, const SpinContext& ctx, const HModule& X);

bool anticommutation_ok(const DiracContext& dc);

struct D2Audit {
    bool printed_ok = false;  // first term -sum e_i^2 (x) 1
    bool tilde_ok = false;    // first term -sum e~_i^2 (x) 1
};
// Both readings of D^2 = -sum e_i^2 (x) 1 - (r^2/4) sum c_a c_b |a||b| s_a s_b (x) s~_a s~_b.
D2Audit d_squared_audit(const DiracContext& dc);
// The W~-part (r^2/4) sum c c |a||b| t_{s_a} t_{s_b} (x) s~_a s~_b (no sign).
Mat omega_term(const DiracContext& dc);

struct Decomposition {
    std::vector<std::pair<std::string, long long>> parts;  // label, multiplicity
    std::string str() const;
};
Decomposition decompose(const SpinCover& cover, const ClassFunction& chi);

struct DiracCohomology {
    int dim = 0;
    Subspace ker, kerim;
    ClassFunction character;           // on S_full
    // odd dim V': pieces in X (x) S+ and X (x) S-
    std::optional<ClassFunction> char_splus, char_sminus;
    int dim_splus = 0, dim_sminus = 0;
    // graded X: H_D^+ and H_D^-
    std::optional<ClassFunction> char_plus, char_minus;
    int dim_plus = 0, dim_minus = 0;
};
DiracCohomology dirac_cohomology(const DiracContext& dc);
// Character of H_D for the chosen simple spin module: sign +1/-1 picks S+/S- for odd n;
// for even n both give the full character.
const ClassFunction& hd_character(const DiracCohomology& h, int sign);
int hd_dim(const DiracCohomology& h, int sign);

// a(s~) = -(1/4) sum c_a c_b |a||b| chi(s~_a s~_b) / chi(1), scalarity re-checked on sigma
// when a matrix realization is available.
Scalar a_value(const HAlgebra& alg, const SpinCover& cover, const ClassFunction& sigma);
Rat norm2_vprime(const RootSystem& rs, const QVec& s);

struct VoganRow {
    std::string label;
    Scalar a, lhs;  // lhs = kappa <s,s>
    bool ok = false;
};
struct VoganReport {
    bool pass = true;
    std::vector<VoganRow> rows;
};
// For each irreducible in the character: kappa <s,s>_{V'} == r^2 a(sigma).
VoganReport vogan_check(const HAlgebra& alg, const SpinCover& cover, const ClassFunction& hd_char,
                        const QVec& s, const Rat& kappa);

// (X+ - X-) (x) Sfull as a W~-class function, from the grading operator.
ClassFunction dirac_index(const HAlgebra& alg, const SpinCover& cover, const HModule& X);
// H_D^+ - H_D^- on S_full.
ClassFunction hd_index(const DiracCohomology& h);
bool is_zero_function(const ClassFunction& f);

}  // namespace hd
