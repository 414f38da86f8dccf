#pragma once
// Graded Hecke algebra H(V, W, c, r) and finite-dimensional modules given by the
// matrices of the generators t_s (simple reflections) and e_j (coordinates of V).
#include "hd/segments.hpp"
#include "hd/weyl.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hd {

struct HAlgebra {
    RootSystem rs;
    std::shared_ptr<const WeylGroup> W;
    Rat r{1};
    // Override of the parameter function; c0 = true degenerates to c = 0.
    bool c_zero = false;

    static HAlgebra make(const RootSystem& rs, Rat r = Rat(1));
    Rat c(const IVec& a) const { return c_zero ? Rat(0) : rs.c(a); }
    int dim() const { return rs.dim; }
    int rank() const { return rs.rank; }
    // Simple index j' with s_{j'} = w0 s_j w0.
    int theta_simple(int j) const;
};

// Data of a module induced from a one-dimensional character of H_J.
struct InductionData {
    std::vector<int> J;     // simple indices
    std::vector<int> eps;   // t_s -> eps on s in J (parallel to J)
    QVec weight;            // S(V)-weight of the inducing line
    std::vector<int> reps;  // minimal coset representatives, basis order
};

struct Grading {
    Subspace plus, minus;
    Mat op;  // involution with the two eigenspaces
    std::string how;
};

struct HModule {
    int dim = 0;
    std::vector<Mat> t;  // per simple reflection
    std::vector<Mat> v;  // per coordinate vector e_j of V
    std::optional<Grading> grading;
    std::string provenance;
    std::optional<Vec> generator;
    std::optional<QVec> generator_weight;
    std::optional<InductionData> induced;
    std::shared_ptr<std::map<int, Mat>> t_cache = std::make_shared<std::map<int, Mat>>();
};

struct AuditResult {
    bool ok = true;
    std::string failure;
};
// Quadratic, braid, commutativity and cross relations, plus grading compatibility.
AuditResult audit(const HAlgebra& alg, const HModule& X);

// t_w along the stored reduced word (cached on the module).
const Mat& t_elem(const HAlgebra& alg, const HModule& X, int w);
Mat v_of(const HModule& X, const QVec& v);
// v~ = v - (r/2) sum_{a>0} c_a a^vee(v) t_{s_a}.
Mat vtilde_matrix(const HAlgebra& alg, const HModule& X, const QVec& v);

// H (x)_{H_J} C with t_s -> eps_s (s in J), v -> weight(v). Checks the character exists.
HModule induce(const HAlgebra& alg, const std::vector<int>& J, const std::vector<int>& eps,
               const QVec& weight, std::string provenance = "induced");
// Type A: E(m), inducing the sign character with weights a_i, a_i+1, ..., b_i.
HModule induce_multisegment(const HAlgebra& alg, const Multisegment& m);
QVec multisegment_weight(const Multisegment& m);
std::vector<int> multisegment_J(const Multisegment& m);

HModule theta_twist(const HAlgebra& alg, const HModule& X);
HModule im_dual(const HAlgebra& alg, const HModule& X);
HModule module_sum(const HModule& a, const HModule& b);

// Basis of Hom_H(E, Y) for E induced from a one-dimensional character (Frobenius reciprocity).
std::vector<Mat> homs_from_induced(const HAlgebra& alg, const HModule& E, const HModule& Y);
// Basis of all maps P with P X(h) = Y(h) P, by a direct linear solve (small modules).
std::vector<Mat> intertwiners(const HModule& X, const HModule& Y);
// An isomorphism X -> Y, if one is found among the Frobenius-reciprocity maps.
std::optional<Mat> find_isomorphism(const HAlgebra& alg, const HModule& X, const HModule& Y);

// Z2-grading from an isomorphism X ~ theta(X): eigenspaces of t_{w0} phi with phi normalized
// to an involution. Returns nullopt if X is not isomorphic to theta(X).
std::optional<HModule> z2_grading(const HAlgebra& alg, const HModule& X);
// X (+) theta(X) with the swap grading.
HModule extend_to_graded(const HAlgebra& alg, const HModule& X);
// z2_grading when possible, else extend_to_graded.
HModule graded_version(const HAlgebra& alg, const HModule& X);

struct WeightMult {
    QVec weight;
    int mult = 0;
};
std::vector<WeightMult> weights(const HAlgebra& alg, const HModule& X);
// Canonical W-orbit representative: type A sorted ascending; type C absolute values ascending.
QVec orbit_rep(const RootSystem& rs, QVec s);
std::optional<QVec> central_character(const HAlgebra& alg, const HModule& X);

// Weight test omega_j(s) >= 0 (sign = +1) or <= 0 (sign = -1) for every weight and every j.
bool is_tempered(const HAlgebra& alg, const HModule& X, int sign);
bool weight_tempered(const RootSystem& rs, const QVec& s, int sign);

// W-character of X (trace of t_w on class representatives).
ClassFunction w_character(const HAlgebra& alg, const HModule& X);
// Character of Ind_{W_J}^W(eps) directly from the group.
ClassFunction induced_w_character(const WeylGroup& W, const std::vector<int>& J, const std::vector<int>& eps);

struct QuotientInfo {
    std::string method;   // "dual-spin" or "min-spin"
    int generator_weight_mult = 0;
    bool certified = false;
};
// Unique simple quotient of a cyclic module with a generator that is a weight vector.
HModule simple_quotient(const HAlgebra& alg, const HModule& E, QuotientInfo* info = nullptr);

// Submodule spanned by H applied to the given vectors.
Subspace spin_submodule(const HModule& X, const std::vector<Vec>& seeds);

// Type C standard modules induced from one-dimensional characters.
struct TypeCChar {
    std::vector<int> J, eps;
    QVec weight;
};
// Checks the two weight conditions (paper sign: omega^J(gamma) >= 0 on J, nu(alpha) < 0 off J).
bool typec_is_standard(const HAlgebra& alg, const TypeCChar& ch, std::string* why = nullptr);
// Weight of the one-dimensional H_J character: lambda(alpha) = eps r c_alpha on J, plus nu in
// the orthogonal complement of span J.
std::optional<QVec> typec_char_weight(const HAlgebra& alg, const std::vector<int>& J,
                                      const std::vector<int>& eps, const QVec& nu);
HModule typec_standard(const HAlgebra& alg, const TypeCChar& ch);

}  // namespace hd
