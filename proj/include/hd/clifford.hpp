#pragma once
// Clifford algebra of V', spin modules, and the spin double cover of W as a matrix group.
#include "hd/weyl.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hd {

// The spin module is realized inside the Clifford module of the coordinate space U
// (U = V for type A and for even type C, one extra coordinate for odd type C).
// This keeps every matrix entry in Q(i); radicals only enter through |alpha| and
// through orthonormal bases.
struct SpinContext {
    RootSystem rs;
    int n = 0;           // dim V'
    int spin_dim = 0;    // size of S_full: S for even n, S+ (+) S- for odd n
    bool odd = false;
    std::vector<Mat> gammas;  // ambient generators on U coordinates
    std::vector<Mat> G;       // g~ of the projection of e_j to V', j < dim V
    std::vector<Vec> onb;     // orthonormal basis of V' in e-coordinates (Gram-Schmidt)
    std::vector<int> onb_order;  // processing order of simple roots
    std::vector<Mat> onb_gammas; // g~_{e_i}
    Mat omega_hat;               // odd n: normalized volume element, squares to 1, central
    Subspace s_plus, s_minus;    // odd n: eigenspaces of omega_hat in S_full

    // g~_v for v in V (only its projection to V' matters).
    Mat gtilde(const QVec& v) const;
    Mat gtilde(const IVec& v) const;
    // Unnormalized root element g~_alpha; stilde = g~_alpha / |alpha|.
    Mat groot(int pos_root) const { return gtilde(rs.positive[pos_root]); }
    Mat stilde(int pos_root) const;
    // Generators restricted to one simple module: sign = +1/-1 picks S+/S- for odd n.
    std::vector<Mat> gammas_on(int sign) const;
    int simple_dim() const { return odd ? spin_dim / 2 : spin_dim; }
};

// `order` permutes the processing order of simple roots in Gram-Schmidt (default identity).
SpinContext build_spin_context(const RootSystem& rs, std::vector<int> order = {});

// The spin cover W~ with elements indexed 2*w + b, meaning (-1)^b L(w), where L(w) is the
// product of s~_j along the stored reduced word of w.
class SpinCover {
public:
    SpinCover(const WeylGroup& w, const SpinContext& ctx);

    const WeylGroup& weyl() const { return *w_; }
    const SpinContext& ctx() const { return *ctx_; }
    int order() const { return 2 * w_->order(); }
    static int minus_one() { return 1; }
    static int project(int e) { return e / 2; }
    static bool negated(int e) { return e % 2; }
    int mul(int a, int b) const { return group_.mul(a, b); }
    const FiniteGroup& group() const { return group_; }
    // Lift of s_alpha with its sign: the element equal to g~_alpha/|alpha|.
    int stilde_elt(int pos_root) const { return stilde_[pos_root]; }

    // Unnormalized product of g~_{alpha_j} along the word of w, and |L|^2 normalizer:
    // L(w) = lift_raw(w) / sqrt(norm2(w)).
    const Mat& lift_raw(int w) const { return raw_[w]; }
    const Rat& norm2(int w) const { return n2_[w]; }
    Scalar norm(int w) const;
    Mat lift(int e) const;  // exact matrix on S_full

    // Character of the spin module S_full (and of S+/S- for odd n).
    ClassFunction spin_module_character(int sign = 0) const;

    const CharTable& char_table() const;  // all irreducibles, labelled
    const std::vector<int>& genuine() const;  // indices into char_table
    bool is_genuine(int k) const;
    // Index of the irreducible sgn (x) sigma.
    int associate(int k) const;
    // Sign character of W pulled back to W~.
    ClassFunction sign_character() const;

private:
    const WeylGroup* w_;
    const SpinContext* ctx_;
    std::vector<Mat> raw_;
    std::vector<Rat> n2_;
    std::vector<int> stilde_;
    FiniteGroup group_;
    mutable std::unique_ptr<CharTable> table_;
    mutable std::vector<int> genuine_;
};

// Closed-form dimension of the spin irreducible for a strict partition.
long long spin_irrep_dimension(const Partition& lambda);
bool is_dp_plus(const Partition& lambda);  // l - length even
Scalar epsilon_of(const Partition& lambda);  // 1 or sqrt 2

}  // namespace hd
