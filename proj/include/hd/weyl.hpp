#pragma once
// Root systems of types A_{l-1} and C_n, their Weyl groups as signed permutations,
// and ordinary character tables.
#include "hd/group.hpp"
#include "hd/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace hd {

using IVec = std::vector<int>;
using QVec = std::vector<Rat>;

enum class RootType { A, C };

struct RootSystem {
    RootType type = RootType::A;
    int rank = 0;  // number of simple roots
    int dim = 0;   // dimension of V: l for A_{l-1}, n for C_n
    Rat m;         // long-root parameter for type C
    std::vector<IVec> roots, positive;
    std::vector<int> simple;  // indices into positive, in simple-root order

    std::string label() const;  // "A2", "C2"
    int norm2(const IVec& a) const;
    // Positive-root index of +-a, or -1.
    int positive_index(const IVec& a) const;
    bool is_long(const IVec& a) const { return type == RootType::C && norm2(a) == 4; }
    Rat c(const IVec& a) const { return is_long(a) ? m : Rat(1); }
    // a^vee(v) = 2<a,v>/<a,a>.
    Rat coroot(const IVec& a, const QVec& v) const;
    QVec reflect(const IVec& a, const QVec& v) const;
    const IVec& simple_root(int j) const { return positive[simple[j]]; }
    // Dimension of V' (span of the roots).
    int dim_vprime() const { return type == RootType::A ? dim - 1 : dim; }
    // Fundamental coweight pairing used for temperedness: omega_j(v) with
    // omega_j the dual basis of the simple coroots, restricted to V'.
    Rat omega(int j, const QVec& v) const;
};

// label 'A' with rank n builds A_n on l = n+1 coordinates; label 'C' needs m.
RootSystem build_root_system(char label, int rank, std::optional<Rat> m = std::nullopt);

// A Weyl group element acting on coordinates: w(e_i) = sign * e_{|img_i|-1}.
using SignedPerm = std::vector<int8_t>;

class WeylGroup {
public:
    static constexpr long long kMaxOrder = 3628800;  // 10!
    static constexpr long long kMaxTable = 2880;     // multiplication tables

    explicit WeylGroup(const RootSystem& rs);

    const RootSystem& roots() const { return rs_; }
    int order() const { return (int)elts_.size(); }
    const SignedPerm& perm(int k) const { return elts_[k]; }
    std::vector<int> word(int k) const;   // lexicographically least reduced word
    int length(int k) const { return len_[k]; }
    int parent(int k) const { return parent_[k]; }     // elt(k) = elt(parent) * s_{last_gen}
    int last_gen(int k) const { return last_[k]; }
    int simple(int j) const { return simple_idx_[j]; }
    int index_of(const SignedPerm& p) const;
    int mul(int a, int b) const;
    int inv(int a) const;
    int longest() const { return longest_; }
    QVec act(int k, const QVec& v) const;
    IVec act(int k, const IVec& v) const;
    Mat matrix(int k) const;  // on the coordinate basis of V
    // Index of the reflection s_a for a positive root index.
    int reflection(int pos_root) const { return refl_[pos_root]; }
    // Cycle type (type A only).
    Partition cycle_type(int k) const;

    // Multiplication table and conjugacy classes (bounded size).
    const FiniteGroup& group() const;
    const CharTable& char_table() const;

private:
    RootSystem rs_;
    std::vector<SignedPerm> elts_;
    std::vector<int> len_, parent_, last_, simple_idx_, refl_;
    std::unordered_map<uint64_t, int> index_;
    int longest_ = 0;
    mutable std::unique_ptr<FiniteGroup> group_;
    mutable std::unique_ptr<CharTable> table_;

    static uint64_t key(const SignedPerm& p);
    SignedPerm compose(const SignedPerm& a, const SignedPerm& b) const;
};

// Permutation character of W on a module given by its t-matrices: trace of t_w per class.
ClassFunction character_from_traces(const WeylGroup& w, const std::vector<Scalar>& trace_per_class);

}  // namespace hd
