#pragma once
// Finite groups given by multiplication tables, partitions, and character tables
// computed by the Burnside-Dixon method.
#include "hd/scalar.hpp"

#include <memory>
#include <string>
#include <vector>

namespace hd {

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);  // sorts, drops zeros
    int size() const;
    int length() const { return (int)parts.size(); }
    Partition transpose() const;
    // Hook length of the box in row i, column j (0-based).
    int hook(int i, int j) const;
    bool distinct_parts() const;
    std::string str() const;  // "(3,1)"
    friend bool operator==(const Partition& a, const Partition& b) { return a.parts == b.parts; }
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts < b.parts; }
};

// All partitions of n, reverse lexicographic ((n) first).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> strict_partitions_of(int n);
// a dominates b (same size).
bool dominates(const Partition& a, const Partition& b);
// Murnaghan-Nakayama: irreducible S_n character lambda on cycle type mu.
long long mn_character(const Partition& lambda, const Partition& mu);
long long factorial(int n);

// Class data shared by class functions of one group.
struct ClassData {
    long long group_order = 0;
    std::vector<long long> sizes;
    std::vector<int> reps;                 // element index of the representative
    std::vector<std::vector<int>> words;   // representative words, if meaningful
    std::vector<int> orders;               // element order of the representative
};

struct ClassFunction {
    std::shared_ptr<const ClassData> classes;
    std::vector<Scalar> values;

    Scalar degree() const { return values.at(0); }
};

// (1/|G|) sum |C| a(C) conj(b(C)).
Scalar inner_product(const ClassFunction& a, const ClassFunction& b);
// Inner product returned as a non-negative integer; throws if non-integral.
long long multiplicity(const ClassFunction& chi, const ClassFunction& sigma);

class FiniteGroup {
public:
    FiniteGroup() = default;
    // table[a*n+b] = index of a*b; element 0 must be the identity.
    FiniteGroup(int n, std::vector<int> table, std::vector<int> gens,
                std::vector<std::vector<int>> words = {});

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[(size_t)a * n_ + b]; }
    int inv(int a) const { return inv_[a]; }
    int elt_order(int a) const { return ord_[a]; }
    const std::vector<int>& gens() const { return gens_; }
    int num_classes() const { return (int)members_.size(); }
    int class_of(int a) const { return cls_[a]; }
    const std::vector<int>& class_members(int c) const { return members_[c]; }
    std::shared_ptr<const ClassData> class_data() const { return data_; }
    // Class of g^k for the representative of class c.
    int power_class(int c, int k) const;

private:
    int n_ = 0;
    std::vector<int> table_, inv_, ord_, gens_, cls_;
    std::vector<std::vector<int>> members_;
    std::shared_ptr<ClassData> data_;
};

struct CharTable {
    std::shared_ptr<const ClassData> classes;
    std::vector<ClassFunction> chars;
    std::vector<std::string> labels;  // filled by callers that know a labelling

    int num() const { return (int)chars.size(); }
    int find(const std::string& label) const;
};

// Irreducible characters; rows sorted by degree then by values, trivial first.
CharTable dixon_char_table(const FiniteGroup& g);

// Exact orthogonality checks (both relations).
bool check_orthogonality(const CharTable& t);

}  // namespace hd
