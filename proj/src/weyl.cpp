#include "hd/weyl.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hd {

std::string RootSystem::label() const {
    return std::string(type == RootType::A ? "A" : "C") + std::to_string(rank);
}

int RootSystem::norm2(const IVec& a) const {
    int s = 0;
    for (int x : a) s += x * x;
    return s;
}

int RootSystem::positive_index(const IVec& a) const {
    IVec neg(a);
    for (auto& x : neg) x = -x;
    for (size_t k = 0; k < positive.size(); ++k)
        if (positive[k] == a || positive[k] == neg) return (int)k;
    return -1;
}

Rat RootSystem::coroot(const IVec& a, const QVec& v) const {
    Rat s;
    for (int i = 0; i < dim; ++i)
        if (a[i]) s += Rat(a[i]) * v[i];
    return s * Rat(2, norm2(a));
}

QVec RootSystem::reflect(const IVec& a, const QVec& v) const {
    Rat c = coroot(a, v);
    QVec out(v);
    for (int i = 0; i < dim; ++i)
        if (a[i]) out[i] -= c * Rat(a[i]);
    return out;
}

Rat RootSystem::omega(int j, const QVec& v) const {
    Rat s;
    for (int k = 0; k <= j; ++k) s += v[k];
    if (type == RootType::A) {
        Rat tot;
        for (int k = 0; k < dim; ++k) tot += v[k];
        s -= tot * Rat(j + 1, dim);
    }
    return s;
}

RootSystem build_root_system(char label, int rank, std::optional<Rat> m) {
    RootSystem rs;
    if (rank < 1) throw std::invalid_argument("build_root_system: rank must be positive");
    if (label == 'A') {
        if (m) throw std::invalid_argument("build_root_system: m is only meaningful for type C");
        rs.type = RootType::A;
        rs.rank = rank;
        rs.dim = rank + 1;
        for (int i = 0; i < rs.dim; ++i)
            for (int j = i + 1; j < rs.dim; ++j) {
                IVec a(rs.dim, 0);
                a[i] = 1;
                a[j] = -1;
                rs.positive.push_back(a);
            }
        for (int j = 0; j < rank; ++j) {
            IVec a(rs.dim, 0);
            a[j] = 1;
            a[j + 1] = -1;
            rs.simple.push_back(rs.positive_index(a));
        }
    } else if (label == 'C') {
        if (!m) throw std::invalid_argument("build_root_system: type C needs m");
        rs.type = RootType::C;
        rs.rank = rank;
        rs.dim = rank;
        rs.m = *m;
        for (int i = 0; i < rank; ++i)
            for (int j = i + 1; j < rank; ++j) {
                IVec a(rank, 0), b(rank, 0);
                a[i] = 1, a[j] = -1;
                b[i] = 1, b[j] = 1;
                rs.positive.push_back(a);
                rs.positive.push_back(b);
            }
        for (int i = 0; i < rank; ++i) {
            IVec a(rank, 0);
            a[i] = 2;
            rs.positive.push_back(a);
        }
        for (int j = 0; j + 1 < rank; ++j) {
            IVec a(rank, 0);
            a[j] = 1, a[j + 1] = -1;
            rs.simple.push_back(rs.positive_index(a));
        }
        IVec a(rank, 0);
        a[rank - 1] = 2;
        rs.simple.push_back(rs.positive_index(a));
    } else {
        throw std::invalid_argument(std::string("build_root_system: unknown type ") + label);
    }
    for (auto& a : rs.positive) {
        rs.roots.push_back(a);
        IVec n(a);
        for (auto& x : n) x = -x;
        rs.roots.push_back(n);
    }
    return rs;
}

// ---------------------------------------------------------------- Weyl group

uint64_t WeylGroup::key(const SignedPerm& p) {
    uint64_t k = 0;
    for (int8_t x : p) k = k * 32 + (uint64_t)(x + 16);
    return k;
}

SignedPerm WeylGroup::compose(const SignedPerm& a, const SignedPerm& b) const {
    // (ab)(e_i) = a(b(e_i))
    SignedPerm c(b.size());
    for (size_t i = 0; i < b.size(); ++i) {
        int bi = b[i], j = std::abs(bi) - 1;
        int aj = a[j];
        c[i] = (int8_t)(bi > 0 ? aj : -aj);
    }
    return c;
}

WeylGroup::WeylGroup(const RootSystem& rs) : rs_(rs) {
    long long bound = rs.type == RootType::A ? factorial(rs.dim) : factorial(rs.dim) << rs.dim;
    if (bound > kMaxOrder) throw std::length_error("weyl group order exceeds " + std::to_string(kMaxOrder));
    int d = rs.dim;
    std::vector<SignedPerm> gens;
    for (int j = 0; j < rs.rank; ++j) {
        SignedPerm s(d);
        for (int i = 0; i < d; ++i) s[i] = (int8_t)(i + 1);
        if (rs.type == RootType::C && j == rs.rank - 1) {
            s[d - 1] = (int8_t)(-d);
        } else {
            std::swap(s[j], s[j + 1]);
        }
        gens.push_back(s);
    }
    SignedPerm id(d);
    for (int i = 0; i < d; ++i) id[i] = (int8_t)(i + 1);
    elts_.push_back(id);
    len_.push_back(0);
    parent_.push_back(-1);
    last_.push_back(-1);
    index_[key(id)] = 0;
    // Breadth first with right multiplication in generator order: the first path found
    // to each element is its lexicographically least reduced word.
    for (size_t q = 0; q < elts_.size(); ++q) {
        for (int j = 0; j < rs.rank; ++j) {
            SignedPerm x = compose(elts_[q], gens[j]);
            uint64_t k = key(x);
            if (index_.count(k)) continue;
            index_[k] = (int)elts_.size();
            elts_.push_back(x);
            len_.push_back(len_[q] + 1);
            parent_.push_back((int)q);
            last_.push_back(j);
        }
    }
    for (auto& g : gens) simple_idx_.push_back(index_.at(key(g)));
    longest_ = (int)elts_.size() - 1;
    for (auto& a : rs.positive) {
        SignedPerm p(d);
        QVec e(d);
        for (int i = 0; i < d; ++i) {
            QVec v(d, Rat(0));
            v[i] = Rat(1);
            QVec r = rs.reflect(a, v);
            for (int t = 0; t < d; ++t)
                if (!r[t].is_zero()) p[i] = (int8_t)(r[t].sign() * (t + 1));
        }
        refl_.push_back(index_.at(key(p)));
    }
}

std::vector<int> WeylGroup::word(int k) const {
    std::vector<int> w;
    for (int x = k; parent_[x] >= 0; x = parent_[x]) w.push_back(last_[x]);
    std::reverse(w.begin(), w.end());
    return w;
}

int WeylGroup::index_of(const SignedPerm& p) const {
    auto it = index_.find(key(p));
    return it == index_.end() ? -1 : it->second;
}

int WeylGroup::mul(int a, int b) const {
    if (group_) return group_->mul(a, b);
    return index_.at(key(compose(elts_[a], elts_[b])));
}

int WeylGroup::inv(int a) const {
    const SignedPerm& p = elts_[a];
    SignedPerm q(p.size());
    for (size_t i = 0; i < p.size(); ++i) {
        int j = std::abs(p[i]) - 1;
        q[j] = (int8_t)(p[i] > 0 ? (int)i + 1 : -((int)i + 1));
    }
    return index_.at(key(q));
}

QVec WeylGroup::act(int k, const QVec& v) const {
    const SignedPerm& p = elts_[k];
    QVec out(v.size());
    for (size_t i = 0; i < p.size(); ++i) {
        int j = std::abs(p[i]) - 1;
        out[j] = p[i] > 0 ? v[i] : -v[i];
    }
    return out;
}

IVec WeylGroup::act(int k, const IVec& v) const {
    const SignedPerm& p = elts_[k];
    IVec out(v.size());
    for (size_t i = 0; i < p.size(); ++i) {
        int j = std::abs(p[i]) - 1;
        out[j] = p[i] > 0 ? v[i] : -v[i];
    }
    return out;
}

Mat WeylGroup::matrix(int k) const {
    const SignedPerm& p = elts_[k];
    int d = (int)p.size();
    Mat m(d, d);
    for (int i = 0; i < d; ++i) m(std::abs(p[i]) - 1, i) = Scalar(p[i] > 0 ? 1 : -1);
    return m;
}

Partition WeylGroup::cycle_type(int k) const {
    const SignedPerm& p = elts_[k];
    int d = (int)p.size();
    std::vector<char> seen(d, 0);
    std::vector<int> parts;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (int j = i; !seen[j]; j = std::abs(p[j]) - 1) { seen[j] = 1; ++len; }
        parts.push_back(len);
    }
    return Partition(parts);
}

const FiniteGroup& WeylGroup::group() const {
    if (!group_) {
        int n = order();
        if (n > kMaxTable) throw std::length_error("group too large for a multiplication table");
        std::vector<int> table((size_t)n * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) table[(size_t)a * n + b] = index_.at(key(compose(elts_[a], elts_[b])));
        std::vector<std::vector<int>> words;
        for (int k = 0; k < n; ++k) words.push_back(word(k));
        group_ = std::make_unique<FiniteGroup>(n, std::move(table), simple_idx_, std::move(words));
    }
    return *group_;
}

const CharTable& WeylGroup::char_table() const {
    if (!table_) {
        const FiniteGroup& g = group();
        auto t = std::make_unique<CharTable>(dixon_char_table(g));
        if (rs_.type == RootType::A) {
            // Label by partitions through Murnaghan-Nakayama and order as partitions_of.
            auto parts = partitions_of(rs_.dim);
            std::vector<ClassFunction> sorted;
            for (auto& lam : parts) {
                int found = -1;
                for (int r = 0; r < t->num() && found < 0; ++r) {
                    bool ok = true;
                    for (int c = 0; c < g.num_classes() && ok; ++c)
                        ok = t->chars[r].values[c] == Scalar(mn_character(lam, cycle_type(g.class_data()->reps[c])));
                    if (ok) found = r;
                }
                if (found < 0) throw std::runtime_error("char_table: Murnaghan-Nakayama cross-check failed for " + lam.str());
                sorted.push_back(t->chars[found]);
                t->labels.push_back(lam.str());
            }
            t->chars = sorted;
        } else {
            for (int r = 0; r < t->num(); ++r) t->labels.push_back("chi" + std::to_string(r));
        }
        table_ = std::move(t);
    }
    return *table_;
}

ClassFunction character_from_traces(const WeylGroup& w, const std::vector<Scalar>& trace_per_class) {
    ClassFunction cf;
    cf.classes = w.group().class_data();
    cf.values = trace_per_class;
    return cf;
}

}  // namespace hd
