#pragma once
// Dense exact matrices over Scalar, reduced echelon subspaces, eigenspace splitting.
#include "hd/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace hd {

using Vec = std::vector<Scalar>;

class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols) : r_(rows), c_(cols), a_((size_t)rows * cols) {}
    static Mat identity(int n, const Scalar& diag = Scalar(1));
    static Mat from_rows(const std::vector<Vec>& rows, int cols = -1);
    static Mat column(const Vec& v);

    int rows() const { return r_; }
    int cols() const { return c_; }
    Scalar& operator()(int i, int j) { return a_[(size_t)i * c_ + j]; }
    const Scalar& operator()(int i, int j) const { return a_[(size_t)i * c_ + j]; }
    Vec row(int i) const { return Vec(a_.begin() + (size_t)i * c_, a_.begin() + (size_t)(i + 1) * c_); }
    Vec col(int j) const;
    void set_row(int i, const Vec& v);

    bool is_zero() const;
    bool is_square() const { return r_ == c_; }
    bool is_rational() const;
    bool is_gaussian() const;

    Mat transpose() const;
    Mat scaled(const Scalar& s) const;
    Mat block(int r0, int c0, int nr, int nc) const;
    Vec apply(const Vec& v) const;        // M v (column action)
    Vec apply_left(const Vec& v) const;   // v^T M as a row vector
    Scalar trace() const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend Mat operator-(const Mat& a, const Mat& b);
    Mat operator-() const { return scaled(Scalar(-1)); }
    Mat& operator+=(const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b);
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    std::vector<std::vector<std::string>> to_strings() const;

private:
    int r_ = 0, c_ = 0;
    std::vector<Scalar> a_;
};

Mat kron(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
Mat hstack(const Mat& a, const Mat& b);
Mat direct_sum(const Mat& a, const Mat& b);

// In-place reduced row echelon form; returns pivot columns. Leftmost column first,
// first nonzero row as pivot, pivot rows scaled to 1.
std::vector<int> rref(Mat& m);
int rank(const Mat& m);
std::optional<Mat> inverse(const Mat& m);
// Solve A X = B (any solution); nullopt if inconsistent.
std::optional<Mat> solve(const Mat& a, const Mat& b);

class Subspace {
public:
    Subspace() = default;
    explicit Subspace(int ambient) : n_(ambient), basis_(0, ambient) {}
    static Subspace span(const Mat& rows);  // row span
    static Subspace span(const std::vector<Vec>& vecs, int ambient);
    static Subspace full(int ambient);

    int ambient() const { return n_; }
    int dim() const { return basis_.rows(); }
    const Mat& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return piv_; }
    Vec vec(int k) const { return basis_.row(k); }

    bool contains(const Vec& v) const;
    bool contains(const Subspace& b) const;
    // Coordinates of v (assumed inside) in the echelon basis: read off pivot entries.
    Vec coords(const Vec& v) const { Vec c(dim()); for (int k = 0; k < dim(); ++k) c[k] = v[piv_[k]]; return c; }
    // Matrix of a linear map M (column action) restricted to this M-stable subspace.
    Mat restrict_map(const Mat& m) const;
    // Trace of M on this M-stable subspace.
    Scalar trace_of(const Mat& m) const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.n_ == b.n_ && a.basis_ == b.basis_; }

private:
    int n_ = 0;
    Mat basis_;
    std::vector<int> piv_;
};

Subspace kernel(const Mat& m);
Subspace image(const Mat& m);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
int quotient_dim(const Subspace& a, const Subspace& b);
// Annihilator under the bilinear dot product.
Subspace annihilator(const Subspace& a);
// Image of a subspace under M.
Subspace map_subspace(const Mat& m, const Subspace& s);

// Characteristic polynomial, coefficients low to high, monic.
std::vector<Scalar> charpoly(const Mat& m);
// Rational roots with multiplicity of a polynomial with rational coefficients (low to high).
// Throws if some root is not rational.
std::vector<std::pair<Rat, int>> rational_roots(const std::vector<Scalar>& poly);

struct WeightSpace {
    std::vector<Rat> weight;
    Subspace space;
};
// Generalized simultaneous eigenspaces of pairwise commuting matrices with rational spectra.
// `candidates`, if given, lists the possible weights and skips the characteristic polynomial.
std::vector<WeightSpace> simultaneous_generalized_eigenspaces(
    const std::vector<Mat>& mats, const std::vector<std::vector<Rat>>* candidates = nullptr);

}  // namespace hd
