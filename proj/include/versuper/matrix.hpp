#ifndef VERSUPER_MATRIX_HPP
#define VERSUPER_MATRIX_HPP

#include "versuper/gf.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace versuper {

using Vec = std::vector<GF>;

Vec vec_zero(int n, int deg);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& x, const Vec& y);
Vec vec_scale(GF c, const Vec& x);

// Dense matrix over GF(2^m), row major.  Subspaces are handled as matrices
// whose columns form a (not necessarily reduced) basis.
class Mat {
  public:
    Mat() : rows_(0), cols_(0), deg_(1) {}
    Mat(int rows, int cols, int deg)
        : rows_(rows), cols_(cols), deg_(deg), e_(size_t(rows) * cols, GF::zero(deg)) {}

    static Mat identity(int n, int deg);
    static Mat from_cols(const std::vector<Vec>& cols, int rows, int deg);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int degree() const { return deg_; }

    GF at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    void set(int i, int j, GF v) { e_[size_t(i) * cols_ + j] = v; }

    Vec col(int j) const;
    Vec row(int i) const;
    Mat cols_subset(const std::vector<int>& idx) const;

    friend Mat operator*(const Mat& a, const Mat& b);
    friend Mat operator+(const Mat& a, const Mat& b);
    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Vec apply(const Vec& v) const;
    Mat transpose() const;
    // Kronecker product; (a (x) b)(iV*nW+jW ...) in lexicographic index order.
    static Mat kron(const Mat& a, const Mat& b);

    bool is_zero() const;
    int rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }
    Mat inverse() const;

    // Columns of this matrix that are independent of everything before them
    // (deterministic greedy sweep in column order).
    std::vector<int> independent_cols() const;
    // Basis of the column space as a matrix, picked by the greedy sweep.
    Mat col_space() const;
    // Basis of the right kernel (columns).
    Mat kernel() const;

    // Append columns of b to the right.
    Mat augment_cols(const Mat& b) const;

  private:
    int rows_, cols_, deg_;
    std::vector<GF> e_;
};

// Solves A x = b.  Returns a particular solution and a basis of the kernel of
// A, or nullopt when the system is inconsistent.
struct LinSolution {
    Vec particular;
    Mat kernel;
};
std::optional<LinSolution> solve_linear(const Mat& a, const Vec& b);

// Is v in the column span of basis?
bool in_span(const Mat& basis, const Vec& v);
// Coordinates of v in the columns of basis (which must be independent).
std::optional<Vec> coords_in(const Mat& basis, const Vec& v);
// rank of the union of two column spans.
int span_union_rank(const Mat& a, const Mat& b);
// Do the columns of a and b span the same subspace?
bool same_span(const Mat& a, const Mat& b);

} // namespace versuper

#endif
