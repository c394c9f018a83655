#include "versuper/matrix.hpp"

#include <stdexcept>

namespace versuper {

Vec vec_zero(int n, int deg) { return Vec(n, GF::zero(deg)); }

bool vec_is_zero(const Vec& v) {
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Vec vec_add(const Vec& x, const Vec& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("vec_add: size mismatch");
    Vec r = x;
    for (size_t i = 0; i < r.size(); ++i)
        r[i] += y[i];
    return r;
}

Vec vec_scale(GF c, const Vec& x) {
    Vec r = x;
    for (auto& v : r)
        v *= c;
    return r;
}

Mat Mat::identity(int n, int deg) {
    Mat m(n, n, deg);
    for (int i = 0; i < n; ++i)
        m.set(i, i, GF::one(deg));
    return m;
}

Mat Mat::from_cols(const std::vector<Vec>& cols, int rows, int deg) {
    Mat m(rows, int(cols.size()), deg);
    for (int j = 0; j < int(cols.size()); ++j) {
        if (int(cols[j].size()) != rows)
            throw std::invalid_argument("from_cols: wrong column length");
        for (int i = 0; i < rows; ++i)
            m.set(i, j, cols[j][i]);
    }
    return m;
}

Vec Mat::col(int j) const {
    Vec v(rows_, GF::zero(deg_));
    for (int i = 0; i < rows_; ++i)
        v[i] = at(i, j);
    return v;
}

Vec Mat::row(int i) const {
    Vec v(cols_, GF::zero(deg_));
    for (int j = 0; j < cols_; ++j)
        v[j] = at(i, j);
    return v;
}

Mat Mat::cols_subset(const std::vector<int>& idx) const {
    Mat m(rows_, int(idx.size()), deg_);
    for (int j = 0; j < int(idx.size()); ++j)
        for (int i = 0; i < rows_; ++i)
            m.set(i, j, at(i, idx[j]));
    return m;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_ || a.deg_ != b.deg_)
        throw std::invalid_argument("Mat: dimension/field mismatch in product");
    Mat r(a.rows_, b.cols_, a.deg_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            GF aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (int j = 0; j < b.cols_; ++j) {
                GF bkj = b.at(k, j);
                if (!bkj.is_zero())
                    r.set(i, j, r.at(i, j) + aik * bkj);
            }
        }
    return r;
}

Mat operator+(const Mat& a, const Mat& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.deg_ != b.deg_)
        throw std::invalid_argument("Mat: dimension/field mismatch in sum");
    Mat r = a;
    for (size_t i = 0; i < r.e_.size(); ++i)
        r.e_[i] += b.e_[i];
    return r;
}

Vec Mat::apply(const Vec& v) const {
    if (int(v.size()) != cols_)
        throw std::invalid_argument("Mat: dimension mismatch in apply");
    Vec r(rows_, GF::zero(deg_));
    for (int j = 0; j < cols_; ++j) {
        if (v[j].is_zero())
            continue;
        for (int i = 0; i < rows_; ++i) {
            GF aij = at(i, j);
            if (!aij.is_zero())
                r[i] += aij * v[j];
        }
    }
    return r;
}

Mat Mat::transpose() const {
    Mat r(cols_, rows_, deg_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            r.set(j, i, at(i, j));
    return r;
}

Mat Mat::kron(const Mat& a, const Mat& b) {
    Mat r(a.rows_ * b.rows_, a.cols_ * b.cols_, a.deg_);
    for (int i = 0; i < a.rows_; ++i)
        for (int j = 0; j < a.cols_; ++j) {
            GF aij = a.at(i, j);
            if (aij.is_zero())
                continue;
            for (int p = 0; p < b.rows_; ++p)
                for (int q = 0; q < b.cols_; ++q) {
                    GF v = b.at(p, q);
                    if (!v.is_zero())
                        r.set(i * b.rows_ + p, j * b.cols_ + q, aij * v);
                }
        }
    return r;
}

bool Mat::is_zero() const {
    for (const auto& x : e_)
        if (!x.is_zero())
            return false;
    return true;
}

namespace {

// Row echelon reduction of the transpose view: works directly on a list of
// rows, returns pivot column per row.  Used for everything rank-like.
struct Echelon {
    std::vector<Vec> rows;   // reduced rows, each with a pivot
    std::vector<int> pivots; // pivot column of each row

    // Reduce v against the current rows; returns the remainder.
    Vec reduce(Vec v) const {
        for (size_t r = 0; r < rows.size(); ++r) {
            GF c = v[pivots[r]];
            if (!c.is_zero())
                v = vec_add(v, vec_scale(c, rows[r]));
        }
        return v;
    }

    // Insert v; returns false if v was dependent.
    bool insert(Vec v) {
        v = reduce(std::move(v));
        int p = -1;
        for (int j = 0; j < int(v.size()); ++j)
            if (!v[j].is_zero()) {
                p = j;
                break;
            }
        if (p < 0)
            return false;
        GF inv = v[p].inverse();
        v = vec_scale(inv, v);
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }
};

} // namespace

std::vector<int> Mat::independent_cols() const {
    Echelon e;
    std::vector<int> out;
    for (int j = 0; j < cols_; ++j)
        if (e.insert(col(j)))
            out.push_back(j);
    return out;
}

int Mat::rank() const { return int(independent_cols().size()); }

Mat Mat::col_space() const { return cols_subset(independent_cols()); }

Mat Mat::augment_cols(const Mat& b) const {
    if (rows_ != b.rows_ || deg_ != b.deg_)
        throw std::invalid_argument("Mat: augment_cols mismatch");
    Mat r(rows_, cols_ + b.cols_, deg_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j)
            r.set(i, j, at(i, j));
        for (int j = 0; j < b.cols_; ++j)
            r.set(i, cols_ + j, b.at(i, j));
    }
    return r;
}

std::optional<LinSolution> solve_linear(const Mat& a, const Vec& b) {
    if (int(b.size()) != a.rows())
        throw std::invalid_argument("solve_linear: dimension mismatch");
    const int n = a.cols(), m = a.rows(), deg = a.degree();
    // Gaussian elimination on [A | b] written as columns of length m.
    // We eliminate on rows of the augmented transpose for pivot bookkeeping.
    std::vector<Vec> rows(m, Vec(n + 1, GF::zero(deg)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j)
            rows[i][j] = a.at(i, j);
        rows[i][n] = b[i];
    }
    std::vector<int> pivot_col;
    int r = 0;
    for (int j = 0; j < n && r < m; ++j) {
        int sel = -1;
        for (int i = r; i < m; ++i)
            if (!rows[i][j].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0)
            continue;
        std::swap(rows[sel], rows[r]);
        GF inv = rows[r][j].inverse();
        rows[r] = vec_scale(inv, rows[r]);
        for (int i = 0; i < m; ++i) {
            if (i == r)
                continue;
            GF c = rows[i][j];
            if (!c.is_zero())
                rows[i] = vec_add(rows[i], vec_scale(c, rows[r]));
        }
        pivot_col.push_back(j);
        ++r;
    }
    // Inconsistent iff some zero row has nonzero last entry.
    for (int i = r; i < m; ++i)
        if (!rows[i][n].is_zero())
            return std::nullopt;

    Vec particular(n, GF::zero(deg));
    for (int i = 0; i < r; ++i)
        particular[pivot_col[i]] = rows[i][n];

    std::vector<bool> is_pivot(n, false);
    for (int p : pivot_col)
        is_pivot[p] = true;
    std::vector<Vec> kernel_cols;
    for (int j = 0; j < n; ++j) {
        if (is_pivot[j])
            continue;
        Vec k(n, GF::zero(deg));
        k[j] = GF::one(deg);
        for (int i = 0; i < r; ++i)
            k[pivot_col[i]] = k[pivot_col[i]] + rows[i][j]; // char 2: minus = plus
        kernel_cols.push_back(std::move(k));
    }
    return LinSolution{std::move(particular), Mat::from_cols(kernel_cols, n, deg)};
}

Mat Mat::kernel() const {
    auto sol = solve_linear(*this, Vec(rows_, GF::zero(deg_)));
    return sol->kernel;
}

Mat Mat::inverse() const {
    if (rows_ != cols_)
        throw std::invalid_argument("Mat: inverse of non-square matrix");
    Mat inv(rows_, cols_, deg_);
    for (int j = 0; j < cols_; ++j) {
        Vec e(rows_, GF::zero(deg_));
        e[j] = GF::one(deg_);
        auto sol = solve_linear(*this, e);
        if (!sol || sol->kernel.cols() != 0)
            throw std::domain_error("Mat: matrix not invertible");
        for (int i = 0; i < rows_; ++i)
            inv.set(i, j, sol->particular[i]);
    }
    return inv;
}

bool in_span(const Mat& basis, const Vec& v) {
    Echelon e;
    for (int j = 0; j < basis.cols(); ++j)
        e.insert(basis.col(j));
    return vec_is_zero(e.reduce(v));
}

std::optional<Vec> coords_in(const Mat& basis, const Vec& v) {
    auto sol = solve_linear(basis, v);
    if (!sol)
        return std::nullopt;
    return sol->particular;
}

int span_union_rank(const Mat& a, const Mat& b) { return a.augment_cols(b).rank(); }

bool same_span(const Mat& a, const Mat& b) {
    int ra = a.rank(), rb = b.rank();
    return ra == rb && span_union_rank(a, b) == ra;
}

} // namespace versuper
