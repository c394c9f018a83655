#include "versuper/verlie.hpp"

#include <stdexcept>

namespace versuper {

VerLieAlgebra::VerLieAlgebra(int deg, Mat D, std::vector<GF> cube)
    : deg_(deg), n_(D.rows()), D_(std::move(D)), cube_(std::move(cube)) {
    if (D_.rows() != D_.cols())
        throw std::invalid_argument("verlie: D must be square");
    if (cube_.size() != size_t(n_) * n_ * n_)
        throw std::invalid_argument("verlie: structure constant cube has wrong size");
    rebuild_sparse();
}

void VerLieAlgebra::set_c(int i, int j, int k, GF v) {
    cube_[(size_t(i) * n_ + j) * n_ + k] = v;
    rebuild_sparse();
}

void VerLieAlgebra::rebuild_sparse() {
    sparse_.assign(size_t(n_) * n_, {});
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            auto& lst = sparse_[size_t(i) * n_ + j];
            for (int k = 0; k < n_; ++k) {
                GF v = c(i, j, k);
                if (!v.is_zero())
                    lst.emplace_back(k, v);
            }
        }
}

Vec VerLieAlgebra::bracket_basis(int i, int j) const {
    Vec v = vec_zero(n_, deg_);
    for (auto& [k, cv] : bracket_sparse(i, j))
        v[k] = cv;
    return v;
}

Vec VerLieAlgebra::bracket(const Vec& x, const Vec& y) const {
    Vec r = vec_zero(n_, deg_);
    for (int i = 0; i < n_; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < n_; ++j) {
            if (y[j].is_zero())
                continue;
            GF cij = x[i] * y[j];
            for (auto& [k, cv] : bracket_sparse(i, j))
                r[k] += cij * cv;
        }
    }
    return r;
}

VerLieAlgebra VerLieAlgebra::change_basis(const Mat& basis) const {
    Mat binv = basis.inverse();
    Mat newD = binv * D_ * basis;
    std::vector<GF> cube(size_t(n_) * n_ * n_, GF::zero(deg_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            Vec br = binv.apply(bracket(basis.col(i), basis.col(j)));
            for (int k = 0; k < n_; ++k)
                cube[(size_t(i) * n_ + j) * n_ + k] = br[k];
        }
    return VerLieAlgebra(deg_, newD, std::move(cube));
}

namespace {

using SparseVec = std::vector<std::pair<int, GF>>;

// Sparse columns of D, for the primed terms.
std::vector<SparseVec> d_cols(const VerLieAlgebra& l) {
    std::vector<SparseVec> cols(l.dim());
    for (int j = 0; j < l.dim(); ++j)
        for (int i = 0; i < l.dim(); ++i) {
            GF v = l.D().at(i, j);
            if (!v.is_zero())
                cols[j].emplace_back(i, v);
        }
    return cols;
}

// Dense scratch vector with a dirty list, for cheap repeated accumulation.
struct Scratch {
    explicit Scratch(int n, int deg) : zero(GF::zero(deg)), v(n, zero) {}
    GF zero;
    Vec v;
    std::vector<int> dirty;
    void add(int k, GF c) {
        if (v[k].is_zero() && !c.is_zero())
            dirty.push_back(k);
        v[k] += c;
    }
    bool is_zero() const {
        for (int k : dirty)
            if (!v[k].is_zero())
                return false;
        return true;
    }
    SparseVec take_sparse() {
        SparseVec out;
        for (int k : dirty)
            if (!v[k].is_zero())
                out.emplace_back(k, v[k]);
        clear();
        return out;
    }
    void clear() {
        for (int k : dirty)
            v[k] = zero;
        dirty.clear();
    }
};

// acc += coef * [list, e_j]
void add_bracket_list_basis(const VerLieAlgebra& l, Scratch& acc, const SparseVec& list, int j,
                            GF coef) {
    for (auto& [p, cp] : list) {
        GF c = coef * cp;
        for (auto& [k, cv] : l.bracket_sparse(p, j))
            acc.add(k, c * cv);
    }
}

// acc += coef * [list, rlist]
void add_bracket_list_list(const VerLieAlgebra& l, Scratch& acc, const SparseVec& list,
                           const SparseVec& rlist, GF coef) {
    for (auto& [p, cp] : list)
        for (auto& [q, cq] : rlist) {
            GF c = coef * cp * cq;
            for (auto& [k, cv] : l.bracket_sparse(p, q))
                acc.add(k, c * cv);
        }
}

} // namespace

CheckReport check_operadic_axioms(const VerLieAlgebra& l) {
    CheckReport rep;
    const int n = l.dim();
    const int deg = l.degree();
    auto dc = d_cols(l);
    Scratch acc(n, deg), tmp(n, deg);
    GF one = GF::one(deg);

    // Skew with twist: [e_i, e_j] + [e_j, e_i] + [e_j', e_i'] = 0.
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            for (auto& [k, cv] : l.bracket_sparse(i, j))
                acc.add(k, cv);
            for (auto& [k, cv] : l.bracket_sparse(j, i))
                acc.add(k, cv);
            add_bracket_list_list(l, acc, dc[j], dc[i], one);
            if (!acc.is_zero())
                rep.fail("skew", i, j);
            acc.clear();
        }

    // D is a twisted derivation: D[e_i, e_j] = [e_i', e_j] + [e_i, e_j'].
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            for (auto& [k, cv] : l.bracket_sparse(i, j))
                for (auto& [m, dv] : dc[k])
                    acc.add(m, cv * dv);
            add_bracket_list_basis(l, acc, dc[i], j, one);
            for (auto& [q, cq] : dc[j])
                for (auto& [k, cv] : l.bracket_sparse(i, q))
                    acc.add(k, cq * cv);
            if (!acc.is_zero())
                rep.fail("derivation", i, j);
            acc.clear();
        }

    // Six-term Jacobi.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                add_bracket_list_basis(l, acc, l.bracket_sparse(i, j), k, one); // [[x,y],z]
                add_bracket_list_basis(l, acc, l.bracket_sparse(k, i), j, one); // [[z,x],y]
                add_bracket_list_basis(l, acc, l.bracket_sparse(j, k), i, one); // [[y,z],x]
                // [[x',y],z']
                add_bracket_list_basis(l, tmp, dc[i], j, one);
                add_bracket_list_list(l, acc, tmp.take_sparse(), dc[k], one);
                // [[z',x],y']
                add_bracket_list_basis(l, tmp, dc[k], i, one);
                add_bracket_list_list(l, acc, tmp.take_sparse(), dc[j], one);
                // [[y',z],x']
                add_bracket_list_basis(l, tmp, dc[j], k, one);
                add_bracket_list_list(l, acc, tmp.take_sparse(), dc[i], one);
                if (!acc.is_zero())
                    rep.fail("jacobi", i, j, k);
                acc.clear();
            }
    return rep;
}

bool check_pbw_condition(const VerLieAlgebra& l, Vec* witness) {
    Mat ker = l.kernel_of_D();
    for (int j = 0; j < ker.cols(); ++j) {
        Vec v = ker.col(j);
        if (!vec_is_zero(l.bracket(v, v))) {
            if (witness)
                *witness = v;
            return false;
        }
    }
    return true;
}

bool check_pbw_condition(const VerLieAlgebra& l) { return check_pbw_condition(l, nullptr); }

AlternatorReport alternator_analysis(const VerLieAlgebra& l) {
    AlternatorReport rep;
    const int n = l.dim();
    const int deg = l.degree();

    rep.skew_symmetric = true;
    for (int i = 0; i < n && rep.skew_symmetric; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!vec_is_zero(vec_add(l.bracket_basis(i, j), l.bracket_basis(j, i)))) {
                rep.skew_symmetric = false;
                break;
            }
    bool diag_zero = true;
    for (int i = 0; i < n; ++i)
        if (!vec_is_zero(l.bracket_basis(i, i))) {
            diag_zero = false;
            break;
        }
    rep.alternating = rep.skew_symmetric && diag_zero;

    // Complement of Ker D from the input basis, greedily; E(L) is spanned by
    // the reduced alternator values there (reduced alternator is twisted
    // linear).
    Mat ker = l.kernel_of_D();
    Mat imD = l.D().col_space();
    std::vector<Vec> comp;
    Mat acc = ker;
    for (int j = 0; j < n && int(comp.size()) < n - ker.cols(); ++j) {
        Vec e = vec_zero(n, deg);
        e[j] = GF::one(deg);
        Mat cand = acc.augment_cols(Mat::from_cols({e}, n, deg));
        if (cand.rank() > acc.cols()) {
            acc = cand.col_space();
            comp.push_back(e);
        }
    }
    Mat span = imD;
    std::vector<Vec> ebasis;
    for (const auto& v : comp) {
        Vec alt = l.bracket(v, v);
        Mat cand = span.augment_cols(Mat::from_cols({alt}, n, deg));
        if (cand.rank() > span.cols()) {
            span = cand.col_space();
            ebasis.push_back(alt);
        }
    }
    rep.e_basis = Mat::from_cols(ebasis, n, deg);
    rep.e_dim = int(ebasis.size());
    rep.weakly_alternating = rep.e_dim == 0;
    return rep;
}

Vec eval_Q(const VerLieAlgebra& l, const SuperStructure& s, const Vec& y) {
    auto co = coords_in(s.V1, y);
    if (!co)
        throw std::domain_error("verlie: Q argument not in L1");
    const Vec& lam = *co;
    Vec r = vec_zero(l.dim(), l.degree());
    for (int j = 0; j < int(lam.size()); ++j) {
        if (lam[j].is_zero())
            continue;
        r = vec_add(r, vec_scale(lam[j].frobenius(), s.Q1[j]));
        for (int k = j + 1; k < int(lam.size()); ++k)
            if (!lam[k].is_zero())
                r = vec_add(r, vec_scale(lam[j] * lam[k], l.bracket(s.V1.col(j), s.V1.col(k))));
    }
    return r;
}

Vec eval_Q_ker(const VerLieAlgebra& l, const SuperStructure& s, const RestrictedStructure& r,
               const Vec& v) {
    Mat both = s.V0.augment_cols(s.V1);
    // Decompose v = v0 + v1 with v0 in V0, v1 in V1; the value does not
    // depend on the choice once the axioms hold.
    auto sol = solve_linear(both, v);
    if (!sol)
        throw std::domain_error("verlie: Q argument not in Ker D");
    const Vec& lam = sol->particular;
    const int n0 = s.V0.cols();
    Vec v0 = vec_zero(l.dim(), l.degree()), v1 = v0;
    Vec out = vec_zero(l.dim(), l.degree());
    for (int j = 0; j < n0; ++j) {
        GF lj = lam[j];
        if (lj.is_zero())
            continue;
        v0 = vec_add(v0, vec_scale(lj, s.V0.col(j)));
        out = vec_add(out, vec_scale(lj.frobenius(), r.Q0[j]));
        for (int k = j + 1; k < n0; ++k) {
            GF lk = lam[k];
            if (!lk.is_zero())
                out = vec_add(out, vec_scale(lj * lk, l.bracket(s.V0.col(j), s.V0.col(k))));
        }
    }
    for (int j = n0; j < int(lam.size()); ++j) {
        GF lj = lam[j];
        if (!lj.is_zero())
            v1 = vec_add(v1, vec_scale(lj, s.V1.col(j - n0)));
    }
    out = vec_add(out, eval_Q(l, s, v1));
    out = vec_add(out, l.bracket(v0, v1));
    return out;
}

SuperHModule module_view(const VerLieAlgebra& l, const SuperStructure& s) {
    return SuperHModule{l.degree(), l.dim(), l.D(), s.V0, s.V1};
}

CheckReport check_superalgebra(const VerLieAlgebra& l, const SuperStructure& s) {
    CheckReport rep;
    const int n = l.dim();

    module_view(l, s).validate(); // throws on a malformed super-structure
    if (int(s.Q1.size()) != s.V1.cols())
        throw std::invalid_argument("verlie: Q1 must give one value per V1 basis vector");
    for (int j = 0; j < s.V1.cols(); ++j)
        if (!in_span(s.V0, s.Q1[j]))
            rep.fail("q-range", j);

    // Grading [L_a, L_b] <= L_{a+b}.
    const Mat* vs[2] = {&s.V0, &s.V1};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            const Mat& target = (a + b) % 2 == 0 ? s.V0 : s.V1;
            const char* name = a == 0 ? (b == 0 ? "grading-00" : "grading-01")
                                      : (b == 0 ? "grading-10" : "grading-11");
            for (int i = 0; i < vs[a]->cols(); ++i)
                for (int j = 0; j < vs[b]->cols(); ++j)
                    if (!in_span(target, l.bracket(vs[a]->col(i), vs[b]->col(j))))
                        rep.fail(name, i, j);
        }
    if (!rep.ok)
        return rep;

    // (a) Q(x') = [x, x] on a basis of L (the difference is twisted linear).
    for (int i = 0; i < n; ++i) {
        Vec e = vec_zero(n, l.degree());
        e[i] = GF::one(l.degree());
        Vec lhs = eval_Q(l, s, l.d(e));
        if (lhs != l.bracket_basis(i, i))
            rep.fail("square", i);
    }
    // (b) the polarization identity holds by construction of eval_Q.
    // (c) [Q(y), x] = [y, [y, x]] on (basis of V1) x (basis of L).
    for (int j = 0; j < s.V1.cols(); ++j) {
        Vec y = s.V1.col(j);
        for (int i = 0; i < n; ++i) {
            Vec e = vec_zero(n, l.degree());
            e[i] = GF::one(l.degree());
            Vec lhs = l.bracket(s.Q1[j], e);
            Vec rhs = l.bracket(y, l.bracket(y, e));
            if (lhs != rhs)
                rep.fail("adjoint", j, i);
        }
    }
    return rep;
}

CheckReport check_restricted(const VerLieAlgebra& l, const SuperStructure& s,
                             const RestrictedStructure& r) {
    CheckReport rep;
    const int n = l.dim();
    if (int(r.Q0.size()) != s.V0.cols())
        throw std::invalid_argument("verlie: Q0 must give one value per V0 basis vector");
    for (int j = 0; j < s.V0.cols(); ++j)
        if (!in_span(s.V0, r.Q0[j]))
            rep.fail("q0-range", j);
    if (!rep.ok)
        return rep;

    // Q0 and Q1 must agree on Im D (where both are defined).
    Mat imD = l.D().col_space();
    for (int j = 0; j < imD.cols(); ++j) {
        Vec w = imD.col(j);
        Vec via0 = eval_Q_ker(l, s, r, w);
        Vec via1 = eval_Q(l, s, w);
        if (via0 != via1)
            rep.fail("imd-consistency", j);
    }

    // (equaa1) holds by polarization construction on L0.
    // (equaa2) [Q(x), y] = [x, [x, y]] for x in L0, y in L.
    for (int j = 0; j < s.V0.cols(); ++j) {
        Vec x = s.V0.col(j);
        for (int i = 0; i < n; ++i) {
            Vec e = vec_zero(n, l.degree());
            e[i] = GF::one(l.degree());
            Vec lhs = l.bracket(r.Q0[j], e);
            Vec rhs = l.bracket(x, l.bracket(x, e));
            if (lhs != rhs)
                rep.fail("restricted-adjoint", j, i);
        }
    }
    // (equaa3) [x, x] = Q(x') on a basis of L, via the Ker D evaluation.
    for (int i = 0; i < n; ++i) {
        Vec e = vec_zero(n, l.degree());
        e[i] = GF::one(l.degree());
        Vec lhs = l.bracket_basis(i, i);
        Vec rhs = eval_Q_ker(l, s, r, l.d(e));
        if (lhs != rhs)
            rep.fail("restricted-square", i);
    }
    return rep;
}

std::pair<VerLieAlgebra, SuperStructure> cohomology_superalgebra(const VerLieAlgebra& l,
                                                                 const SuperStructure& s) {
    auto alt = alternator_analysis(l);
    if (!alt.weakly_alternating)
        throw std::domain_error("verlie: cohomology superalgebra needs a weakly alternating L");
    auto d = decompose(module_view(l, s));
    const int m0 = d.sd.m0, m1 = d.sd.m1, m2 = d.sd.m2;
    const int hn = m0 + m1;
    const int deg = l.degree();
    Mat binv = d.basis.inverse();
    auto project = [&](const Vec& v) {
        Vec co = binv.apply(v);
        Vec out = vec_zero(hn, deg);
        for (int i = 0; i < hn; ++i)
            out[i] = co[m2 + i];
        return out;
    };

    std::vector<GF> cube(size_t(hn) * hn * hn, GF::zero(deg));
    for (int i = 0; i < hn; ++i)
        for (int j = 0; j < hn; ++j) {
            Vec br = project(l.bracket(d.basis.col(m2 + i), d.basis.col(m2 + j)));
            for (int k = 0; k < hn; ++k)
                cube[(size_t(i) * hn + j) * hn + k] = br[k];
        }
    VerLieAlgebra h(deg, Mat(hn, hn, deg), std::move(cube));

    SuperStructure hs;
    std::vector<Vec> v0cols, v1cols;
    for (int i = 0; i < m0; ++i) {
        Vec e = vec_zero(hn, deg);
        e[i] = GF::one(deg);
        v0cols.push_back(e);
    }
    for (int i = 0; i < m1; ++i) {
        Vec e = vec_zero(hn, deg);
        e[m0 + i] = GF::one(deg);
        v1cols.push_back(e);
    }
    hs.V0 = Mat::from_cols(v0cols, hn, deg);
    hs.V1 = Mat::from_cols(v1cols, hn, deg);
    for (int i = 0; i < m1; ++i)
        hs.Q1.push_back(project(eval_Q(l, s, d.basis.col(m2 + m0 + i))));
    return {std::move(h), std::move(hs)};
}

SuperDim gl_superdim(int n0, int n1, int n2) {
    return SuperDim{n0 * n0 + n1 * n1, 2 * n0 * n1, 2 * n2 * (n0 + n1 + n2)};
}

std::pair<VerLieAlgebra, SuperStructure> gl_algebra(int deg, int n0, int n1, int n2) {
    if (n0 + n1 + n2 < 1)
        throw std::invalid_argument("gl: need n0 + n1 + n2 >= 1");
    SuperHModule v = standard_module({n0, n1, n2}, deg);
    const int n = v.dim;
    const int N = n * n;

    auto coords_of = [&](const Mat& m) {
        Vec out = vec_zero(N, deg);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                out[a * n + b] = m.at(a, b);
        return out;
    };
    auto mat_of = [&](const Vec& coords) {
        Mat m(n, n, deg);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                m.set(a, b, coords[a * n + b]);
        return m;
    };

    // D on End(V): f |-> D f + f D (characteristic-2 commutator with D).
    std::vector<Mat> unit(N, Mat(n, n, deg)), primed(N, Mat(n, n, deg));
    for (int i = 0; i < N; ++i) {
        unit[i].set(i / n, i % n, GF::one(deg));
        primed[i] = v.D * unit[i] + unit[i] * v.D;
    }
    Mat bigD(N, N, deg);
    for (int i = 0; i < N; ++i) {
        Vec img = coords_of(primed[i]);
        for (int k = 0; k < N; ++k)
            bigD.set(k, i, img[k]);
    }

    // Commutator with twist: [f, g] = f g + g f + g' f'.
    std::vector<GF> cube(size_t(N) * N * N, GF::zero(deg));
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            Mat br = unit[i] * unit[j] + unit[j] * unit[i] + primed[j] * primed[i];
            Vec co = coords_of(br);
            for (int k = 0; k < N; ++k)
                cube[(size_t(i) * N + j) * N + k] = co[k];
        }
    VerLieAlgebra l(deg, bigD, std::move(cube));

    // Super-structure from the Kunneth grading of V (x) V^*: matrix units
    // E_{pq} with p, q cohomology representatives of equal parity are even,
    // of opposite parity odd; Im D lies in both.
    const int a0 = n2, b1 = n2 + n0; // offsets of the k0/k1 blocks of V
    Mat imD = bigD.col_space();
    std::vector<Vec> even, odd;
    auto unit_coords = [&](int p, int q) {
        Vec e = vec_zero(N, deg);
        e[p * n + q] = GF::one(deg);
        return e;
    };
    for (int p = 0; p < n0; ++p)
        for (int q = 0; q < n0; ++q)
            even.push_back(unit_coords(a0 + p, a0 + q));
    for (int p = 0; p < n1; ++p)
        for (int q = 0; q < n1; ++q)
            even.push_back(unit_coords(b1 + p, b1 + q));
    for (int p = 0; p < n0; ++p)
        for (int q = 0; q < n1; ++q) {
            odd.push_back(unit_coords(a0 + p, b1 + q));
            odd.push_back(unit_coords(b1 + q, a0 + p));
        }
    SuperStructure s;
    s.V0 = imD.augment_cols(Mat::from_cols(even, N, deg)).col_space();
    s.V1 = imD.augment_cols(Mat::from_cols(odd, N, deg)).col_space();
    for (int j = 0; j < s.V1.cols(); ++j) {
        Mat y = mat_of(s.V1.col(j));
        s.Q1.push_back(coords_of(y * y));
    }
    return {std::move(l), std::move(s)};
}

} // namespace versuper
