#include "versuper/supermod.hpp"

#include <stdexcept>

namespace versuper {

void SuperHModule::validate() const {
    if (D.rows() != dim || D.cols() != dim)
        throw std::domain_error("supermod: D has wrong shape");
    if (V0.rows() != dim || V1.rows() != dim)
        throw std::domain_error("supermod: subspace basis has wrong length");
    if (!(D * D).is_zero())
        throw std::domain_error("supermod: D^2 != 0");
    if (V0.rank() != V0.cols() || V1.rank() != V1.cols())
        throw std::domain_error("supermod: subspace basis not independent");

    Mat imD = D.col_space();
    const int m2 = imD.cols();
    // Im D <= V0, V1 <= Ker D.
    if (span_union_rank(V0, imD) != V0.cols() || span_union_rank(V1, imD) != V1.cols())
        throw std::domain_error("supermod: Im D not contained in V0 and V1");
    for (int j = 0; j < V0.cols(); ++j)
        if (!vec_is_zero(D.apply(V0.col(j))))
            throw std::domain_error("supermod: V0 not contained in Ker D");
    for (int j = 0; j < V1.cols(); ++j)
        if (!vec_is_zero(D.apply(V1.col(j))))
            throw std::domain_error("supermod: V1 not contained in Ker D");

    const int ker = dim - m2;
    const int sum = span_union_rank(V0, V1);
    if (sum != ker)
        throw std::domain_error("supermod: V0 + V1 != Ker D");
    // dim(V0 /\ V1) = dim V0 + dim V1 - dim(V0 + V1) must equal dim Im D.
    if (V0.cols() + V1.cols() - sum != m2)
        throw std::domain_error("supermod: V0 /\\ V1 != Im D");
}

SuperDim SuperHModule::superdim() const {
    const int m2 = D.rank();
    return SuperDim{V0.cols() - m2, V1.cols() - m2, m2};
}

SuperHModule standard_module(SuperDim sd, int deg) {
    const int n = sd.total();
    SuperHModule m;
    m.deg = deg;
    m.dim = n;
    m.D = Mat(n, n, deg);
    const int a0 = 0, b0 = sd.m2, b1 = sd.m2 + sd.m0, h0 = sd.m2 + sd.m0 + sd.m1;
    for (int i = 0; i < sd.m2; ++i)
        m.D.set(a0 + i, h0 + i, GF::one(deg));
    std::vector<Vec> v0, v1;
    for (int i = 0; i < sd.m2; ++i) {
        Vec e = vec_zero(n, deg);
        e[a0 + i] = GF::one(deg);
        v0.push_back(e);
        v1.push_back(e);
    }
    for (int i = 0; i < sd.m0; ++i) {
        Vec e = vec_zero(n, deg);
        e[b0 + i] = GF::one(deg);
        v0.push_back(e);
    }
    for (int i = 0; i < sd.m1; ++i) {
        Vec e = vec_zero(n, deg);
        e[b1 + i] = GF::one(deg);
        v1.push_back(e);
    }
    m.V0 = Mat::from_cols(v0, n, deg);
    m.V1 = Mat::from_cols(v1, n, deg);
    return m;
}

Decomposition decompose(const SuperHModule& v) {
    v.validate();
    const int n = v.dim, deg = v.deg;
    Mat ker = v.D.kernel();

    // h-block: a complement of Ker D picked from the input basis, greedily.
    std::vector<Vec> hs;
    {
        Mat acc = ker;
        for (int j = 0; j < n && int(hs.size()) < n - ker.cols(); ++j) {
            Vec e = vec_zero(n, deg);
            e[j] = GF::one(deg);
            Mat cand = acc.augment_cols(Mat::from_cols({e}, n, deg));
            if (cand.rank() > acc.cols()) {
                acc = cand.col_space();
                hs.push_back(e);
            }
        }
    }
    std::vector<Vec> as;
    for (const auto& h : hs)
        as.push_back(v.D.apply(h));
    Mat imD = Mat::from_cols(as, n, deg);
    const int m2 = int(as.size());

    // b-blocks: complements of Im D inside V0, V1, greedy over the given
    // basis columns in order.
    auto complement_in = [&](const Mat& sub) {
        std::vector<Vec> out;
        Mat acc = imD;
        for (int j = 0; j < sub.cols(); ++j) {
            Vec c = sub.col(j);
            Mat cand = acc.augment_cols(Mat::from_cols({c}, n, deg));
            if (cand.rank() > acc.cols()) {
                acc = cand.col_space();
                out.push_back(c);
            }
        }
        return out;
    };
    std::vector<Vec> b0s = complement_in(v.V0);
    std::vector<Vec> b1s = complement_in(v.V1);

    SuperDim sd{int(b0s.size()), int(b1s.size()), m2};
    std::vector<Vec> cols;
    cols.insert(cols.end(), as.begin(), as.end());
    cols.insert(cols.end(), b0s.begin(), b0s.end());
    cols.insert(cols.end(), b1s.begin(), b1s.end());
    cols.insert(cols.end(), hs.begin(), hs.end());
    Mat basis = Mat::from_cols(cols, n, deg);
    if (!basis.invertible())
        throw std::domain_error("supermod: decomposition basis not invertible");
    return Decomposition{sd, basis};
}

SuperHModule tensor(const SuperHModule& v, const SuperHModule& w) {
    if (v.deg != w.deg)
        throw std::invalid_argument("supermod: tensor over different fields");
    const int deg = v.deg;
    const int n = v.dim * w.dim;
    SuperHModule out;
    out.deg = deg;
    out.dim = n;
    Mat iv = Mat::identity(v.dim, deg), iw = Mat::identity(w.dim, deg);
    out.D = Mat::kron(v.D, iw) + Mat::kron(iv, w.D);

    // Kunneth: cohomology class representatives of the factors multiply; the
    // product super-structure is Im D plus the matching-parity products.
    Decomposition dv = decompose(v), dw = decompose(w);
    auto block = [](const Decomposition& d, int which) {
        // 0 -> k0-representatives, 1 -> k1-representatives
        std::vector<Vec> out;
        int off = d.sd.m2 + (which == 0 ? 0 : d.sd.m0);
        int cnt = which == 0 ? d.sd.m0 : d.sd.m1;
        for (int i = 0; i < cnt; ++i)
            out.push_back(d.basis.col(off + i));
        return out;
    };
    auto b0v = block(dv, 0), b1v = block(dv, 1);
    auto b0w = block(dw, 0), b1w = block(dw, 1);

    auto prod = [&](const Vec& x, const Vec& y) {
        Vec r = vec_zero(n, deg);
        for (int i = 0; i < v.dim; ++i)
            for (int j = 0; j < w.dim; ++j)
                r[i * w.dim + j] = x[i] * y[j];
        return r;
    };

    Mat imD = out.D.col_space();
    std::vector<Vec> even, odd;
    for (const auto& x : b0v)
        for (const auto& y : b0w)
            even.push_back(prod(x, y));
    for (const auto& x : b1v)
        for (const auto& y : b1w)
            even.push_back(prod(x, y));
    for (const auto& x : b0v)
        for (const auto& y : b1w)
            odd.push_back(prod(x, y));
    for (const auto& x : b1v)
        for (const auto& y : b0w)
            odd.push_back(prod(x, y));

    out.V0 = imD.augment_cols(Mat::from_cols(even, n, deg)).col_space();
    out.V1 = imD.augment_cols(Mat::from_cols(odd, n, deg)).col_space();
    return out;
}

Mat braiding(const SuperHModule& v, const SuperHModule& w) {
    if (v.deg != w.deg)
        throw std::invalid_argument("supermod: braiding over different fields");
    const int deg = v.deg;
    Mat sigma(w.dim * v.dim, v.dim * w.dim, deg);
    for (int i = 0; i < v.dim; ++i)
        for (int j = 0; j < w.dim; ++j) {
            const int src = i * w.dim + j;
            sigma.set(j * v.dim + i, src, sigma.at(j * v.dim + i, src) + GF::one(deg));
            // + (Dw_j) (x) (Dv_i) in W (x) V coordinates.
            for (int p = 0; p < w.dim; ++p) {
                GF wc = w.D.at(p, j);
                if (wc.is_zero())
                    continue;
                for (int q = 0; q < v.dim; ++q) {
                    GF vc = v.D.at(q, i);
                    if (!vc.is_zero()) {
                        int dst = p * v.dim + q;
                        sigma.set(dst, src, sigma.at(dst, src) + wc * vc);
                    }
                }
            }
        }
    return sigma;
}

Mat tensor_D(const SuperHModule& v, const SuperHModule& w) {
    Mat iv = Mat::identity(v.dim, v.deg), iw = Mat::identity(w.dim, w.deg);
    return Mat::kron(v.D, iw) + Mat::kron(iv, w.D);
}

} // namespace versuper
