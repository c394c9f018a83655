#include "versuper/envelop.hpp"

#include <algorithm>
#include <stdexcept>

namespace versuper {

void poly_add(NcPoly& p, const Word& w, GF c) {
    if (c.is_zero())
        return;
    auto it = p.find(w);
    if (it == p.end()) {
        p.emplace(w, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero())
        p.erase(it);
}

NcPoly poly_sum(const NcPoly& a, const NcPoly& b) {
    NcPoly r = a;
    for (auto& [w, c] : b)
        poly_add(r, w, c);
    return r;
}

NcPoly poly_sandwich(const Word& prefix, const NcPoly& p, const Word& suffix) {
    NcPoly r;
    for (auto& [w, c] : p) {
        Word nw = prefix;
        nw.insert(nw.end(), w.begin(), w.end());
        nw.insert(nw.end(), suffix.begin(), suffix.end());
        poly_add(r, nw, c);
    }
    return r;
}

NcPoly poly_mul(const NcPoly& a, const NcPoly& b) {
    NcPoly r;
    for (auto& [wa, ca] : a)
        for (auto& [wb, cb] : b) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            poly_add(r, w, ca * cb);
        }
    return r;
}

std::string flavor_name(Flavor f) {
    switch (f) {
    case Flavor::plain:
        return "plain";
    case Flavor::super:
        return "super";
    default:
        return "restricted";
    }
}

std::string RewriteSystem::gen_name(int g) const {
    if (g < na)
        return "a" + std::to_string(g);
    if (g < na + nb)
        return "b" + std::to_string(g - na);
    if (g < na + nb + nc)
        return "c" + std::to_string(g - na - nb);
    return "h" + std::to_string(g - na - nb - nc);
}

namespace {

// Adapted basis (a-block, even complement, odd complement, h-block); for the
// plain flavor the whole Ker D complement is one b-block.
struct Adapted {
    Mat basis;
    int na, nb, nc, nh;
};

Adapted adapted_basis(const VerLieAlgebra& l, const SuperStructure* s) {
    const int n = l.dim(), deg = l.degree();
    if (s) {
        auto d = decompose(module_view(l, *s));
        return Adapted{d.basis, d.sd.m2, d.sd.m0, d.sd.m1, d.sd.m2};
    }
    Mat ker = l.kernel_of_D();
    std::vector<Vec> hs;
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
    std::vector<Vec> as;
    for (auto& h : hs)
        as.push_back(l.d(h));
    Mat imD = Mat::from_cols(as, n, deg);
    std::vector<Vec> bs;
    Mat acc2 = imD;
    for (int j = 0; j < ker.cols(); ++j) {
        Vec c = ker.col(j);
        Mat cand = acc2.augment_cols(Mat::from_cols({c}, n, deg));
        if (cand.rank() > acc2.cols()) {
            acc2 = cand.col_space();
            bs.push_back(c);
        }
    }
    std::vector<Vec> cols;
    cols.insert(cols.end(), as.begin(), as.end());
    cols.insert(cols.end(), bs.begin(), bs.end());
    cols.insert(cols.end(), hs.begin(), hs.end());
    return Adapted{Mat::from_cols(cols, n, deg), int(as.size()), int(bs.size()), 0,
                   int(hs.size())};
}

NcPoly linear_poly(const Vec& v) {
    NcPoly p;
    for (int k = 0; k < int(v.size()); ++k)
        if (!v[k].is_zero())
            poly_add(p, Word{uint8_t(k)}, v[k]);
    return p;
}

bool deglex_less(const Word& a, const Word& b) { return DegLexLess{}(a, b); }

} // namespace

RewriteSystem build_rewrite(const VerLieAlgebra& l, const SuperStructure* s,
                            const RestrictedStructure* r, Flavor flavor) {
    if (!check_operadic_axioms(l).ok)
        throw std::domain_error("build_rewrite: operadic axioms fail");
    if (flavor == Flavor::plain) {
        if (!check_pbw_condition(l))
            throw std::domain_error("build_rewrite: PBW condition fails");
    } else {
        if (!s)
            throw std::invalid_argument("build_rewrite: flavor needs a super-structure");
        if (!check_superalgebra(l, *s).ok)
            throw std::domain_error("build_rewrite: super axioms fail");
        if (flavor == Flavor::restricted) {
            if (!r)
                throw std::invalid_argument("build_rewrite: restricted flavor needs Q0");
            if (!check_restricted(l, *s, *r).ok)
                throw std::domain_error("build_rewrite: restricted axioms fail");
        }
    }

    Adapted ad = adapted_basis(l, flavor == Flavor::plain ? nullptr : s);
    VerLieAlgebra la = l.change_basis(ad.basis);
    const int n = l.dim(), deg = l.degree();
    Mat binv = ad.basis.inverse();

    RewriteSystem rs;
    rs.deg = deg;
    rs.ngen = n;
    rs.flavor = flavor;
    rs.na = ad.na;
    rs.nb = ad.nb;
    rs.nc = ad.nc;
    rs.nh = ad.nh;
    rs.basis = ad.basis;
    rs.square_rule.assign(n, false);

    const int h0 = ad.na + ad.nb + ad.nc;
    // (i) commutations e_j e_i -> e_i e_j + e_i' e_j' + [e_j, e_i], j > i;
    // primed generators land in the a-block, keeping right sides smaller.
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            NcPoly rhs;
            poly_add(rhs, Word{uint8_t(i), uint8_t(j)}, GF::one(deg));
            if (i >= h0 && j >= h0)
                poly_add(rhs, Word{uint8_t(i - h0), uint8_t(j - h0)}, GF::one(deg));
            rhs = poly_sum(rhs, linear_poly(la.bracket_basis(j, i)));
            rs.rules[{j, i}] = std::move(rhs);
        }
    // (ii) diagonal relations a_p a_p -> [h_p, h_p].
    for (int p = 0; p < ad.na; ++p) {
        rs.rules[{p, p}] = linear_poly(la.bracket_basis(h0 + p, h0 + p));
        rs.square_rule[p] = true;
    }
    // (iii) flavor extras.
    auto add_square = [&](int g, const Vec& q_adapted) {
        rs.rules[{g, g}] = linear_poly(q_adapted);
        rs.square_rule[g] = true;
    };
    if (flavor != Flavor::plain) {
        for (int c = 0; c < ad.nc; ++c) {
            int g = ad.na + ad.nb + c;
            add_square(g, binv.apply(eval_Q(l, *s, ad.basis.col(g))));
        }
    }
    if (flavor == Flavor::restricted) {
        for (int b = 0; b < ad.nb; ++b) {
            int g = ad.na + b;
            add_square(g, binv.apply(eval_Q_ker(l, *s, *r, ad.basis.col(g))));
        }
        // a-block squares coincide with the diagonal relations by (equaa3).
        for (int p = 0; p < ad.na; ++p) {
            Vec q = binv.apply(eval_Q_ker(l, *s, *r, ad.basis.col(p)));
            if (rs.rules[{p, p}] != linear_poly(q))
                throw std::domain_error("build_rewrite: Q(a) != [h,h] on Im D");
        }
    }

    for (auto& [lhs, rhs] : rs.rules) {
        Word lw{uint8_t(lhs.first), uint8_t(lhs.second)};
        for (auto& [w, c] : rhs)
            if (!deglex_less(w, lw))
                throw std::logic_error("build_rewrite: non-terminating rule");
    }
    return rs;
}

namespace {

int leftmost_redex(const RewriteSystem& rs, const Word& w) {
    for (int t = 0; t + 1 < int(w.size()); ++t)
        if (rs.rules.count({w[t], w[t + 1]}))
            return t;
    return -1;
}

// Shared reduction engine; one step = one rule application, applied to the
// deglex-largest reducible term at its leftmost redex.
long reduce_engine(const RewriteSystem& rs, NcPoly& p, long fuel) {
    long steps = 0;
    for (;;) {
        bool reduced = false;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            int t = leftmost_redex(rs, it->first);
            if (t < 0)
                continue;
            Word w = it->first;
            GF c = it->second;
            p.erase(std::next(it).base());
            Word prefix(w.begin(), w.begin() + t);
            Word suffix(w.begin() + t + 2, w.end());
            const NcPoly& rhs = rs.rules.at({w[t], w[t + 1]});
            for (auto& [rw, rc] : rhs) {
                Word nw = prefix;
                nw.insert(nw.end(), rw.begin(), rw.end());
                nw.insert(nw.end(), suffix.begin(), suffix.end());
                poly_add(p, nw, c * rc);
            }
            if (++steps > fuel)
                throw resource_error("normal_form: fuel exhausted");
            reduced = true;
            break;
        }
        if (!reduced)
            return steps;
    }
}

} // namespace

NcPoly normal_form(const RewriteSystem& rs, NcPoly p, long fuel) {
    reduce_engine(rs, p, fuel < 0 ? 100000000L : fuel);
    return p;
}

long normal_form_steps(const RewriteSystem& rs, NcPoly p, long fuel) {
    return reduce_engine(rs, p, fuel);
}

ConfluenceReport confluence_check(const RewriteSystem& rs) {
    ConfluenceReport rep;
    for (int k = 0; k < rs.ngen; ++k)
        for (int j = 0; j <= k; ++j) {
            if (!rs.rules.count({k, j}))
                continue;
            for (int i = 0; i <= j; ++i) {
                if (!rs.rules.count({j, i}))
                    continue;
                ++rep.ambiguities_checked;
                NcPoly left = poly_sandwich({}, rs.rules.at({k, j}), Word{uint8_t(i)});
                NcPoly right = poly_sandwich(Word{uint8_t(k)}, rs.rules.at({j, i}), {});
                NcPoly diff = poly_sum(normal_form(rs, left), normal_form(rs, right));
                if (!diff.empty()) {
                    rep.ok = false;
                    rep.failures.push_back({Word{uint8_t(k), uint8_t(j), uint8_t(i)}, diff});
                }
            }
        }
    return rep;
}

std::vector<long long> graded_dims(const RewriteSystem& rs, int n) {
    // Count irreducible words directly: non-decreasing sequences in which
    // square-rule generators occur at most once.
    std::vector<long long> dp(n + 1, 0);
    dp[0] = 1;
    for (int g = 0; g < rs.ngen; ++g) {
        std::vector<long long> next(n + 1, 0);
        for (int d = 0; d <= n; ++d) {
            if (dp[d] == 0)
                continue;
            if (rs.is_square_gen(g)) {
                next[d] += dp[d];
                if (d + 1 <= n)
                    next[d + 1] += dp[d];
            } else {
                for (int m = 0; d + m <= n; ++m)
                    next[d + m] += dp[d];
            }
        }
        dp = std::move(next);
    }
    return dp;
}

std::vector<long long> series_coeffs(int plus, int minus, int n) {
    std::vector<long long> c(n + 1, 0);
    c[0] = 1;
    for (int i = 0; i < plus; ++i)
        for (int d = n; d >= 1; --d)
            c[d] += c[d - 1];
    for (int i = 0; i < minus; ++i)
        for (int d = 1; d <= n; ++d)
            c[d] += c[d - 1];
    return c;
}

std::vector<long long> hilbert_super(SuperDim sd, int n) {
    return series_coeffs(sd.m1 + sd.m2, sd.m0 + sd.m2, n);
}

std::vector<long long> hilbert_restricted(SuperDim sd, int n) {
    return series_coeffs(sd.m0 + sd.m1 + sd.m2, sd.m2, n);
}

Presentation lie_presentation(const VerLieAlgebra& l, const SuperStructure* s,
                              const RestrictedStructure* r, Flavor flavor) {
    const int n = l.dim(), deg = l.degree();
    Presentation pr;
    pr.deg = deg;
    pr.ngen = n;
    // Image of id - sigma - [,] on basis pairs:
    // e_i e_j + e_j e_i + (De_j)(De_i) + [e_i, e_j].
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            NcPoly g;
            if (i != j) {
                poly_add(g, Word{uint8_t(i), uint8_t(j)}, GF::one(deg));
                poly_add(g, Word{uint8_t(j), uint8_t(i)}, GF::one(deg));
            }
            for (int p = 0; p < n; ++p) {
                GF dp = l.D().at(p, j);
                if (dp.is_zero())
                    continue;
                for (int q = 0; q < n; ++q) {
                    GF dq = l.D().at(q, i);
                    if (!dq.is_zero())
                        poly_add(g, Word{uint8_t(p), uint8_t(q)}, dp * dq);
                }
            }
            g = poly_sum(g, linear_poly(l.bracket_basis(i, j)));
            if (!g.empty())
                pr.relations.push_back(std::move(g));
        }

    auto square_rel = [&](const Vec& y, const Vec& q) {
        NcPoly g;
        for (int p = 0; p < n; ++p) {
            if (y[p].is_zero())
                continue;
            for (int t = 0; t < n; ++t)
                if (!y[t].is_zero())
                    poly_add(g, Word{uint8_t(p), uint8_t(t)}, y[p] * y[t]);
        }
        return poly_sum(g, linear_poly(q));
    };

    if (flavor != Flavor::plain) {
        if (!s)
            throw std::invalid_argument("lie_presentation: flavor needs a super-structure");
        Adapted ad = adapted_basis(l, s);
        for (int c = 0; c < ad.nc; ++c) {
            Vec y = ad.basis.col(ad.na + ad.nb + c);
            pr.relations.push_back(square_rel(y, eval_Q(l, *s, y)));
        }
        if (flavor == Flavor::restricted) {
            if (!r)
                throw std::invalid_argument("lie_presentation: restricted flavor needs Q0");
            // squares of the a-block and the even complement
            for (int b = 0; b < ad.na + ad.nb; ++b) {
                Vec y = ad.basis.col(b);
                pr.relations.push_back(square_rel(y, eval_Q_ker(l, *s, *r, y)));
            }
        }
    }
    return pr;
}

std::vector<long long> dims_oracle(const Presentation& p, int n, long col_budget) {
    const int g = p.ngen, deg = p.deg;
    if (g < 1 || g > 64)
        throw std::invalid_argument("dims_oracle: generator count out of range");

    auto total_cols = [&](int m) {
        long long t = 0, pw = 1;
        for (int d = 0; d <= m; ++d) {
            t += pw;
            if (t > (1LL << 60))
                return t;
            pw *= g;
        }
        return t;
    };
    // Column index under (degree descending, lex ascending within degree).
    auto word_col = [&](const Word& w, int m) {
        long long off = 0, pw = 1;
        std::vector<long long> size_of(size_t(m) + 1);
        for (int d = 0; d <= m; ++d) {
            size_of[d] = pw;
            pw *= g;
        }
        for (int d = m; d > int(w.size()); --d)
            off += size_of[d];
        long long rank = 0;
        for (uint8_t ch : w)
            rank = rank * g + ch;
        return off + rank;
    };

    std::vector<long long> prev;
    for (int m = n;; ++m) {
        if (total_cols(m) > col_budget) {
            int feasible = n;
            while (feasible > 0 && total_cols(feasible + 2) > col_budget)
                --feasible;
            throw resource_error("dims_oracle: bound exceeds the memory budget; maximal "
                                 "feasible degree about " +
                                 std::to_string(feasible));
        }

        std::vector<std::map<long long, GF>> echelon;
        std::vector<long long> pivots; // sorted leading columns
        auto insert_row = [&](std::map<long long, GF> row) {
            for (;;) {
                if (row.empty())
                    return;
                long long lead = row.begin()->first;
                auto it = std::lower_bound(pivots.begin(), pivots.end(), lead);
                size_t pos = size_t(it - pivots.begin());
                if (it == pivots.end() || *it != lead) {
                    GF inv = row.begin()->second.inverse();
                    if (!inv.is_one())
                        for (auto& [k, v] : row)
                            v *= inv;
                    pivots.insert(it, lead);
                    echelon.insert(echelon.begin() + pos, std::move(row));
                    return;
                }
                GF c = row.begin()->second;
                for (auto& [k, v] : echelon[pos]) {
                    auto rit = row.find(k);
                    GF nv = (rit == row.end() ? GF::zero(deg) : rit->second) + c * v;
                    if (nv.is_zero()) {
                        if (rit != row.end())
                            row.erase(rit);
                    } else if (rit == row.end()) {
                        row.emplace(k, nv);
                    } else {
                        rit->second = nv;
                    }
                }
            }
        };

        // All context words of degree <= m.
        std::vector<Word> ctx;
        ctx.push_back({});
        {
            size_t start = 0;
            for (int d = 1; d <= m; ++d) {
                size_t end = ctx.size();
                for (size_t idx = start; idx < end; ++idx)
                    for (int ch = 0; ch < g; ++ch) {
                        Word w = ctx[idx];
                        w.push_back(uint8_t(ch));
                        ctx.push_back(std::move(w));
                    }
                start = end;
            }
        }

        for (const auto& rel : p.relations) {
            if (rel.empty())
                continue;
            int reldeg = int(rel.rbegin()->first.size());
            for (const auto& u : ctx) {
                if (int(u.size()) + reldeg > m)
                    continue;
                for (const auto& v : ctx) {
                    if (int(u.size()) + int(v.size()) + reldeg > m)
                        continue;
                    std::map<long long, GF> row;
                    for (auto& [w, c] : rel) {
                        Word full = u;
                        full.insert(full.end(), w.begin(), w.end());
                        full.insert(full.end(), v.begin(), v.end());
                        long long col = word_col(full, m);
                        auto it = row.find(col);
                        if (it == row.end())
                            row.emplace(col, c);
                        else {
                            it->second += c;
                            if (it->second.is_zero())
                                row.erase(it);
                        }
                    }
                    insert_row(std::move(row));
                }
            }
        }

        std::vector<long long> f(size_t(n) + 1, 0);
        for (int d = 0; d <= n; ++d) {
            long long cut = word_col(Word(size_t(d), 0), m);
            long long inside = 0;
            for (long long pv : pivots)
                if (pv >= cut)
                    ++inside;
            long long tdim = 0, pw = 1;
            for (int e = 0; e <= d; ++e) {
                tdim += pw;
                pw *= g;
            }
            f[size_t(d)] = tdim - inside;
        }

        if (!prev.empty() && f == prev) {
            std::vector<long long> graded(size_t(n) + 1);
            graded[0] = f[0];
            for (int d = 1; d <= n; ++d)
                graded[size_t(d)] = f[size_t(d)] - f[size_t(d) - 1];
            return graded;
        }
        prev = f;
    }
}

CentralityReport centrality_check(const VerLieAlgebra& l, const SuperStructure& s) {
    if (!check_superalgebra(l, s).ok)
        throw std::domain_error("centrality_check: super axioms fail");
    RewriteSystem rs = build_rewrite(l, nullptr, nullptr, Flavor::plain);
    if (!confluence_check(rs).ok)
        throw std::domain_error("centrality_check: plain system not confluent");
    Mat binv = rs.basis.inverse();
    Mat acc = l.D().col_space();
    std::vector<Vec> cgens; // complement of Im D inside V1
    for (int j = 0; j < s.V1.cols(); ++j) {
        Vec c = s.V1.col(j);
        Mat cand = acc.augment_cols(Mat::from_cols({c}, l.dim(), l.degree()));
        if (cand.rank() > acc.cols()) {
            acc = cand.col_space();
            cgens.push_back(c);
        }
    }
    CentralityReport rep;
    for (int ci = 0; ci < int(cgens.size()); ++ci) {
        NcPoly y;
        {
            Vec yc = binv.apply(cgens[ci]);
            for (int k = 0; k < int(yc.size()); ++k)
                if (!yc[k].is_zero())
                    poly_add(y, Word{uint8_t(k)}, yc[k]);
        }
        NcPoly z = poly_mul(y, y);
        {
            Vec qc = binv.apply(eval_Q(l, s, cgens[ci]));
            for (int k = 0; k < int(qc.size()); ++k)
                if (!qc[k].is_zero())
                    poly_add(z, Word{uint8_t(k)}, qc[k]);
        }
        for (int gidx = 0; gidx < rs.ngen; ++gidx) {
            NcPoly gen;
            poly_add(gen, Word{uint8_t(gidx)}, GF::one(l.degree()));
            NcPoly comm = poly_sum(poly_mul(z, gen), poly_mul(gen, z));
            if (!normal_form(rs, comm).empty()) {
                rep.ok = false;
                rep.failures.push_back({ci, gidx});
            }
        }
    }
    return rep;
}

} // namespace versuper
