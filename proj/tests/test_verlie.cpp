#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "versuper/verlie.hpp"

#include <random>

using namespace versuper;

namespace {

GF F0() { return GF::zero(1); }
GF F1() { return GF::one(1); }

// 1 + P algebras with basis x, y, y' (indices 0, 1, 2), D y = y'.
// The four table columns determine everything: [y',x]=[x,y'], [y,x]=[x,y],
// [y,y']=[y',y], and [x,x] = [y',y'] = 0.
VerLieAlgebra one_plus_p(const Vec& xyp, const Vec& yy, const Vec& ypy, const Vec& xy) {
    Mat d(3, 3, 1);
    d.set(2, 1, F1());
    std::vector<GF> cube(27, F0());
    auto put = [&](int i, int j, const Vec& v) {
        for (int k = 0; k < 3; ++k)
            cube[(size_t(i) * 3 + j) * 3 + k] = v[k];
    };
    put(0, 2, xyp);
    put(2, 0, xyp);
    put(1, 1, yy);
    put(2, 1, ypy);
    put(1, 2, ypy);
    put(0, 1, xy);
    put(1, 0, xy);
    return VerLieAlgebra(1, d, cube);
}

Vec v3(int x, int y, int yp) { return {GF(x, 1), GF(y, 1), GF(yp, 1)}; }

// Super-structure of superdimension (0,1,1) on 1 + P: V0 = <y'>, V1 = <y', x>,
// Q(y') = [y,y], Q(x) = alpha * y'.
SuperStructure table_super(const VerLieAlgebra& l, int alpha) {
    SuperStructure s;
    s.V0 = Mat::from_cols({v3(0, 0, 1)}, 3, 1);
    s.V1 = Mat::from_cols({v3(0, 0, 1), v3(1, 0, 0)}, 3, 1);
    s.Q1 = {l.bracket_basis(1, 1), v3(0, 0, alpha)};
    return s;
}

Vec random_vec(int n, int deg, std::mt19937_64& rng) {
    Vec v = vec_zero(n, deg);
    for (auto& x : v)
        x = GF(uint32_t(rng() & ((1u << deg) - 1)), deg);
    return v;
}

Vec skew_at(const VerLieAlgebra& l, const Vec& x, const Vec& y) {
    Vec r = vec_add(l.bracket(x, y), l.bracket(y, x));
    return vec_add(r, l.bracket(l.d(y), l.d(x)));
}

Vec jacobi_at(const VerLieAlgebra& l, const Vec& x, const Vec& y, const Vec& z) {
    Vec r = l.bracket(l.bracket(x, y), z);
    r = vec_add(r, l.bracket(l.bracket(z, x), y));
    r = vec_add(r, l.bracket(l.bracket(y, z), x));
    r = vec_add(r, l.bracket(l.bracket(l.d(x), y), l.d(z)));
    r = vec_add(r, l.bracket(l.bracket(l.d(z), x), l.d(y)));
    r = vec_add(r, l.bracket(l.bracket(l.d(y), z), l.d(x)));
    return r;
}

Vec deriv_at(const VerLieAlgebra& l, const Vec& x, const Vec& y) {
    Vec r = l.d(l.bracket(x, y));
    r = vec_add(r, l.bracket(l.d(x), y));
    return vec_add(r, l.bracket(x, l.d(y)));
}

} // namespace

TEST_CASE("abelian algebras pass everything") {
    for (int n : {1, 2, 4}) {
        VerLieAlgebra l(1, Mat(n, n, 1), std::vector<GF>(size_t(n) * n * n, F0()));
        CHECK(check_operadic_axioms(l).ok);
        CHECK(check_pbw_condition(l));
        auto alt = alternator_analysis(l);
        CHECK(alt.alternating);
        CHECK(alt.skew_symmetric);
        CHECK(alt.weakly_alternating);
        CHECK(alt.e_dim == 0);
    }
}

TEST_CASE("nwa(i): operadic Lie algebra, PBW holds, not weakly alternating") {
    // [y,y] = x with x' = 0 (table row 5 with lambda = 0).
    auto l = one_plus_p(v3(0, 0, 0), v3(1, 0, 0), v3(0, 0, 0), v3(0, 0, 0));
    CHECK(check_operadic_axioms(l).ok);
    CHECK(check_pbw_condition(l));
    auto alt = alternator_analysis(l);
    CHECK(!alt.weakly_alternating);
    CHECK(alt.e_dim == 1);
    // E(L) = <class of x>.
    Vec rep = alt.e_basis.col(0);
    Mat imd_x = Mat::from_cols({v3(0, 0, 1), v3(1, 0, 0)}, 3, 1);
    Mat imd = Mat::from_cols({v3(0, 0, 1)}, 3, 1);
    CHECK(in_span(imd_x, rep));
    CHECK(!in_span(imd, rep));
}

TEST_CASE("coun reduction fails the PBW condition") {
    // D = 0, [y,y] = x: y lies in Ker D with [y,y] != 0.
    std::vector<GF> cube(8, F0());
    cube[(size_t(1) * 2 + 1) * 2 + 0] = F1();
    VerLieAlgebra l(1, Mat(2, 2, 1), cube);
    CHECK(check_operadic_axioms(l).ok);
    Vec w;
    CHECK(!check_pbw_condition(l, &w));
    CHECK(!vec_is_zero(w));
}

TEST_CASE("all 13 table rows are operadic Lie algebras") {
    // Columns: [x,y'], [y,y], [y',y], [x,y]; lambda runs over GF(2).
    for (int lam = 0; lam <= 1; ++lam) {
        std::vector<std::array<Vec, 4>> rows = {
            {v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 0)},     // 1
            {v3(0, 0, 1), v3(0, 0, 0), v3(0, 0, 0), v3(0, 1, lam)},   // 2
            {v3(0, 0, 0), v3(0, 0, 1), v3(0, 0, 0), v3(lam, 0, 0)},   // 3
            {v3(0, 0, 0), v3(0, 0, 1), v3(0, 0, 0), v3(0, 0, 1)},     // 4
            {v3(0, 0, 0), v3(1, 0, 0), v3(lam, 0, 0), v3(0, 0, 0)},   // 5
            {v3(0, 0, 0), v3(1, 0, 0), v3(lam, 0, 1), v3(0, 0, 0)},   // 6
            {v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 0), v3(1, 0, 0)},     // 7
            {v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 1)},     // 8
            {v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 1), v3(1, 0, 1)},     // 9
            {v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 1), v3(lam, 0, 0)},   // 10
            {v3(0, 0, 0), v3(0, 0, 0), v3(1, 0, 0), v3(1, 0, lam)},   // 11
            {v3(0, 0, 0), v3(0, 0, 0), v3(1, 0, 0), v3(0, 0, 1)},     // 12
            {v3(0, 0, 0), v3(0, 0, 0), v3(1, 0, 0), v3(0, 0, 0)},     // 13
        };
        for (size_t r = 0; r < rows.size(); ++r) {
            auto l = one_plus_p(rows[r][0], rows[r][1], rows[r][2], rows[r][3]);
            auto rep = check_operadic_axioms(l);
            CAPTURE(r);
            CAPTURE(lam);
            CHECK(rep.ok);
            CHECK(check_pbw_condition(l));
        }
    }
}

TEST_CASE("super-structure checks against table rows") {
    // Row 1 (abelian): both alpha = 0, 1 pass.
    auto l1 = one_plus_p(v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 0), v3(0, 0, 0));
    CHECK(check_superalgebra(l1, table_super(l1, 0)).ok);
    CHECK(check_superalgebra(l1, table_super(l1, 1)).ok);

    // Row 2: fails axiom (c) at witness (x, y) for any alpha.
    for (int lam = 0; lam <= 1; ++lam) {
        auto l2 = one_plus_p(v3(0, 0, 1), v3(0, 0, 0), v3(0, 0, 0), v3(0, 1, lam));
        for (int alpha = 0; alpha <= 1; ++alpha) {
            auto rep = check_superalgebra(l2, table_super(l2, alpha));
            CHECK(!rep.ok);
            bool adjoint_fail = false;
            for (auto& w : rep.failures)
                adjoint_fail |= w.axiom == "adjoint";
            CHECK(adjoint_fail);
        }
    }

    // Row 13: alpha = 1 fails ([x,[x,y]] = 0 but [Q(x),y] = [y',y] = x != 0).
    auto l13 = one_plus_p(v3(0, 0, 0), v3(0, 0, 0), v3(1, 0, 0), v3(0, 0, 0));
    CHECK(check_superalgebra(l13, table_super(l13, 0)).ok);
    CHECK(!check_superalgebra(l13, table_super(l13, 1)).ok);
}

TEST_CASE("axiom reductions to basis tuples hold on random vectors") {
    auto l = one_plus_p(v3(0, 0, 0), v3(0, 0, 1), v3(0, 0, 0), v3(1, 0, 0)); // row 3, lambda=1
    auto s = table_super(l, 1);
    REQUIRE(check_operadic_axioms(l).ok);
    REQUIRE(check_superalgebra(l, s).ok);
    std::mt19937_64 rng(99);
    for (int it = 0; it < 200; ++it) {
        Vec x = random_vec(3, 1, rng), y = random_vec(3, 1, rng), z = random_vec(3, 1, rng);
        CHECK(vec_is_zero(skew_at(l, x, y)));
        CHECK(vec_is_zero(jacobi_at(l, x, y, z)));
        CHECK(vec_is_zero(deriv_at(l, x, y)));
        // super axiom (a) on arbitrary vectors
        CHECK(eval_Q(l, s, l.d(x)) == l.bracket(x, x));
        // super axioms (b), (c) on arbitrary odd vectors
        GF a(uint32_t(rng() & 1), 1), b(uint32_t(rng() & 1), 1);
        Vec y1 = vec_add(vec_scale(a, s.V1.col(0)), vec_scale(b, s.V1.col(1)));
        GF a2(uint32_t(rng() & 1), 1), b2(uint32_t(rng() & 1), 1);
        Vec y2 = vec_add(vec_scale(a2, s.V1.col(0)), vec_scale(b2, s.V1.col(1)));
        Vec pol = vec_add(vec_add(eval_Q(l, s, vec_add(y1, y2)), eval_Q(l, s, y1)),
                          eval_Q(l, s, y2));
        CHECK(pol == l.bracket(y1, y2));
        CHECK(l.bracket(eval_Q(l, s, y1), x) == l.bracket(y1, l.bracket(y1, x)));
    }
}

TEST_CASE("gl construction and superdimensions") {
    auto [l110, s110] = gl_algebra(1, 1, 1, 0);
    CHECK(decompose(module_view(l110, s110)).sd == SuperDim{2, 2, 0});
    CHECK(gl_superdim(1, 1, 0) == SuperDim{2, 2, 0});

    // End(P) = P (x) P^* has superdimension (0,0,2); the printed closed form
    // would give m2 = 1, the dimension count rules that reading out.
    auto [l001, s001] = gl_algebra(1, 0, 0, 1);
    CHECK(decompose(module_view(l001, s001)).sd == SuperDim{0, 0, 2});
    CHECK(gl_superdim(0, 0, 1) == SuperDim{0, 0, 2});

    auto [l100, s100] = gl_algebra(1, 1, 0, 0);
    CHECK(l100.dim() == 1);
    CHECK(decompose(module_view(l100, s100)).sd == SuperDim{1, 0, 0});
    CHECK(vec_is_zero(l100.bracket_basis(0, 0)));

    for (int n0 = 0; n0 <= 1; ++n0)
        for (int n1 = 0; n1 <= 1; ++n1)
            for (int n2 = 0; n2 <= 1; ++n2) {
                if (n0 + n1 + n2 == 0)
                    continue;
                auto [l, s] = gl_algebra(1, n0, n1, n2);
                CAPTURE(n0);
                CAPTURE(n1);
                CAPTURE(n2);
                CHECK(check_operadic_axioms(l).ok);
                CHECK(check_pbw_condition(l));
                CHECK(check_superalgebra(l, s).ok);
                auto sd = decompose(module_view(l, s)).sd;
                CHECK(sd == gl_superdim(n0, n1, n2));
                CHECK(sd.total() == (n0 + n1 + 2 * n2) * (n0 + n1 + 2 * n2));
            }

    // GF(4) spot check.
    auto [l4, s4] = gl_algebra(2, 1, 1, 0);
    CHECK(check_operadic_axioms(l4).ok);
    CHECK(check_superalgebra(l4, s4).ok);
}

TEST_CASE("perturbed gl fails with a witness") {
    auto [l, s] = gl_algebra(1, 0, 1, 1);
    VerLieAlgebra bad = l;
    bad.set_c(0, 1, 2, bad.c(0, 1, 2) + F1());
    auto rep = check_operadic_axioms(bad);
    CHECK(!rep.ok);
    CHECK(!rep.failures.empty());
}

TEST_CASE("alternator of gl(1|0|1): weakly alternating, not skew-symmetric") {
    auto [l, s] = gl_algebra(1, 1, 0, 1);
    auto alt = alternator_analysis(l);
    CHECK(alt.weakly_alternating);
    CHECK(!alt.skew_symmetric);
    CHECK(!alt.alternating);
    // Same over the odd placement of the trivial module.
    auto [l2, s2] = gl_algebra(1, 0, 1, 1);
    auto alt2 = alternator_analysis(l2);
    CHECK(alt2.weakly_alternating);
    CHECK(!alt2.skew_symmetric);
}

TEST_CASE("E(L) is a subspace: alternator values of random vectors stay inside") {
    auto l = one_plus_p(v3(0, 0, 0), v3(1, 0, 0), v3(0, 0, 0), v3(0, 0, 0)); // nwa(i)
    auto alt = alternator_analysis(l);
    Mat imd = l.D().col_space();
    Mat span = imd.augment_cols(alt.e_basis);
    std::mt19937_64 rng(5);
    for (int it = 0; it < 200; ++it) {
        Vec x = random_vec(3, 1, rng);
        CHECK(in_span(span, l.bracket(x, x)));
    }
}

TEST_CASE("cohomology superalgebra") {
    // Pure case: H(L) of gl(1|0|1) is a 1-dimensional plain Lie algebra.
    auto [l, s] = gl_algebra(1, 1, 0, 1);
    auto [h, hs] = cohomology_superalgebra(l, s);
    CHECK(h.dim() == 1);
    CHECK(h.D().is_zero());
    CHECK(check_superalgebra(h, hs).ok);
    CHECK(hs.V1.cols() == 0);

    // Classical case: gl(1|1|0) is already classical; H = L.
    auto [lc, sc] = gl_algebra(1, 1, 1, 0);
    auto [hc, hsc] = cohomology_superalgebra(lc, sc);
    CHECK(hc.dim() == 4);
    CHECK(check_superalgebra(hc, hsc).ok);

    // Mixed case with odd cohomology: gl(1|1|1) has H of superdimension (2,2).
    auto [lo, so] = gl_algebra(1, 1, 1, 1);
    auto [ho, hso] = cohomology_superalgebra(lo, so);
    CHECK(check_superalgebra(ho, hso).ok);
    CHECK(ho.dim() == 4);
    CHECK(hso.V1.cols() == 2);

    // nwa(i) is not weakly alternating: domain error.
    auto nwa = one_plus_p(v3(0, 0, 0), v3(1, 0, 0), v3(0, 0, 0), v3(0, 0, 0));
    SuperStructure pure;
    pure.V0 = nwa.kernel_of_D();
    pure.V1 = nwa.D().col_space();
    pure.Q1 = {nwa.bracket_basis(1, 1)};
    CHECK(check_superalgebra(nwa, pure).ok);
    CHECK_THROWS_AS(cohomology_superalgebra(nwa, pure), std::domain_error);
}

TEST_CASE("restricted structures") {
    // Abelian classical L of superdim (1,0,0): Q0(b) in {0, b} both pass.
    VerLieAlgebra l(1, Mat(1, 1, 1), std::vector<GF>(1, F0()));
    SuperStructure s;
    s.V0 = Mat::identity(1, 1);
    s.V1 = Mat(1, 0, 1);
    REQUIRE(check_superalgebra(l, s).ok);
    for (int q : {0, 1}) {
        RestrictedStructure r;
        r.Q0 = {Vec{GF(q, 1)}};
        CHECK(check_restricted(l, s, r).ok);
    }

    // Pure L = P with [x,x] = x': Q forced on Ker D by (equaa3): Q(x') = x'.
    Mat d(2, 2, 1);
    d.set(0, 1, F1()); // e0 = x', e1 = x
    std::vector<GF> cube(8, F0());
    cube[(size_t(1) * 2 + 1) * 2 + 0] = F1(); // [x,x] = x'
    VerLieAlgebra p(1, d, cube);
    REQUIRE(check_operadic_axioms(p).ok);
    SuperStructure ps;
    ps.V0 = Mat::from_cols({Vec{F1(), F0()}}, 2, 1);
    ps.V1 = ps.V0;
    ps.Q1 = {Vec{F1(), F0()}};
    REQUIRE(check_superalgebra(p, ps).ok);
    RestrictedStructure good{{Vec{F1(), F0()}}};
    CHECK(check_restricted(p, ps, good).ok);
    RestrictedStructure bad{{Vec{F0(), F0()}}};
    CHECK(!check_restricted(p, ps, bad).ok);

    // Classical 1-dim <b> with Q0(b) = b and abelian bracket: the restricted
    // line GF(2)[b]/(b^2 - b).
    RestrictedStructure line{{Vec{GF(1, 1)}}};
    CHECK(check_restricted(l, s, line).ok);
}

TEST_CASE("classical reduction agrees with a direct classical evaluator") {
    // For D = 0 structures the checks coincide with the classical definition:
    // verify by evaluating the classical axioms directly on a passing case.
    auto [l, s] = gl_algebra(1, 1, 1, 0);
    REQUIRE(l.D().is_zero());
    REQUIRE(check_superalgebra(l, s).ok);
    std::mt19937_64 rng(17);
    for (int it = 0; it < 100; ++it) {
        Vec x = random_vec(l.dim(), 1, rng);
        Vec y = random_vec(l.dim(), 1, rng);
        Vec z = random_vec(l.dim(), 1, rng);
        // classical skew (char 2): [x,y] = [y,x]
        CHECK(l.bracket(x, y) == l.bracket(y, x));
        // classical Jacobi
        Vec j = l.bracket(l.bracket(x, y), z);
        j = vec_add(j, l.bracket(l.bracket(z, x), y));
        j = vec_add(j, l.bracket(l.bracket(y, z), x));
        CHECK(vec_is_zero(j));
    }
}
