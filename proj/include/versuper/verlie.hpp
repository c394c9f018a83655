#ifndef VERSUPER_VERLIE_HPP
#define VERSUPER_VERLIE_HPP

#include "versuper/supermod.hpp"

#include <string>
#include <utility>
#include <vector>

namespace versuper {

// Operadic Lie algebra in Ver_4^+(k): an H-module with structure constants
// c_{ij}^k for [e_i, e_j] = sum_k c_{ij}^k e_k.  Super-structures are carried
// separately (see SuperStructure).
class VerLieAlgebra {
  public:
    VerLieAlgebra() = default;
    VerLieAlgebra(int deg, Mat D, std::vector<GF> cube);

    int degree() const { return deg_; }
    int dim() const { return n_; }
    const Mat& D() const { return D_; }
    GF c(int i, int j, int k) const { return cube_[(size_t(i) * n_ + j) * n_ + k]; }
    void set_c(int i, int j, int k, GF v);
    const std::vector<GF>& cube() const { return cube_; }

    // [e_i, e_j] as a coordinate vector / sparse list.
    Vec bracket_basis(int i, int j) const;
    const std::vector<std::pair<int, GF>>& bracket_sparse(int i, int j) const {
        return sparse_[size_t(i) * n_ + j];
    }
    Vec bracket(const Vec& x, const Vec& y) const;
    Vec d(const Vec& x) const { return D_.apply(x); }
    Mat kernel_of_D() const { return D_.kernel(); }

    // Structure constants transported along an invertible map (new basis
    // columns = images of old standard vectors under `basis`).
    VerLieAlgebra change_basis(const Mat& basis) const;

  private:
    void rebuild_sparse();
    int deg_ = 1;
    int n_ = 0;
    Mat D_;
    std::vector<GF> cube_;
    std::vector<std::vector<std::pair<int, GF>>> sparse_;
};

// Squaring-map data: V0, V1 are subspace bases forming a super-structure on
// the module of L, and Q1[j] = Q(V1.col(j)).  Q elsewhere is forced by the
// polarization formula Q(sum a_i e_i) = sum a_i^2 Q(e_i) + sum_{i<j} a_i a_j [e_i, e_j].
struct SuperStructure {
    Mat V0, V1;
    std::vector<Vec> Q1;
};

// Extension of Q to Ker D: Q0[j] = Q(V0.col(j)), values in V0.
struct RestrictedStructure {
    std::vector<Vec> Q0;
};

struct Witness {
    std::string axiom;
    int i = -1, j = -1, k = -1;
};

struct CheckReport {
    bool ok = true;
    std::vector<Witness> failures;
    void fail(std::string axiom, int i = -1, int j = -1, int k = -1) {
        ok = false;
        failures.push_back({std::move(axiom), i, j, k});
    }
};

// The three operadic identities, checked on all basis tuples (complete by
// multilinearity).
CheckReport check_operadic_axioms(const VerLieAlgebra& l);

// PBW condition: [x, x] = 0 for all x in Ker D.  A basis check suffices since
// on Ker D the alternator is additive ([x,y]+[y,x] = [y',x'] = 0 there) and
// Frobenius-semilinear.
bool check_pbw_condition(const VerLieAlgebra& l);
bool check_pbw_condition(const VerLieAlgebra& l, Vec* witness);

struct AlternatorReport {
    bool alternating = false;
    bool weakly_alternating = false;
    bool skew_symmetric = false;
    // Basis of E(L) (image of the reduced alternator), as representatives in
    // Ker D; the span is taken modulo Im D.
    Mat e_basis;
    int e_dim = 0;
};
AlternatorReport alternator_analysis(const VerLieAlgebra& l);

// Q evaluated by the forced polarization formula at y in span(V1).
Vec eval_Q(const VerLieAlgebra& l, const SuperStructure& s, const Vec& y);
// Q on Ker D = V0 + V1 via Q(v0 + v1) = Q0(v0) + Q1(v1) + [v0, v1].
Vec eval_Q_ker(const VerLieAlgebra& l, const SuperStructure& s, const RestrictedStructure& r,
               const Vec& v);

CheckReport check_superalgebra(const VerLieAlgebra& l, const SuperStructure& s);
CheckReport check_restricted(const VerLieAlgebra& l, const SuperStructure& s,
                             const RestrictedStructure& r);

// The module view (for decompose etc).
SuperHModule module_view(const VerLieAlgebra& l, const SuperStructure& s);

// Induced classical Lie superalgebra on the cohomology H(L); requires L
// weakly alternating.
std::pair<VerLieAlgebra, SuperStructure> cohomology_superalgebra(const VerLieAlgebra& l,
                                                                 const SuperStructure& s);

// gl(n0|n1|n2): endomorphisms of the standard module with commutator
// [f,g] = fg + gf + g'f' and Q(y) = y^2 on the odd part.
std::pair<VerLieAlgebra, SuperStructure> gl_algebra(int deg, int n0, int n1, int n2);

// Superdimension of gl(n0|n1|n2) by direct decomposition; the printed closed
// form of the source differs in its m2 term (see tests).
SuperDim gl_superdim(int n0, int n1, int n2);

} // namespace versuper

#endif
