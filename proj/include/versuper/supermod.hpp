#ifndef VERSUPER_SUPERMOD_HPP
#define VERSUPER_SUPERMOD_HPP

#include "versuper/matrix.hpp"

#include <string>

namespace versuper {

struct SuperDim {
    int m0 = 0, m1 = 0, m2 = 0;
    int total() const { return m0 + m1 + 2 * m2; }
    friend bool operator==(const SuperDim& a, const SuperDim& b) {
        return a.m0 == b.m0 && a.m1 == b.m1 && a.m2 == b.m2;
    }
    friend bool operator!=(const SuperDim& a, const SuperDim& b) { return !(a == b); }
    std::string str() const {
        return "(" + std::to_string(m0) + "," + std::to_string(m1) + "," + std::to_string(m2) + ")";
    }
};

// A finite H-module (H = k[D]/(D^2)) with a super-structure: subspaces
// Im D <= V0, V1 <= Ker D with V0 /\ V1 = Im D and V0 + V1 = Ker D, i.e. a
// Z/2-grading on the cohomology of D.  V0, V1 are stored as column bases.
struct SuperHModule {
    int deg = 1; // field GF(2^deg)
    int dim = 0;
    Mat D;
    Mat V0, V1;

    // Throws std::domain_error with a description when an invariant fails.
    void validate() const;
    SuperDim superdim() const;
};

// The standard module m0*k0 + m1*k1 + m2*P in the fixed basis order
// (a-block = Im D, then k0-block, then k1-block, then h-block with D h_i = a_i).
SuperHModule standard_module(SuperDim sd, int deg);

struct Decomposition {
    SuperDim sd;
    // Invertible map carrying standard_module(sd) to the input module:
    // columns are the images of the standard basis vectors.
    Mat basis;
};

// Canonical decomposition of Lemma "uniquely up to isomorphism written".
// Non-canonical complements are resolved greedily in input basis order.
Decomposition decompose(const SuperHModule& v);

// Tensor product with D (x) 1 + 1 (x) D and the Kunneth super-structure.
SuperHModule tensor(const SuperHModule& v, const SuperHModule& w);

// Matrix of the braiding sigma: v (x) w |-> w (x) v + (Dw) (x) (Dv)
// from V (x) W to W (x) V, in lexicographic bases.
Mat braiding(const SuperHModule& v, const SuperHModule& w);

// D-operator on the tensor product (for equivariance checks).
Mat tensor_D(const SuperHModule& v, const SuperHModule& w);

} // namespace versuper

#endif
