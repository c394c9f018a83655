#ifndef VERSUPER_ENVELOP_HPP
#define VERSUPER_ENVELOP_HPP

#include "versuper/verlie.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace versuper {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Words in the free algebra on generators 0..n-1; empty word = 1.
using Word = std::vector<uint8_t>;

// Degree-lexicographic order: shorter words first, then lexicographic.
struct DegLexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

// Noncommutative polynomial.
using NcPoly = std::map<Word, GF, DegLexLess>;

void poly_add(NcPoly& p, const Word& w, GF c);
NcPoly poly_sum(const NcPoly& a, const NcPoly& b);
// prefix * p * suffix
NcPoly poly_sandwich(const Word& prefix, const NcPoly& p, const Word& suffix);
NcPoly poly_mul(const NcPoly& a, const NcPoly& b);

enum class Flavor { plain, super, restricted };
std::string flavor_name(Flavor f);

// Oriented quadratic-plus-lower rewriting system presenting U(L),
// U_super(L) or U_res(L) in an adapted basis (a-block = Im D, then the
// even/odd complements, then the h-block with D h_i = a_i).  Every rule's
// right side is deglex-smaller than its left side.
struct RewriteSystem {
    int deg = 1;
    int ngen = 0;
    Flavor flavor = Flavor::plain;
    int na = 0, nb = 0, nc = 0, nh = 0; // block sizes, in generator order
    Mat basis;                          // adapted basis in original coordinates
    std::map<std::pair<int, int>, NcPoly> rules;
    std::vector<bool> square_rule; // generators g with a (g,g) -> ... rule

    bool is_square_gen(int g) const { return square_rule[g]; }
    std::string gen_name(int g) const;
};

RewriteSystem build_rewrite(const VerLieAlgebra& l, const SuperStructure* s,
                            const RestrictedStructure* r, Flavor flavor);

// Leftmost-innermost reduction; a step is one rule application.  Throws
// resource_error when fuel runs out (fuel < 0 means a large default).
NcPoly normal_form(const RewriteSystem& rs, NcPoly p, long fuel = -1);
long normal_form_steps(const RewriteSystem& rs, NcPoly p, long fuel);

struct ConfluenceReport {
    bool ok = true;
    long ambiguities_checked = 0;
    struct Failure {
        Word overlap;
        NcPoly difference; // nf(one way) - nf(other way)
    };
    std::vector<Failure> failures;
};

// Resolves every overlap ambiguity e_k e_j e_i (k >= j >= i, both factors
// rule left sides).  All left sides have length two, so these are all the
// ambiguities and, by the diamond lemma, success certifies that the
// irreducible monomials form a basis (the PBW property).
ConfluenceReport confluence_check(const RewriteSystem& rs);

// Number of irreducible monomials per degree 0..N (counts words directly).
std::vector<long long> graded_dims(const RewriteSystem& rs, int n);

// Coefficients of (1+q)^plus / (1-q)^minus up to degree n.
std::vector<long long> series_coeffs(int plus, int minus, int n);
// The two PBW closed forms.
std::vector<long long> hilbert_super(SuperDim sd, int n);
std::vector<long long> hilbert_restricted(SuperDim sd, int n);

// A raw presentation of an algebra by generators and relations; degrees of
// generators are all 1.
struct Presentation {
    int deg = 1;
    int ngen = 0;
    std::vector<NcPoly> relations;
};

// Defining relations of U(L) / U_super / U_res in the original basis of L
// (image of id - sigma - [,] on basis pairs, plus flavor square relations).
Presentation lie_presentation(const VerLieAlgebra& l, const SuperStructure* s,
                              const RestrictedStructure* r, Flavor flavor);

// Truncated-degree dimension oracle: graded dimensions of the associated
// graded of T(L)/(relations), computed by linear algebra on the span of
// u*g*v up to an auxiliary bound that is raised until the filtration
// dimensions stabilize twice.  Independent of the rewriting machinery.
std::vector<long long> dims_oracle(const Presentation& p, int n, long col_budget = 400000);

struct CentralityReport {
    bool ok = true;
    std::vector<std::pair<int, int>> failures; // (odd generator, generator)
};
// Verifies in normal form that c^2 + Q(c) commutes with every generator for
// each odd complement generator c.
CentralityReport centrality_check(const VerLieAlgebra& l, const SuperStructure& s);

} // namespace versuper

#endif
