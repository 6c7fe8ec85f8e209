#pragma once

#include "exact.hpp"

#include <utility>
#include <vector>

namespace torelli {

// Alternating bilinear form on a free Z-module, given by its Gram matrix in
// a fixed ordered basis. The standard model uses basis x_1..x_m, y_1..y_m
// with <x_i, y_i> = 1.
struct IntersectionForm {
    IntMat gram;

    std::size_t rank() const { return gram.rows; }

    // Standard symplectic Gram matrix of rank 2*pairs.
    static IntersectionForm standard(std::size_t pairs);
};

Int pairing(const IntersectionForm& f, const Vec& u, const Vec& v);

// v + <v,c> c, the transvection along c.
Vec transvection_apply(const IntersectionForm& f, const Vec& v, const Vec& c);

// Matrix of the transvection along c (columns are images of basis vectors).
// Power e = +1 or -1 selects the transvection or its inverse.
IntMat transvection_matrix(const IntersectionForm& f, const Vec& c);
IntMat transvection_power(const IntersectionForm& f, const Vec& c, int e);

bool sp_membership(const IntersectionForm& f, const IntMat& m);
bool stabilizer_membership(const IntersectionForm& f, const IntMat& m, const Vec& v);

// A finitely generated sublattice; generators must be Q-linearly independent.
struct Sublattice {
    std::vector<Vec> generators;

    Sublattice(const IntersectionForm& f, std::vector<Vec> gens);
};

// Basis of the radical of L (vectors pairing to zero with all of L),
// in ambient coordinates, primitive.
std::vector<Vec> radical(const IntersectionForm& f, const Sublattice& l);

struct SymplecticBasisResult {
    std::vector<std::pair<Vec, Vec>> pairs;  // hyperbolic pairs (z_j, w_j), <z_j,w_j> = 1
    std::vector<Vec> radical_basis;
};

// Greedy symplectic reduction of a list of vectors: repeatedly take the
// first pair (lexicographic scan) with pairing +-1, normalized to +1, and
// orthogonalize the rest against it. Leftover nonzero vectors must pair to
// zero with each other, else the lattice is non-unimodular and we reject.
// Tolerates Q-linearly dependent input (used on chain curve lists).
SymplecticBasisResult symplectic_reduce(const IntersectionForm& f, std::vector<Vec> gens);

// Same reduction on a validated sublattice.
SymplecticBasisResult symplectic_gram_schmidt(const IntersectionForm& f, const Sublattice& l);

}  // namespace torelli
