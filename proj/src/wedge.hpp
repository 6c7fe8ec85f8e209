#pragma once

#include "chains.hpp"

#include <array>
#include <map>

namespace torelli {

using Triple = std::array<int, 3>;  // strictly increasing basis indices

// Element of the third exterior power of the homology lattice, held sparsely
// over lexicographically ordered basis triples. Zero coefficients are never
// stored.
struct Wedge3 {
    std::map<Triple, Int> coeffs;

    void add(const Triple& t, const Int& v);
    bool is_zero() const { return coeffs.empty(); }
    bool operator==(const Wedge3& o) const { return coeffs == o.coeffs; }
};

Wedge3 wedge_add(const Wedge3& a, const Wedge3& b);
Wedge3 wedge_scale(const Wedge3& a, const Int& k);

// u ^ v ^ w expanded over sorted basis triples: the coefficient at (a,b,c)
// is the 3x3 minor of the coordinate rows.
Wedge3 wedge(const Vec& u, const Vec& v, const Vec& w);

// Linear extension of u^v^w -> Mu^Mv^Mw; M must preserve the form.
Wedge3 sp_action_wedge3(const IntersectionForm& f, const IntMat& m, const Wedge3& t);

// Homology action of the Dehn twist T_curve^sign. Twists act as the inverse
// transvection along their class: with <c_i, c_{i+1}> = +1 and chain sums
// evaluated as plain addition, this is the convention under which the
// conjugation rules and the beta substitution hold on the nose.
IntMat twist_action(const SurfaceModel& m, const std::string& curve, int sign);

// tau of a chain map: (sum of z_j ^ w_j over the hyperbolic pairs of the
// chain lattice) wedged with the boundary class.
Wedge3 tau_chainmap(const SurfaceModel& m, const ChainMapValue& c);

Wedge3 tau_token(const SurfaceModel& m, const WordToken& t);
Wedge3 tau_word(const SurfaceModel& m, const GroupWord& w);

}  // namespace torelli
