#pragma once

#include "wedge.hpp"

#include <set>

namespace torelli {

// Monomial = sorted set of barred basis-class indices; {} is the unit.
using Mono = std::vector<int>;

// Z/2 polynomial in the Boolean algebra B^k: square-free monomials of
// degree <= k, products past degree k truncated to zero. Relations:
//   (a+b)-bar = a-bar + b-bar + <a,b> mod 2,    a-bar^2 = a-bar.
struct BoolPoly {
    std::set<Mono> monomials;

    bool is_zero() const { return monomials.empty(); }
    bool operator==(const BoolPoly& o) const { return monomials == o.monomials; }

    static BoolPoly one() { return BoolPoly{{Mono{}}}; }
};

inline constexpr int kBoolDegree = 3;

BoolPoly bool_add(const BoolPoly& p, const BoolPoly& q);
BoolPoly bool_mul(const BoolPoly& p, const BoolPoly& q, int k = kBoolDegree);

// v-bar expanded over barred basis classes via the twisted additivity
// relation; degree <= 1 plus a constant.
BoolPoly bool_embed(const IntersectionForm& f, const Vec& v);

// rank of B^k over a rank-d module: sum_{i<=k} C(d,i)
Int bool_rank(int d, int k);

// sigma of a chain map: (sum z_j-bar w_j-bar) (c-bar + 1).
BoolPoly sigma_chainmap(const SurfaceModel& m, const ChainMapValue& c);

// Multiplicative extension of the mod-2 action on degree-one generators.
BoolPoly sp2_action(const IntersectionForm& f, const IntMat& mat, const BoolPoly& p);

BoolPoly sigma_token(const SurfaceModel& m, const WordToken& t);
BoolPoly sigma_word(const SurfaceModel& m, const GroupWord& w);

// Comparison maps into the mod-2 exterior cube and the fiber-product test.
std::set<Triple> map_a(const Wedge3& u);
std::set<Triple> map_b(const BoolPoly& p);
bool w_membership(const Wedge3& u, const BoolPoly& p);

}  // namespace torelli
