#pragma once

#include "surface.hpp"

#include <string>
#include <utility>
#include <vector>

namespace torelli {

// Subchain notation over the Humphries chain c_1, c_2, ...: the indices
// (i_1 < i_2 < ... < i_l) denote the l-1 curves c_{i_j} + ... + c_{i_{j+1}-1}.
// Example: (1346) denotes (c_1+c_2, c_3, c_4+c_5).
//
// With beta = b + c_4 set, the beta prefix denotes the chain starting with
// the curve beta followed by the blocks of the indices; the first index is
// then pinned to 5 so that <beta, first block> = 1.
//
// The gamma3 flag denotes the chains (c_2, gamma3, blocks...) used by the
// genus-reduction relation; its indices start at 6.
struct ChainNotation {
    bool beta = false;
    bool gamma3 = false;
    std::vector<int> indices;

    bool operator==(const ChainNotation& o) const {
        return beta == o.beta && gamma3 == o.gamma3 && indices == o.indices;
    }
};

std::string format_chain(const ChainNotation& n);
// Accepts compact digit strings ("1346", "b567") and comma-separated forms
// ("1,3,4,6", "b,5,6,7", "beta,5,6,7") for indices beyond 9.
ChainNotation parse_chain(const std::string& s);

// Curve-level value of a notation: homology classes of the denoted curves,
// the class shared by the two boundary curves of a regular neighborhood,
// and the genus of the neighborhood.
struct ChainMapValue {
    std::vector<Vec> curves;
    Vec boundary_class;
    int genus = 0;
};

ChainMapValue expand_subchain(const ChainNotation& n, const SurfaceModel& m);

// Homology-level sum of two chain neighbors; requires <a,b> = +-1.
Vec chain_sum(const SurfaceModel& m, const Vec& a, const Vec& b);

// Sum of the odd-position curve classes; pairs to zero with every curve.
Vec boundary_class(const SurfaceModel& m, const std::vector<Vec>& curves);

bool commutes_with_twist(int j, const ChainNotation& n);

// One token of a group word: a chain map, a bounding-pair certificate, or a
// separating twist certificate, raised to +-1 and optionally conjugated by
// named curve twists (outermost first).
struct BpCertificate {
    std::vector<std::pair<Vec, Vec>> pairs;  // symplectic basis of the bounded subsurface
    Vec common_class;                        // shared class of the two curves (zero for separating)
    std::string label;
};

struct WordToken {
    enum class Kind { Chain, BoundingPair, SeparatingTwist } kind = Kind::Chain;
    ChainNotation chain;
    BpCertificate certificate;
    int exponent = 1;
    std::vector<std::pair<std::string, int>> conjugators;  // (curve name, twist sign)

    static WordToken of_chain(ChainNotation n, int e = 1) {
        WordToken t;
        t.chain = std::move(n);
        t.exponent = e;
        return t;
    }
};

using GroupWord = std::vector<WordToken>;

// Johnson's conjugation rules for T_{c_j}^{sign} acting on a subchain:
//   commuting case          -> the unchanged notation,
//   j in I, j+1 not in I    -> bump i_m to i_m+1 (sign -1), or the
//                              three-token word n n'^{-1} n (sign +1),
//   j+1 in I, j not in I    -> drop i_m to i_m-1 (sign +1), or the
//                              three-token word (sign -1).
// Beta chains follow the same rules for j >= 5, commute for j <= 2, and
// have no rule for j in {3,4}.
GroupWord conjugate_by_twist(int j, int sign, const ChainNotation& n, const SurfaceModel& m);

// lhs and rhs of a named relation as words; names: J1, J2, J3, lantern.
std::pair<GroupWord, GroupWord> relation_words(const std::string& name, int k, const SurfaceModel& m);

// The Torelli generating family: all odd straight subchains over sentinels
// {1..2g+2} plus all odd beta chains, each validated by expansion.
std::vector<ChainNotation> enumerate_generators(const SurfaceModel& m);

}  // namespace torelli
