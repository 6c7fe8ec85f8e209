#pragma once

#include "boolpoly.hpp"

#include <cstdint>

namespace torelli {

// Exact rank of a family of exterior-cube vectors over Q (fraction-free
// elimination) and of Boolean polynomials over F2 (bitset elimination).
std::size_t span_dim_Q(const std::vector<Wedge3>& vectors, std::size_t ambient_rank);
std::size_t span_dim_F2(const std::vector<BoolPoly>& polys);

// Triple indexing for a fixed list of usable basis indices.
struct TripleIndexer {
    std::vector<int> basis;               // ambient indices, increasing
    std::map<Triple, std::size_t> index;  // triple -> dense column

    explicit TripleIndexer(std::vector<int> basis_indices);
    std::size_t dim() const { return index.size(); }
    Vec densify(const Wedge3& w) const;  // throws if w leaves the span
};

struct OrbitResult {
    std::size_t dim = 0;
    std::size_t rounds = 0;
};

// U <- U + sum_M M.U until stable; generators must preserve the form.
OrbitResult orbit_closure_span(const std::vector<Wedge3>& seeds, const std::vector<IntMat>& generators,
                               const IntersectionForm& f, const TripleIndexer& ix);

// Orbit-span data for the two-boundary model at genus g: the exterior cube
// of the rank-(2g+1) sublattice spanned by x_1..x_g, y_1..y_{g+1}, acted on
// by the transvections of the Humphries curves c_1..c_{2g}, b.
struct OrbitProblem {
    SurfaceModel model;
    TripleIndexer indexer;
    std::vector<IntMat> generators;   // restricted to the sublattice
    IntersectionForm restricted_form;

    explicit OrbitProblem(int g);
    std::vector<Wedge3> seeds(int d) const;  // union of V_I over |I| = d, I in {1..g}
};

// least d whose |I|=d seeds reach the full dimension (expected 2)
struct DminResult {
    int d = 0;
    std::vector<std::pair<int, std::size_t>> trail;  // (d, dimension reached)
};
DminResult d_min_search(int g);

struct GraphModel {
    std::vector<SubsurfaceDescriptor> vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Vertices are the m-subsets of {1..g+1} (the W-family at size m), edges
// join disjoint index sets. A finite stand-in for the commuting graph.
GraphModel disjointness_graph(int g, int m);
bool is_connected(const GraphModel& g);

}  // namespace torelli
