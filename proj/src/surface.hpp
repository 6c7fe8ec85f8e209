#pragma once

#include "homology.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace torelli {

// Combinatorial model of a genus-g surface with one boundary component, or
// of a genus-g surface with two boundary components sitting inside a
// genus-(g+1) surface with one boundary component. Homology coordinates
// live in the ambient lattice of rank 2g (one boundary) or 2g+2 (two).
//
// Curve classes are a solution of the intersection-constraint system:
//   <c_i, c_{i+1}> = +1,   <c_i, c_j> = 0 for |i-j| > 1,
//   <b, c_4> = +1,         <b, c_j> = 0 otherwise,
//   sum of odd-position chain classes = boundary class,
//   c_{2g-1} has class y_g - y_{g-1}.
struct SurfaceModel {
    int genus = 0;
    int boundary_count = 1;
    std::size_t handles = 0;  // g (one boundary) or g+1 (two)
    IntersectionForm form;
    std::vector<std::string> basis_labels;               // x1..xm, y1..ym
    std::vector<std::pair<std::string, Vec>> curve_list; // insertion order
    std::map<std::string, Vec> curve_table;
    std::size_t chain_curves = 0;  // c_1..c_{chain_curves} present in the table

    std::size_t rank() const { return form.rank(); }
    bool has_curve(const std::string& name) const { return curve_table.count(name) != 0; }
    const Vec& curve(const std::string& name) const;
    Vec basis_vector(std::size_t index) const;
    std::string basis_label(std::size_t index) const { return basis_labels.at(index); }

    // Maximal sentinel usable in subchain notation: chain_curves + 1.
    int sentinel_max() const { return static_cast<int>(chain_curves) + 1; }
    // Sentinel bound for the Torelli generator families (chains inside the
    // surface itself, i.e. over c_1..c_{2g+1}).
    int generator_sentinel_max() const { return 2 * genus + 2; }
};

SurfaceModel build_surface(int g, int boundary_count);

// The solved constraint-system table by itself (name -> class).
std::vector<std::pair<std::string, Vec>> solve_curve_table(int g, int boundary_count);

// Handle indices (1-based) where the class has a nonzero x or y coordinate.
std::set<int> handle_support(const SurfaceModel& m, const Vec& v);

enum class SubsurfaceKind { R, S, W, Y, X };

struct SubsurfaceDescriptor {
    SubsurfaceKind kind;
    std::set<int> index_set;
    std::set<int> support_handles;
};

SubsurfaceKind parse_subsurface_kind(const std::string& s);
std::string subsurface_kind_name(SubsurfaceKind k);

// All descriptors of the given kind and size for a genus-g two-boundary
// surface. R and Y ignore m (singleton families).
std::vector<SubsurfaceDescriptor> enumerate_subsurfaces(SubsurfaceKind kind, int g, int m);

// True when every Humphries generator curve (c_1..c_{2g+1}, b) has handle
// support contained in some m-element subset of {1..g+1}.
bool generator_support_cover(int g, int m);

}  // namespace torelli
