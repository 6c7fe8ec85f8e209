#include "surface.hpp"

#include <algorithm>
#include <stdexcept>

namespace torelli {

namespace {

Vec basis_elem(std::size_t rank, std::size_t idx) {
    Vec v(rank);
    v[idx] = 1;
    return v;
}

// x_i has index i-1, y_i has index handles + i - 1 (1-based i).
Vec x_of(std::size_t handles, int i) { return basis_elem(2 * handles, i - 1); }
Vec y_of(std::size_t handles, int i) { return basis_elem(2 * handles, handles + i - 1); }

void verify_table(const SurfaceModel& m);

}  // namespace

const Vec& SurfaceModel::curve(const std::string& name) const {
    auto it = curve_table.find(name);
    if (it == curve_table.end()) throw input_error("unknown curve: " + name);
    return it->second;
}

Vec SurfaceModel::basis_vector(std::size_t index) const { return basis_elem(rank(), index); }

std::vector<std::pair<std::string, Vec>> solve_curve_table(int g, int boundary_count) {
    if (g < 1) throw input_error("genus must be at least 1");
    if (boundary_count != 1 && boundary_count != 2) throw input_error("boundary count must be 1 or 2");
    const std::size_t handles = boundary_count == 2 ? g + 1 : g;
    const std::size_t n = 2 * handles;
    const std::size_t chain = boundary_count == 2 ? 2 * g + 2 : 2 * g + 1;

    std::vector<std::pair<std::string, Vec>> t;
    for (std::size_t j = 1; j <= chain; ++j) {
        Vec v(n);
        if (j % 2 == 1) {
            if (boundary_count == 1 && j == chain) {
                v = vec_scale(y_of(handles, g), -1);  // c_{2g+1} = -y_g closes the chain
            } else {
                // c_{2i-1} = y_i - y_{i-1}
                int i = static_cast<int>((j + 1) / 2);
                v = y_of(handles, i);
                if (i > 1) v = vec_sub(v, y_of(handles, i - 1));
            }
        } else {
            v = vec_scale(x_of(handles, static_cast<int>(j / 2)), -1);  // c_{2i} = -x_i
        }
        t.emplace_back("c" + std::to_string(j), std::move(v));
    }
    if (g >= 2) {
        t.emplace_back("b", y_of(handles, 2));
        t.emplace_back("beta", vec_sub(y_of(handles, 2), x_of(handles, 2)));  // b + c_4
    }
    if (g >= 3) t.emplace_back("gamma3", vec_sub(y_of(handles, 3), y_of(handles, 1)));
    if (boundary_count == 2) {
        t.emplace_back("d1", y_of(handles, g + 1));
        t.emplace_back("d2", vec_scale(y_of(handles, g + 1), -1));
    }
    return t;
}

SurfaceModel build_surface(int g, int boundary_count) {
    SurfaceModel m;
    m.genus = g;
    m.boundary_count = boundary_count;
    m.handles = boundary_count == 2 ? g + 1 : g;
    m.form = IntersectionForm::standard(m.handles);
    for (std::size_t i = 1; i <= m.handles; ++i) m.basis_labels.push_back("x" + std::to_string(i));
    for (std::size_t i = 1; i <= m.handles; ++i) m.basis_labels.push_back("y" + std::to_string(i));
    m.curve_list = solve_curve_table(g, boundary_count);
    for (const auto& [name, v] : m.curve_list) m.curve_table.emplace(name, v);
    m.chain_curves = boundary_count == 2 ? 2 * g + 2 : 2 * g + 1;
    verify_table(m);
    return m;
}

namespace {

// The table is a *solved* system; re-check every constraint on construction.
void verify_table(const SurfaceModel& m) {
    const auto& f = m.form;
    const std::size_t n = m.chain_curves;
    auto c = [&](std::size_t j) -> const Vec& { return m.curve("c" + std::to_string(j)); };
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) {
            Int p = pairing(f, c(i), c(j));
            Int want = (j == i + 1) ? 1 : 0;
            if (p != want) throw std::runtime_error("curve table violates chain constraints");
        }
    if (m.has_curve("b")) {
        for (std::size_t j = 1; j <= n; ++j) {
            Int want = (j == 4) ? 1 : 0;
            if (pairing(f, m.curve("b"), c(j)) != want)
                throw std::runtime_error("curve table violates b constraints");
        }
        if (m.curve("beta") != vec_add(m.curve("b"), c(4)))
            throw std::runtime_error("beta is not b + c4");
    }
    // boundary constraint: sum of odd chain classes
    Vec odd_sum(m.rank());
    const std::size_t in_surface = 2 * m.genus + 1;
    for (std::size_t j = 1; j <= in_surface; j += 2) odd_sum = vec_add(odd_sum, c(j));
    if (m.boundary_count == 2) {
        if (odd_sum != m.curve("d1")) throw std::runtime_error("odd chain sum is not the boundary class");
        if (!vec_is_zero(vec_add(m.curve("d1"), m.curve("d2"))) || vec_is_zero(m.curve("d1")))
            throw std::runtime_error("boundary classes inconsistent");
    } else if (!vec_is_zero(odd_sum)) {
        throw std::runtime_error("odd chain sum must vanish for one boundary component");
    }
    // transvection anchor: c_{2g-1} = y_g - y_{g-1}
    if (m.genus >= 2) {
        Vec want = vec_sub(m.basis_vector(m.handles + m.genus - 1), m.basis_vector(m.handles + m.genus - 2));
        if (c(2 * m.genus - 1) != want) throw std::runtime_error("c_{2g-1} anchor violated");
    }
    for (const auto& [name, v] : m.curve_list) {
        (void)name;
        Int g = 0;
        for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
        if (g != 1) throw std::runtime_error("curve class not primitive");
    }
    if (m.has_curve("gamma3")) {
        // (c2, gamma3, c6) must be a chain
        const Vec& gm = m.curve("gamma3");
        if (pairing(f, c(2), gm) != 1 || pairing(f, gm, c(6)) != 1 || pairing(f, gm, c(1)) != 0 ||
            pairing(f, gm, c(3)) != 0 || pairing(f, gm, c(4)) != 0 || pairing(f, gm, c(5)) != 0)
            throw std::runtime_error("gamma3 chain constraints violated");
    }
}

}  // namespace

std::set<int> handle_support(const SurfaceModel& m, const Vec& v) {
    std::set<int> s;
    for (std::size_t i = 0; i < m.handles; ++i)
        if (v[i] != 0 || v[m.handles + i] != 0) s.insert(static_cast<int>(i) + 1);
    return s;
}

SubsurfaceKind parse_subsurface_kind(const std::string& s) {
    if (s == "R") return SubsurfaceKind::R;
    if (s == "S") return SubsurfaceKind::S;
    if (s == "W") return SubsurfaceKind::W;
    if (s == "Y") return SubsurfaceKind::Y;
    if (s == "X") return SubsurfaceKind::X;
    throw input_error("unknown subsurface kind: " + s);
}

std::string subsurface_kind_name(SubsurfaceKind k) {
    switch (k) {
        case SubsurfaceKind::R: return "R";
        case SubsurfaceKind::S: return "S";
        case SubsurfaceKind::W: return "W";
        case SubsurfaceKind::Y: return "Y";
        case SubsurfaceKind::X: return "X";
    }
    return "?";
}

namespace {

void combinations(int lo, int hi, int m, std::set<int>& cur, std::vector<std::set<int>>& out) {
    if (m == 0) {
        out.push_back(cur);
        return;
    }
    for (int v = lo; v + m - 1 <= hi; ++v) {
        cur.insert(v);
        combinations(v + 1, hi, m - 1, cur, out);
        cur.erase(v);
    }
}

std::vector<std::set<int>> subsets_of_size(int lo, int hi, int m) {
    std::vector<std::set<int>> out;
    std::set<int> cur;
    if (m >= 0) combinations(lo, hi, m, cur, out);
    return out;
}

}  // namespace

std::vector<SubsurfaceDescriptor> enumerate_subsurfaces(SubsurfaceKind kind, int g, int m) {
    if (g < 1) throw input_error("genus must be positive");
    std::vector<SubsurfaceDescriptor> out;
    switch (kind) {
        case SubsurfaceKind::R:
            for (int i = 1; i <= g; ++i) out.push_back({kind, {i}, {i}});
            break;
        case SubsurfaceKind::Y:
            for (int i = 1; i <= g; ++i) {
                SubsurfaceDescriptor d{kind, {i}, {}};
                for (int h = 1; h <= g + 1; ++h)
                    if (h != i) d.support_handles.insert(h);
                out.push_back(std::move(d));
            }
            break;
        case SubsurfaceKind::S:
        case SubsurfaceKind::X: {
            if (m > g) throw input_error("index size exceeds genus");
            for (auto& idx : subsets_of_size(1, g, m)) {
                SubsurfaceDescriptor d{kind, idx, idx};
                d.support_handles.insert(g + 1);  // these families carry the boundary handle
                out.push_back(std::move(d));
            }
            break;
        }
        case SubsurfaceKind::W: {
            if (m > g + 1) throw input_error("index size exceeds g+1");
            for (auto& idx : subsets_of_size(1, g + 1, m)) out.push_back({kind, idx, idx});
            break;
        }
    }
    return out;
}

bool generator_support_cover(int g, int m) {
    if (m < 1) throw input_error("subsurface size must be positive");
    SurfaceModel s = build_surface(g, 2);
    std::vector<std::string> gens;
    for (int j = 1; j <= 2 * g + 1; ++j) gens.push_back("c" + std::to_string(j));
    if (s.has_curve("b")) gens.push_back("b");
    for (const auto& name : gens) {
        // support fits in an m-subset of {1..g+1} iff it has at most m handles
        if (static_cast<int>(handle_support(s, s.curve(name)).size()) > m) return false;
    }
    return true;
}

}  // namespace torelli
