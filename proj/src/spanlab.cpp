#include "spanlab.hpp"

#include <algorithm>
#include <numeric>

namespace torelli {

std::size_t span_dim_Q(const std::vector<Wedge3>& vectors, std::size_t ambient_rank) {
    // columns indexed by all triples over the ambient basis
    std::map<Triple, std::size_t> col;
    for (int i = 0; i < static_cast<int>(ambient_rank); ++i)
        for (int j = i + 1; j < static_cast<int>(ambient_rank); ++j)
            for (int k = j + 1; k < static_cast<int>(ambient_rank); ++k)
                col.emplace(Triple{i, j, k}, col.size());
    IntEchelon e;
    for (const Wedge3& w : vectors) {
        Vec row(col.size());
        for (const auto& [t, v] : w.coeffs) row[col.at(t)] = v;
        e.insert(std::move(row));
    }
    return e.rank();
}

std::size_t span_dim_F2(const std::vector<BoolPoly>& polys) {
    std::map<Mono, std::size_t> col;
    for (const BoolPoly& p : polys)
        for (const Mono& m : p.monomials) col.emplace(m, col.size());
    const std::size_t words = col.size() / 64 + 1;
    std::vector<std::vector<std::uint64_t>> rows;
    std::size_t rank = 0;
    for (const BoolPoly& p : polys) {
        std::vector<std::uint64_t> r(words);
        for (const Mono& m : p.monomials) {
            std::size_t c = col.at(m);
            r[c / 64] ^= std::uint64_t(1) << (c % 64);
        }
        for (const auto& other : rows) {
            std::size_t lead = 0;
            while (lead < words && other[lead] == 0) ++lead;
            if (lead == words) continue;
            std::uint64_t bit = other[lead] & ~(other[lead] - 1);  // lowest set bit
            if (r[lead] & bit)
                for (std::size_t i = 0; i < words; ++i) r[i] ^= other[i];
        }
        if (std::any_of(r.begin(), r.end(), [](std::uint64_t x) { return x != 0; })) {
            rows.push_back(std::move(r));
            ++rank;
        }
    }
    return rank;
}

TripleIndexer::TripleIndexer(std::vector<int> basis_indices) : basis(std::move(basis_indices)) {
    const int n = static_cast<int>(basis.size());
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) index.emplace(Triple{basis[a], basis[b], basis[c]}, index.size());
}

Vec TripleIndexer::densify(const Wedge3& w) const {
    Vec r(dim());
    for (const auto& [t, v] : w.coeffs) {
        auto it = index.find(t);
        if (it == index.end()) throw input_error("vector leaves the indexed subspace");
        r[it->second] = v;
    }
    return r;
}

OrbitResult orbit_closure_span(const std::vector<Wedge3>& seeds, const std::vector<IntMat>& generators,
                               const IntersectionForm& f, const TripleIndexer& ix) {
    for (const IntMat& m : generators)
        if (!sp_membership(f, m)) throw input_error("orbit generator does not preserve the form");

    // lift each generator to its action on the indexed triples, columnwise
    std::vector<std::vector<Vec>> lifted;  // lifted[g][col] = dense image vector
    for (const IntMat& m : generators) {
        std::vector<Vec> cols(m.cols, Vec(m.rows));
        for (std::size_t j = 0; j < m.cols; ++j)
            for (std::size_t i = 0; i < m.rows; ++i) cols[j][i] = m.at(i, j);
        // the generator acts in local coordinates; translate its wedge back
        // through the ambient labels the indexer is keyed by
        std::map<int, std::size_t> local_of;
        for (std::size_t l = 0; l < ix.basis.size(); ++l) local_of[ix.basis[l]] = l;
        std::vector<Vec> img(ix.dim());
        for (const auto& [t, c] : ix.index) {
            Wedge3 w = wedge(cols[local_of.at(t[0])], cols[local_of.at(t[1])], cols[local_of.at(t[2])]);
            Vec dense(ix.dim());
            for (const auto& [lt, v] : w.coeffs)
                dense[ix.index.at(Triple{ix.basis[lt[0]], ix.basis[lt[1]], ix.basis[lt[2]]})] = v;
            img[c] = std::move(dense);
        }
        lifted.push_back(std::move(img));
    }
    auto apply = [&](const std::vector<Vec>& lift, const Vec& v) {
        Vec r(ix.dim());
        for (std::size_t c = 0; c < v.size(); ++c) {
            if (v[c] == 0) continue;
            for (std::size_t i = 0; i < r.size(); ++i) r[i] += v[c] * lift[c][i];
        }
        return r;
    };

    IntEchelon basis;
    for (const Wedge3& s : seeds) basis.insert(ix.densify(s));
    std::size_t rounds = 0;
    for (;;) {
        std::size_t before = basis.rank();
        if (before == ix.dim()) break;
        std::vector<Vec> frontier = basis.rows;
        bool grew = false;
        for (const auto& lift : lifted)
            for (const Vec& v : frontier) grew |= basis.insert(apply(lift, v));
        if (!grew) break;
        ++rounds;
        if (rounds > ix.dim() + 1) throw std::runtime_error("orbit closure failed to stabilize");
    }
    return {basis.rank(), rounds};
}

OrbitProblem::OrbitProblem(int g)
    : model(build_surface(g, 2)), indexer([&] {
          // drop x_{g+1}: ambient indices 0..g-1 (x_1..x_g) and g+1..2g+1 (y's)
          std::vector<int> keep;
          for (int i = 0; i < g; ++i) keep.push_back(i);
          for (int i = g + 1; i <= 2 * g + 1; ++i) keep.push_back(i);
          return keep;
      }()) {
    // Humphries images: transvections along c_1..c_{2g} and b, restricted to
    // the kept coordinates (they all fix x_{g+1} and y_{g+1}).
    std::vector<std::string> names;
    for (int j = 1; j <= 2 * g; ++j) names.push_back("c" + std::to_string(j));
    names.push_back("b");
    const std::size_t n = indexer.basis.size();
    restricted_form.gram = IntMat(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            restricted_form.gram.at(i, j) = model.form.gram.at(indexer.basis[i], indexer.basis[j]);
    for (const auto& name : names) {
        IntMat full = transvection_matrix(model.form, model.curve(name));
        IntMat r(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) r.at(i, j) = full.at(indexer.basis[i], indexer.basis[j]);
        generators.push_back(std::move(r));
    }
}

std::vector<Wedge3> OrbitProblem::seeds(int d) const {
    const int g = model.genus;
    if (d < 1 || d > g) throw input_error("seed degree out of range");
    // V_I: basis triples with handle support inside I + {g+1}
    auto handle_of = [&](int ambient_index) {
        const int h = static_cast<int>(model.handles);
        return ambient_index < h ? ambient_index + 1 : ambient_index - h + 1;
    };
    std::vector<Wedge3> seeds;
    std::vector<int> idx(d);
    auto emit = [&](const std::set<int>& handles) {
        for (const auto& [t, c] : indexer.index) {
            (void)c;
            bool ok = true;
            for (int v : t) {
                int h = handle_of(v);
                if (h != g + 1 && handles.count(h) == 0) ok = false;
            }
            if (!ok) continue;
            Wedge3 w;
            w.coeffs.emplace(t, 1);
            seeds.push_back(std::move(w));
        }
    };
    auto rec = [&](auto&& self, int pos, int lo) -> void {
        if (pos == d) {
            emit(std::set<int>(idx.begin(), idx.end()));
            return;
        }
        for (int v = lo; v + (d - pos - 1) <= g; ++v) {
            idx[pos] = v;
            self(self, pos + 1, v + 1);
        }
    };
    rec(rec, 0, 1);
    return seeds;
}

DminResult d_min_search(int g) {
    if (g < 3) throw input_error("d_min_search needs genus >= 3");
    OrbitProblem p(g);
    DminResult res;
    for (int d = 1; d <= g; ++d) {
        OrbitResult r = orbit_closure_span(p.seeds(d), p.generators, p.restricted_form, p.indexer);
        res.trail.emplace_back(d, r.dim);
        if (r.dim == p.indexer.dim()) {
            res.d = d;
            return res;
        }
    }
    throw std::runtime_error("orbit span never reached the full space");
}

GraphModel disjointness_graph(int g, int m) {
    if (m < 1 || m > g + 1) throw input_error("graph size out of range");
    GraphModel gm;
    gm.vertices = enumerate_subsurfaces(SubsurfaceKind::W, g, m);
    for (std::size_t i = 0; i < gm.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < gm.vertices.size(); ++j) {
            const auto& a = gm.vertices[i].index_set;
            const auto& b = gm.vertices[j].index_set;
            bool disjoint = std::none_of(a.begin(), a.end(), [&](int v) { return b.count(v) != 0; });
            if (disjoint) gm.edges.emplace_back(i, j);
        }
    return gm;
}

bool is_connected(const GraphModel& g) {
    if (g.vertices.empty()) return false;
    std::vector<std::vector<std::size_t>> adj(g.vertices.size());
    for (auto [a, b] : g.edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    std::vector<bool> seen(g.vertices.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.vertices.size();
}

}  // namespace torelli
