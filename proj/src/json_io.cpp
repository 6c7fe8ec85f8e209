#include "json_io.hpp"

namespace torelli {

json vec_to_json(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(to_int64(x));
    return a;
}

json mat_to_json(const IntMat& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols; ++j) row.push_back(to_int64(m.at(i, j)));
        a.push_back(std::move(row));
    }
    return a;
}

json table_to_json(const SurfaceModel& m) {
    json curves = json::object();
    for (const auto& [name, v] : m.curve_list) curves[name] = vec_to_json(v);
    return json{{"genus", m.genus},
                {"boundaries", m.boundary_count},
                {"rank", m.rank()},
                {"basis", m.basis_labels},
                {"curves", curves}};
}

json wedge_to_json(const SurfaceModel& m, const Wedge3& w) {
    json triples = json::array();
    for (const auto& [t, v] : w.coeffs)
        triples.push_back(json::array(
            {m.basis_label(t[0]), m.basis_label(t[1]), m.basis_label(t[2]), to_int64(v)}));
    return json{{"triples", triples}};
}

json boolpoly_to_json(const SurfaceModel& m, const BoolPoly& p) {
    json monos = json::array();
    for (const Mono& mono : p.monomials) {
        json one = json::array();
        if (mono.empty())
            one.push_back("1");
        else
            for (int i : mono) one.push_back(m.basis_label(i));
        monos.push_back(std::move(one));
    }
    return json{{"monomials", monos}};
}

json notation_to_json(const SurfaceModel& m, const ChainNotation& n) {
    ChainMapValue v = expand_subchain(n, m);
    return json{{"notation", format_chain(n)},
                {"beta", n.beta},
                {"genus_of_map", v.genus},
                {"boundary_class", vec_to_json(v.boundary_class)}};
}

json word_to_json(const SurfaceModel& m, const GroupWord& w) {
    json tokens = json::array();
    for (const WordToken& t : w) {
        json tok;
        switch (t.kind) {
            case WordToken::Kind::Chain:
                tok["chain"] = format_chain(t.chain);
                break;
            case WordToken::Kind::BoundingPair:
                tok["bounding_pair"] = t.certificate.label;
                break;
            case WordToken::Kind::SeparatingTwist:
                tok["separating_twist"] = t.certificate.label;
                break;
        }
        tok["exponent"] = t.exponent;
        if (!t.conjugators.empty()) {
            json cj = json::array();
            for (const auto& [name, sign] : t.conjugators)
                cj.push_back(json::array({name, sign}));
            tok["conjugated_by"] = cj;
        }
        tokens.push_back(std::move(tok));
    }
    return json{{"tokens", tokens}};
}

json graph_to_json(const GraphModel& g) {
    json verts = json::array();
    for (const auto& v : g.vertices) {
        json idx = json::array();
        for (int i : v.index_set) idx.push_back(i);
        verts.push_back(idx);
    }
    return json{{"vertices", g.vertices.size()}, {"edges", g.edges.size()}, {"vertex_sets", verts}};
}

}  // namespace torelli
