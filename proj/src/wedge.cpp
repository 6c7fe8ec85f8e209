#include "wedge.hpp"

namespace torelli {

void Wedge3::add(const Triple& t, const Int& v) {
    if (v == 0) return;
    auto it = coeffs.find(t);
    if (it == coeffs.end()) {
        coeffs.emplace(t, v);
        return;
    }
    it->second += v;
    if (it->second == 0) coeffs.erase(it);
}

Wedge3 wedge_add(const Wedge3& a, const Wedge3& b) {
    Wedge3 r = a;
    for (const auto& [t, v] : b.coeffs) r.add(t, v);
    return r;
}

Wedge3 wedge_scale(const Wedge3& a, const Int& k) {
    Wedge3 r;
    if (k == 0) return r;
    for (const auto& [t, v] : a.coeffs) r.coeffs.emplace(t, v * k);
    return r;
}

Wedge3 wedge(const Vec& u, const Vec& v, const Vec& w) {
    if (u.size() != v.size() || v.size() != w.size()) throw input_error("wedge: rank mismatch");
    const int n = static_cast<int>(u.size());
    // only indices where some argument is nonzero can contribute
    std::vector<int> sup;
    for (int i = 0; i < n; ++i)
        if (u[i] != 0 || v[i] != 0 || w[i] != 0) sup.push_back(i);
    Wedge3 r;
    for (std::size_t a = 0; a < sup.size(); ++a)
        for (std::size_t b = a + 1; b < sup.size(); ++b)
            for (std::size_t c = b + 1; c < sup.size(); ++c) {
                int i = sup[a], j = sup[b], k = sup[c];
                Int det = u[i] * (v[j] * w[k] - v[k] * w[j]) - u[j] * (v[i] * w[k] - v[k] * w[i]) +
                          u[k] * (v[i] * w[j] - v[j] * w[i]);
                r.add({i, j, k}, det);
            }
    return r;
}

Wedge3 sp_action_wedge3(const IntersectionForm& f, const IntMat& m, const Wedge3& t) {
    if (!sp_membership(f, m)) throw input_error("matrix does not preserve the form");
    std::vector<Vec> col(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) {
        col[j].resize(m.rows);
        for (std::size_t i = 0; i < m.rows; ++i) col[j][i] = m.at(i, j);
    }
    Wedge3 r;
    for (const auto& [tr, v] : t.coeffs)
        r = wedge_add(r, wedge_scale(wedge(col[tr[0]], col[tr[1]], col[tr[2]]), v));
    return r;
}

IntMat twist_action(const SurfaceModel& m, const std::string& curve, int sign) {
    return transvection_power(m.form, m.curve(curve), -sign);
}

Wedge3 tau_chainmap(const SurfaceModel& m, const ChainMapValue& c) {
    if (c.curves.empty() || c.curves.size() % 2 == 0) throw input_error("tau needs an odd chain");
    SymplecticBasisResult gs = symplectic_reduce(m.form, c.curves);
    Wedge3 r;
    for (const auto& [z, w] : gs.pairs) r = wedge_add(r, wedge(z, w, c.boundary_class));
    return r;
}

namespace {

Wedge3 tau_payload(const SurfaceModel& m, const WordToken& t) {
    switch (t.kind) {
        case WordToken::Kind::Chain:
            return tau_chainmap(m, expand_subchain(t.chain, m));
        case WordToken::Kind::BoundingPair: {
            Wedge3 r;
            for (const auto& [z, w] : t.certificate.pairs)
                r = wedge_add(r, wedge(z, w, t.certificate.common_class));
            return r;
        }
        case WordToken::Kind::SeparatingTwist:
            return {};  // tau vanishes on separating twists
    }
    throw std::runtime_error("unreachable token kind");
}

}  // namespace

Wedge3 tau_token(const SurfaceModel& m, const WordToken& t) {
    if (t.exponent != 1 && t.exponent != -1) throw input_error("token exponent must be +-1");
    Wedge3 v = tau_payload(m, t);
    for (auto it = t.conjugators.rbegin(); it != t.conjugators.rend(); ++it)
        v = sp_action_wedge3(m.form, twist_action(m, it->first, it->second), v);
    return wedge_scale(v, t.exponent);
}

Wedge3 tau_word(const SurfaceModel& m, const GroupWord& w) {
    Wedge3 r;
    for (const WordToken& t : w) r = wedge_add(r, tau_token(m, t));
    return r;
}

}  // namespace torelli
