#include "boolpoly.hpp"

#include <algorithm>

namespace torelli {

BoolPoly bool_add(const BoolPoly& p, const BoolPoly& q) {
    BoolPoly r = p;
    for (const Mono& m : q.monomials) {
        auto it = r.monomials.find(m);
        if (it == r.monomials.end())
            r.monomials.insert(m);
        else
            r.monomials.erase(it);
    }
    return r;
}

BoolPoly bool_mul(const BoolPoly& p, const BoolPoly& q, int k) {
    BoolPoly r;
    for (const Mono& a : p.monomials)
        for (const Mono& b : q.monomials) {
            Mono u;
            std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(u));
            if (static_cast<int>(u.size()) > k) continue;
            auto it = r.monomials.find(u);
            if (it == r.monomials.end())
                r.monomials.insert(std::move(u));
            else
                r.monomials.erase(it);
        }
    return r;
}

BoolPoly bool_embed(const IntersectionForm& f, const Vec& v) {
    if (v.size() != f.rank()) throw input_error("bool_embed: rank mismatch");
    std::vector<int> sup;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] % 2 != 0) sup.push_back(static_cast<int>(i));
    BoolPoly r;
    for (int i : sup) r.monomials.insert(Mono{i});
    // iterated twisted additivity leaves the pairwise intersection constant
    Int c = 0;
    for (std::size_t a = 0; a < sup.size(); ++a)
        for (std::size_t b = a + 1; b < sup.size(); ++b) c += f.gram.at(sup[a], sup[b]);
    if (c % 2 != 0) r.monomials.insert(Mono{});
    return r;
}

Int bool_rank(int d, int k) {
    if (d < k) throw input_error("bool_rank needs d >= k");
    Int s = 0;
    for (int i = 0; i <= k; ++i) s += binomial(d, i);
    return s;
}

BoolPoly sigma_chainmap(const SurfaceModel& m, const ChainMapValue& c) {
    if (c.curves.empty() || c.curves.size() % 2 == 0) throw input_error("sigma needs an odd chain");
    SymplecticBasisResult gs = symplectic_reduce(m.form, c.curves);
    BoolPoly omega;
    for (const auto& [z, w] : gs.pairs)
        omega = bool_add(omega, bool_mul(bool_embed(m.form, z), bool_embed(m.form, w)));
    return bool_mul(omega, bool_add(bool_embed(m.form, c.boundary_class), BoolPoly::one()));
}

BoolPoly sp2_action(const IntersectionForm& f, const IntMat& mat, const BoolPoly& p) {
    if (!sp_membership(f, mat)) throw input_error("matrix does not preserve the form");
    std::vector<BoolPoly> gen_image(f.rank());
    std::vector<bool> have(f.rank(), false);
    BoolPoly r;
    for (const Mono& m : p.monomials) {
        BoolPoly term = BoolPoly::one();
        for (int i : m) {
            if (!have[i]) {
                Vec col(f.rank());
                for (std::size_t r2 = 0; r2 < f.rank(); ++r2) col[r2] = mat.at(r2, i);
                gen_image[i] = bool_embed(f, col);
                have[i] = true;
            }
            term = bool_mul(term, gen_image[i]);
        }
        r = bool_add(r, term);
    }
    return r;
}

namespace {

BoolPoly sigma_payload(const SurfaceModel& m, const WordToken& t) {
    switch (t.kind) {
        case WordToken::Kind::Chain:
            return sigma_chainmap(m, expand_subchain(t.chain, m));
        case WordToken::Kind::BoundingPair: {
            BoolPoly omega;
            for (const auto& [z, w] : t.certificate.pairs)
                omega = bool_add(omega, bool_mul(bool_embed(m.form, z), bool_embed(m.form, w)));
            return bool_mul(omega, bool_add(bool_embed(m.form, t.certificate.common_class), BoolPoly::one()));
        }
        case WordToken::Kind::SeparatingTwist: {
            // Birman-Craggs value of a separating twist: sum of z-bar w-bar
            // over a symplectic basis of the piece it cuts off.
            BoolPoly omega;
            for (const auto& [z, w] : t.certificate.pairs)
                omega = bool_add(omega, bool_mul(bool_embed(m.form, z), bool_embed(m.form, w)));
            return omega;
        }
    }
    throw std::runtime_error("unreachable token kind");
}

}  // namespace

BoolPoly sigma_token(const SurfaceModel& m, const WordToken& t) {
    if (t.exponent != 1 && t.exponent != -1) throw input_error("token exponent must be +-1");
    BoolPoly v = sigma_payload(m, t);  // exponent is invisible in characteristic 2
    for (auto it = t.conjugators.rbegin(); it != t.conjugators.rend(); ++it)
        v = sp2_action(m.form, twist_action(m, it->first, it->second), v);
    return v;
}

BoolPoly sigma_word(const SurfaceModel& m, const GroupWord& w) {
    BoolPoly r;
    for (const WordToken& t : w) r = bool_add(r, sigma_token(m, t));
    return r;
}

std::set<Triple> map_a(const Wedge3& u) {
    std::set<Triple> r;
    for (const auto& [t, v] : u.coeffs)
        if (v % 2 != 0) r.insert(t);
    return r;
}

std::set<Triple> map_b(const BoolPoly& p) {
    std::set<Triple> r;
    for (const Mono& m : p.monomials) {
        if (m.size() != 3) continue;  // degree <= 2 dies
        Triple t{m[0], m[1], m[2]};
        if (r.count(t))
            r.erase(t);
        else
            r.insert(t);
    }
    return r;
}

bool w_membership(const Wedge3& u, const BoolPoly& p) { return map_a(u) == map_b(p); }

}  // namespace torelli
