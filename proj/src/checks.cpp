#include "checks.hpp"

#include <random>

namespace torelli {

namespace {

Vec random_vec(std::mt19937& rng, std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = static_cast<long>(rng() % 19) - 9;
    return v;
}

CheckResult pass_fail(std::string name, bool ok, json details) {
    return {std::move(name), ok ? "pass" : "fail", std::move(details)};
}

Wedge3 single_triple(int a, int b, int c, int coeff = 1) {
    Wedge3 w;
    w.coeffs.emplace(Triple{a, b, c}, coeff);
    return w;
}

}  // namespace

CheckResult check_symplectic_random() {
    std::mt19937 rng(20240819);
    std::size_t tested = 0;
    bool ok = true;
    for (int g = 1; g <= 5 && ok; ++g)
        for (int nb = 1; nb <= 2 && ok; ++nb) {
            SurfaceModel m = build_surface(g, nb);
            for (int rep = 0; rep < 100 && ok; ++rep) {
                Vec u = random_vec(rng, m.rank()), v = random_vec(rng, m.rank());
                ok = ok && pairing(m.form, u, v) == -pairing(m.form, v, u);
                ok = ok && pairing(m.form, u, u) == 0;
                if (!vec_is_zero(u)) ok = ok && sp_membership(m.form, transvection_matrix(m.form, u));
                ++tested;
            }
        }
    return pass_fail("symplectic_random", ok,
                     json{{"vector_pairs", tested}, {"genus_range", "1..5"}, {"boundaries", "1,2"}});
}

CheckResult check_transvection_anchor() {
    json per_genus = json::array();
    bool ok = true;
    for (int g = 3; g <= 5; ++g) {
        SurfaceModel m = build_surface(g, 2);
        const std::size_t h = m.handles;
        Vec xg = m.basis_vector(g - 1), yg = m.basis_vector(h + g - 1);
        Vec ygm1 = m.basis_vector(h + g - 2), ygp1 = m.basis_vector(h + g);
        Vec cls = vec_sub(yg, ygm1);
        IntMat t = transvection_matrix(m.form, cls);
        bool vec_ok = mat_vec(t, xg) == vec_add(xg, cls) &&
                      transvection_apply(m.form, xg, cls) == vec_add(xg, cls);

        // On the sorted basis the image is x_g^y_g^y_{g+1} - y_{g-1}^y_g^y_{g+1};
        // the second wedge symbol appears with its arguments ordered, hence -1.
        Wedge3 in = single_triple(g - 1, static_cast<int>(h) + g - 1, static_cast<int>(h) + g);
        Wedge3 expect = in;
        expect.add({static_cast<int>(h) + g - 2, static_cast<int>(h) + g - 1, static_cast<int>(h) + g}, -1);
        bool cube_ok = sp_action_wedge3(m.form, t, in) == expect;
        ok = ok && vec_ok && cube_ok;
        per_genus.push_back(json{{"genus", g}, {"vector", vec_ok}, {"cube", cube_ok}});
    }
    return pass_fail("transvection_anchor", ok, json{{"cases", per_genus}});
}

CheckResult check_chain_calculus() {
    bool ok = true;
    json details;
    {
        SurfaceModel m = build_surface(3, 2);
        ChainMapValue v = expand_subchain(parse_chain("1346"), m);
        auto c = [&](int j) { return m.curve("c" + std::to_string(j)); };
        ok = ok && v.curves.size() == 3 && v.curves[0] == vec_add(c(1), c(2)) && v.curves[1] == c(3) &&
             v.curves[2] == vec_add(c(4), c(5));
        details["expansion_1346"] = ok;
    }
    json per_genus = json::array();
    for (int g = 3; g <= 5; ++g) {
        SurfaceModel m = build_surface(g, 2);
        std::size_t n = 0;
        bool all_zero = true;
        for (const ChainNotation& cn : enumerate_generators(m)) {
            ChainMapValue v = expand_subchain(cn, m);
            for (const Vec& c : v.curves)
                all_zero = all_zero && pairing(m.form, v.boundary_class, c) == 0;
            ++n;
        }
        ok = ok && all_zero;
        per_genus.push_back(json{{"genus", g}, {"generators", n}, {"boundary_orthogonal", all_zero}});
    }
    details["generators"] = per_genus;
    return pass_fail("chain_calculus", ok, details);
}

CheckResult check_rewrite_soundness() {
    bool ok = true;
    json per_genus = json::array();
    for (int g = 3; g <= 4; ++g) {
        SurfaceModel m = build_surface(g, 2);
        auto gens = enumerate_generators(m);
        std::size_t applied = 0, commuting = 0, skipped = 0;
        bool tau_ok = true, sigma_ok = true, beta_ok = true;
        for (const ChainNotation& n : gens) {
            Wedge3 tn = tau_chainmap(m, expand_subchain(n, m));
            BoolPoly sn = (g == 3) ? sigma_chainmap(m, expand_subchain(n, m)) : BoolPoly{};
            for (int j = 1; j <= 2 * g + 1; ++j)
                for (int sign : {1, -1}) {
                    GroupWord w;
                    try {
                        w = conjugate_by_twist(j, sign, n, m);
                    } catch (const input_error&) {
                        ++skipped;  // no rule for this twist/chain combination
                        continue;
                    }
                    IntMat act = twist_action(m, "c" + std::to_string(j), sign);
                    tau_ok = tau_ok && tau_word(m, w) == sp_action_wedge3(m.form, act, tn);
                    if (g == 3) sigma_ok = sigma_ok && sigma_word(m, w) == sp2_action(m.form, act, sn);
                    if (commutes_with_twist(j, n))
                        ++commuting;
                    else
                        ++applied;
                }
            // beta substitution: [beta i...] = T_b * [4 i...]
            if (n.beta) {
                ChainNotation straight;
                straight.indices = n.indices;
                straight.indices.insert(straight.indices.begin(), 4);
                Wedge3 ts = tau_chainmap(m, expand_subchain(straight, m));
                beta_ok = beta_ok && tn == sp_action_wedge3(m.form, twist_action(m, "b", 1), ts);
            }
        }
        ok = ok && tau_ok && sigma_ok && beta_ok;
        per_genus.push_back(json{{"genus", g},
                                 {"rule_applications", applied},
                                 {"commuting_cases", commuting},
                                 {"no_rule_cases", skipped},
                                 {"tau_equivariant", tau_ok},
                                 {"sigma_equivariant", g == 3 ? json(sigma_ok) : json("not-run")},
                                 {"beta_substitution", beta_ok}});
    }
    return pass_fail("rewrite_soundness", ok, json{{"cases", per_genus}});
}

CheckResult check_relations() {
    bool ok = true;
    json cases = json::array();
    for (int g = 3; g <= 5; ++g) {
        SurfaceModel m = build_surface(g, 2);
        for (const std::string name : {"J1", "J2", "J3"}) {
            int kmax = (name == "J3") ? g + 1 : g;
            for (int k = 3; k <= kmax; ++k) {
                auto [lhs, rhs] = relation_words(name, k, m);
                bool tz = tau_word(m, lhs) == tau_word(m, rhs);
                bool sz = sigma_word(m, lhs) == sigma_word(m, rhs);
                ok = ok && tz && sz;
                cases.push_back(
                    json{{"relation", name}, {"genus", g}, {"k", k}, {"tau", tz}, {"sigma", sz}});
            }
        }
    }
    for (int g = 3; g <= 4; ++g) {
        SurfaceModel m = build_surface(g, 2);
        auto [lhs, rhs] = relation_words("lantern", 0, m);
        bool tz = tau_word(m, rhs).is_zero() && tau_word(m, lhs) == tau_word(m, rhs);
        bool sz = sigma_word(m, lhs) == sigma_word(m, rhs);
        ok = ok && tz && sz;
        cases.push_back(json{{"relation", "lantern"}, {"genus", g}, {"tau", tz}, {"sigma", sz}});
    }
    return pass_fail("relations", ok, json{{"cases", cases}});
}

namespace {

struct RankPair {
    std::size_t tau = 0, sigma = 0;
};

RankPair image_ranks(const SurfaceModel& m) {
    std::vector<Wedge3> taus;
    std::vector<BoolPoly> sigmas;
    for (const ChainNotation& n : enumerate_generators(m)) {
        ChainMapValue v = expand_subchain(n, m);
        taus.push_back(tau_chainmap(m, v));
        sigmas.push_back(sigma_chainmap(m, v));
    }
    return {span_dim_Q(taus, m.rank()), span_dim_F2(sigmas)};
}

}  // namespace

CheckResult check_abelianization_ranks() {
    bool ok = true;
    json cases = json::array();
    auto run = [&](int g, int nb, std::size_t tau_expect, std::size_t sigma_expect) {
        SurfaceModel m = build_surface(g, nb);
        RankPair r = image_ranks(m);
        bool good = r.tau == tau_expect && r.sigma == sigma_expect;
        ok = ok && good;
        cases.push_back(json{{"genus", g},
                             {"boundaries", nb},
                             {"tau_rank", r.tau},
                             {"tau_expected", tau_expect},
                             {"sigma_rank", r.sigma},
                             {"sigma_expected", sigma_expect}});
    };
    run(3, 2, 35, 64);    // C(7,3), sum_{i<=3} C(7,i)
    run(4, 2, 84, 130);   // C(9,3), sum_{i<=3} C(9,i)
    run(3, 1, 20, 42);    // one-boundary cross-check: C(6,3), sum C(6,i)
    return pass_fail("abelianization_ranks", ok, json{{"cases", cases}});
}

CheckResult check_w_compatibility() {
    bool ok = true;
    json cases = json::array();
    for (int g = 3; g <= 4; ++g) {
        SurfaceModel m = build_surface(g, 2);
        bool good = true;
        std::size_t n = 0;
        for (const ChainNotation& cn : enumerate_generators(m)) {
            ChainMapValue v = expand_subchain(cn, m);
            good = good && w_membership(tau_chainmap(m, v), sigma_chainmap(m, v));
            ++n;
        }
        ok = ok && good;
        cases.push_back(json{{"genus", g}, {"generators", n}, {"compatible", good}});
    }
    return pass_fail("w_compatibility", ok, json{{"cases", cases}});
}

CheckResult check_d_min() {
    bool ok = true;
    json cases = json::array();
    for (int g = 3; g <= 4; ++g) {
        DminResult r = d_min_search(g);
        OrbitProblem p(g);
        std::size_t full = p.indexer.dim();
        bool d1_below = !r.trail.empty() && r.trail[0].second < full;
        bool good = r.d == 2 && d1_below;
        ok = ok && good;
        json trail = json::array();
        for (auto [d, dim] : r.trail) trail.push_back(json{{"d", d}, {"dimension", dim}});
        cases.push_back(json{{"genus", g}, {"d_min", r.d}, {"full_dimension", full}, {"trail", trail}});
    }
    return pass_fail("d_min", ok, json{{"cases", cases}});
}

CheckResult check_graph_connectivity() {
    bool ok = true;
    json cases = json::array();
    for (int g = 3; g <= 9; ++g)
        for (int m = 1; 2 * m + 1 <= g; ++m) {
            GraphModel gm = disjointness_graph(g, m);
            bool conn = is_connected(gm);
            ok = ok && conn;
            cases.push_back(json{{"genus", g},
                                 {"m", m},
                                 {"vertices", gm.vertices.size()},
                                 {"edges", gm.edges.size()},
                                 {"connected", conn}});
        }
    return pass_fail("graph_connectivity", ok, json{{"bound", "2m+1 <= g"}, {"cases", cases}});
}

CheckResult check_generator_count() {
    SurfaceModel m = build_surface(3, 2);
    auto gens = enumerate_generators(m);
    std::size_t total = gens.size(), nontrivial = 0, beta = 0;
    for (const ChainNotation& n : gens) {
        if (expand_subchain(n, m).curves.size() >= 3) ++nontrivial;
        if (n.beta) ++beta;
    }
    bool bound_ok = nontrivial >= 64;
    json details{{"genus", 3},
                 {"count", total},
                 {"count_nontrivial", nontrivial},
                 {"count_beta", beta},
                 {"claimed", 85},
                 {"matches_claim", total == 85 || nontrivial == 85},
                 {"rank_lower_bound", 64},
                 {"count_at_least_rank", bound_ok},
                 {"convention",
                  "odd subchains over sentinels 1..2g+2 plus odd beta chains; one-curve "
                  "chains (trivial maps) are counted in 'count' and excluded from "
                  "'count_nontrivial'"}};
    // report-only against the claimed 85; the rank lower bound is asserted
    return {"generator_count", bound_ok ? "report-only" : "fail", std::move(details)};
}

CheckResult check_support_cover() {
    bool ok = true;
    json cases = json::array();
    for (int g = 3; g <= 6; ++g) {
        bool c2 = generator_support_cover(g, 2);
        ok = ok && c2;
        cases.push_back(json{{"genus", g}, {"m", 2}, {"covered", c2}});
    }
    bool m1 = generator_support_cover(3, 1);
    ok = ok && !m1;
    cases.push_back(json{{"genus", 3}, {"m", 1}, {"covered", m1}});
    return pass_fail("support_cover", ok, json{{"cases", cases}});
}

std::vector<CheckResult> run_all_checks() {
    return {check_symplectic_random(), check_transvection_anchor(), check_chain_calculus(),
            check_rewrite_soundness(), check_relations(),           check_abelianization_ranks(),
            check_w_compatibility(),   check_d_min(),               check_graph_connectivity(),
            check_generator_count(),   check_support_cover()};
}

}  // namespace torelli
