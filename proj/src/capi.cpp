#include "torelli.h"

#include "checks.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

using namespace torelli;

struct trl_model {
    SurfaceModel m;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (p) std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int emit(char** out, const json& doc) {
    if (!out) return TRL_INVALID;
    *out = dup_string(doc.dump());
    return *out ? TRL_OK : TRL_INTERNAL;
}

// Runs the body, translating exceptions to status codes.
template <typename F>
int guarded(char** out, F&& body) {
    if (out) *out = nullptr;
    try {
        return body();
    } catch (const input_error& e) {
        g_last_error = e.what();
        return TRL_INVALID;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return TRL_INTERNAL;
    }
}

}  // namespace

extern "C" {

int trl_model_new(int genus, int boundaries, trl_model** out) {
    if (!out) return TRL_INVALID;
    *out = nullptr;
    return guarded(nullptr, [&] {
        *out = new trl_model{build_surface(genus, boundaries)};
        return TRL_OK;
    });
}

void trl_model_free(trl_model* m) { delete m; }

const char* trl_last_error(void) { return g_last_error.c_str(); }

void trl_string_free(char* s) { std::free(s); }

int trl_table_json(const trl_model* m, char** out_json) {
    return guarded(out_json, [&] {
        if (!m) throw input_error("null model");
        return emit(out_json, table_to_json(m->m));
    });
}

int trl_enumerate_json(const trl_model* m, char** out_json) {
    return guarded(out_json, [&] {
        if (!m) throw input_error("null model");
        auto gens = enumerate_generators(m->m);
        json list = json::array();
        std::size_t nontrivial = 0;
        for (const ChainNotation& n : gens) {
            json e = notation_to_json(m->m, n);
            if (e["genus_of_map"].get<int>() >= 1) ++nontrivial;
            list.push_back(std::move(e));
        }
        json doc{{"generators", list},
                 {"count", gens.size()},
                 {"count_nontrivial", nontrivial},
                 {"convention",
                  "odd subchains over sentinels 1..2g+2 plus odd beta chains starting at 5"}};
        return emit(out_json, doc);
    });
}

int trl_rewrite_json(const trl_model* m, const char* chain, int twist, int sign, char** out_json) {
    return guarded(out_json, [&] {
        if (!m || !chain) throw input_error("null argument");
        ChainNotation n = parse_chain(chain);
        GroupWord w = conjugate_by_twist(twist, sign, n, m->m);
        json doc = word_to_json(m->m, w);
        doc["input"] = format_chain(n);
        doc["twist"] = twist;
        doc["sign"] = sign;
        doc["commutes"] = commutes_with_twist(twist, n);
        return emit(out_json, doc);
    });
}

int trl_tau_json(const trl_model* m, const char* chain, char** out_json) {
    return guarded(out_json, [&] {
        if (!m || !chain) throw input_error("null argument");
        ChainNotation n = parse_chain(chain);
        ChainMapValue v = expand_subchain(n, m->m);
        json doc = wedge_to_json(m->m, tau_chainmap(m->m, v));
        doc["chain"] = format_chain(n);
        doc["genus_of_map"] = v.genus;
        return emit(out_json, doc);
    });
}

int trl_sigma_json(const trl_model* m, const char* chain, char** out_json) {
    return guarded(out_json, [&] {
        if (!m || !chain) throw input_error("null argument");
        ChainNotation n = parse_chain(chain);
        ChainMapValue v = expand_subchain(n, m->m);
        json doc = boolpoly_to_json(m->m, sigma_chainmap(m->m, v));
        doc["chain"] = format_chain(n);
        doc["genus_of_map"] = v.genus;
        return emit(out_json, doc);
    });
}

int trl_verify_json(const trl_model* m, const char* relation, int k, char** out_json) {
    return guarded(out_json, [&] {
        if (!m || !relation) throw input_error("null argument");
        auto [lhs, rhs] = relation_words(relation, k, m->m);
        bool tau_zero = tau_word(m->m, lhs) == tau_word(m->m, rhs);
        bool sigma_zero = sigma_word(m->m, lhs) == sigma_word(m->m, rhs);
        bool ok = tau_zero && sigma_zero;
        json doc{{"relation", relation},
                 {"k", k},
                 {"genus", m->m.genus},
                 {"lhs", word_to_json(m->m, lhs)},
                 {"rhs", word_to_json(m->m, rhs)},
                 {"tau_zero", tau_zero},
                 {"sigma_zero", sigma_zero},
                 {"verdict", ok ? "pass" : "fail"}};
        int rc = emit(out_json, doc);
        return rc == TRL_OK && !ok ? TRL_VERIFY_FAIL : rc;
    });
}

namespace {

json rank_report(const SurfaceModel& m) {
    std::vector<Wedge3> taus;
    std::vector<BoolPoly> sigmas;
    for (const ChainNotation& n : enumerate_generators(m)) {
        ChainMapValue v = expand_subchain(n, m);
        taus.push_back(tau_chainmap(m, v));
        sigmas.push_back(sigma_chainmap(m, v));
    }
    const int d = m.boundary_count == 2 ? 2 * m.genus + 1 : 2 * m.genus;
    long long sigma_expect = to_int64(bool_rank(d, 3));
    long long tau_expect = to_int64(binomial(d, 3));
    std::size_t tau_rank = span_dim_Q(taus, m.rank());
    std::size_t sigma_rank = span_dim_F2(sigmas);
    bool ok = tau_rank == static_cast<std::size_t>(tau_expect) &&
              sigma_rank == static_cast<std::size_t>(sigma_expect);
    return json{{"genus", m.genus},
                {"boundaries", m.boundary_count},
                {"computed", sigma_rank},
                {"expected", sigma_expect},
                {"tau_computed", tau_rank},
                {"tau_expected", tau_expect},
                {"verdict", ok ? "pass" : "fail"}};
}

}  // namespace

int trl_rank_json(const trl_model* m, char** out_json) {
    return guarded(out_json, [&] {
        if (!m) throw input_error("null model");
        json doc = rank_report(m->m);
        bool ok = doc["verdict"] == "pass";
        int rc = emit(out_json, doc);
        return rc == TRL_OK && !ok ? TRL_VERIFY_FAIL : rc;
    });
}

int trl_span_json(const trl_model* m, const char* what, char** out_json) {
    return guarded(out_json, [&] {
        if (!m || !what) throw input_error("null argument");
        const std::string w = what;
        json doc;
        bool ok = false;
        if (w == "tau" || w == "sigma") {
            json r = rank_report(m->m);
            std::size_t dim = w == "tau" ? r["tau_computed"].get<std::size_t>()
                                         : r["computed"].get<std::size_t>();
            long long expect =
                w == "tau" ? r["tau_expected"].get<long long>() : r["expected"].get<long long>();
            ok = dim == static_cast<std::size_t>(expect);
            doc = json{{"what", w},
                       {"genus", m->m.genus},
                       {"boundaries", m->m.boundary_count},
                       {"dimension", dim},
                       {"expected", expect},
                       {"match", ok}};
        } else if (w == "dmin") {
            if (m->m.boundary_count != 2) throw input_error("dmin needs the two-boundary model");
            DminResult r = d_min_search(m->m.genus);
            ok = r.d == 2;
            json trail = json::array();
            for (auto [d, dim] : r.trail) trail.push_back(json{{"d", d}, {"dimension", dim}});
            doc = json{{"what", w}, {"genus", m->m.genus}, {"dimension", r.d}, {"expected", 2},
                       {"match", ok},  {"trail", trail}};
        } else {
            throw input_error("span target must be tau, sigma or dmin");
        }
        int rc = emit(out_json, doc);
        return rc == TRL_OK && !ok ? TRL_VERIFY_FAIL : rc;
    });
}

int trl_twist_matrix_json(const trl_model* m, const char* curve, int sign, char** out_json) {
    return guarded(out_json, [&] {
        if (!m || !curve) throw input_error("null argument");
        json doc{{"curve", curve},
                 {"sign", sign},
                 {"matrix", mat_to_json(twist_action(m->m, curve, sign))}};
        return emit(out_json, doc);
    });
}

int trl_graph_json(int genus, int m, char** out_json) {
    return guarded(out_json, [&] {
        GraphModel gm = disjointness_graph(genus, m);
        bool conn = is_connected(gm);
        bool nontrivial = gm.vertices.size() >= 2;
        json doc = graph_to_json(gm);
        doc["genus"] = genus;
        doc["m"] = m;
        doc["connected"] = conn;
        doc["nontrivial"] = nontrivial;
        doc["bound_2m1_le_g"] = 2 * m + 1 <= genus;
        return emit(out_json, doc);
    });
}

int trl_cover_json(const trl_model* m, int size, char** out_json) {
    return guarded(out_json, [&] {
        if (!m) throw input_error("null model");
        bool covered = generator_support_cover(m->m.genus, size);
        json doc{{"genus", m->m.genus}, {"m", size}, {"covered", covered}};
        return emit(out_json, doc);
    });
}

int trl_all_checks_json(char** out_json) {
    return guarded(out_json, [&] {
        auto results = run_all_checks();
        bool all_ok = true;
        json list = json::array();
        for (const CheckResult& r : results) {
            all_ok = all_ok && !r.failed();
            list.push_back(json{{"name", r.name}, {"verdict", r.verdict}, {"details", r.details}});
        }
        json doc{{"checks", list}, {"verdict", all_ok ? "pass" : "fail"}};
        int rc = emit(out_json, doc);
        return rc == TRL_OK && !all_ok ? TRL_VERIFY_FAIL : rc;
    });
}

const char* trl_version(void) { return "0.1.0"; }

}  // extern "C"
