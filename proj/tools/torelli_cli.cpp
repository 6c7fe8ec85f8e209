// Command-line front end for the Torelli computation library. Talks to the
// core exclusively through the C API in torelli.h; JSON goes to stdout,
// human-readable notes to stderr.
//
// Exit codes: 0 success / verification passed, 1 verification failed,
// 2 invalid input.

#include <torelli.h>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

namespace {

struct ModelDeleter {
    void operator()(trl_model* m) const { trl_model_free(m); }
};
using ModelPtr = std::unique_ptr<trl_model, ModelDeleter>;

struct Options {
    int genus = 3;
    int boundaries = 2;
    std::string chain;
    std::string relation;
    std::string what;
    int k = 3;
    int m = 2;
    int twist = 1;
    int sign = 1;
    int json_indent = -1;
    long long max_dim = 2024;
};

int finish(int status, char* payload, const Options& opt, std::chrono::steady_clock::time_point t0) {
    if (payload) {
        if (opt.json_indent >= 0) {
            auto parsed = nlohmann::json::parse(payload);
            std::cout << parsed.dump(opt.json_indent) << "\n";
        } else {
            std::cout << payload << "\n";
        }
        trl_string_free(payload);
    } else if (status == TRL_INVALID || status == TRL_INTERNAL) {
        std::cerr << "error: " << trl_last_error() << "\n";
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    std::cerr << "elapsed_ms=" << ms << " status=" << status << "\n";
    return status == TRL_INTERNAL ? 2 : status;
}

// wedge-cube dimension guard so accidental large genus runs are refused
bool dim_guard(const Options& opt) {
    long long r = opt.boundaries == 2 ? 2LL * opt.genus + 2 : 2LL * opt.genus;
    long long dim = r * (r - 1) * (r - 2) / 6;
    if (dim > opt.max_dim) {
        std::cerr << "error: wedge-cube dimension " << dim << " exceeds --max-dim " << opt.max_dim
                  << "\n";
        return false;
    }
    return true;
}

ModelPtr make_model(const Options& opt, int& status) {
    trl_model* raw = nullptr;
    status = trl_model_new(opt.genus, opt.boundaries, &raw);
    if (status != TRL_OK) std::cerr << "error: " << trl_last_error() << "\n";
    return ModelPtr(raw);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Torelli group calculus: curve tables, chain maps, the Johnson and "
                 "Birman-Craggs-Johnson homomorphisms, and span/graph verification"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub, bool with_boundaries = true) {
        sub->add_option("--genus", opt.genus, "surface genus");
        if (with_boundaries)
            sub->add_option("--boundaries", opt.boundaries, "boundary components (1 or 2)")
                ->check(CLI::IsMember({1, 2}));
        sub->add_option("--json-indent", opt.json_indent, "pretty-print indent (default compact)");
        sub->add_option("--max-dim", opt.max_dim, "wedge-cube dimension guard");
    };

    auto* table = app.add_subcommand("table", "emit the solved curve table");
    add_common(table);
    auto* enumerate = app.add_subcommand("enumerate", "emit the Torelli generator family");
    add_common(enumerate);
    auto* rewrite = app.add_subcommand("rewrite", "conjugate a subchain by a twist");
    add_common(rewrite);
    rewrite->add_option("--chain", opt.chain, "subchain notation, e.g. 1346 or b,5,6,7")->required();
    rewrite->add_option("--twist", opt.twist, "index j of the twisting curve c_j")->required();
    rewrite->add_option("--sign", opt.sign, "twist sign (+1 or -1)")->check(CLI::IsMember({1, -1}));
    auto* tau = app.add_subcommand("tau", "Johnson homomorphism of a chain map");
    add_common(tau);
    tau->add_option("--chain", opt.chain)->required();
    auto* sigma = app.add_subcommand("sigma", "Birman-Craggs-Johnson homomorphism of a chain map");
    add_common(sigma);
    sigma->add_option("--chain", opt.chain)->required();
    auto* verify = app.add_subcommand("verify", "verify a relation under tau and sigma");
    add_common(verify);
    verify->add_option("--relation", opt.relation, "J1, J2, J3 or lantern")->required();
    verify->add_option("--k", opt.k, "relation parameter k");
    auto* rank = app.add_subcommand("rank", "abelianization rank report");
    add_common(rank);
    auto* span = app.add_subcommand("span", "span computations: tau, sigma or dmin");
    add_common(span);
    span->add_option("--what", opt.what, "tau | sigma | dmin")->required();
    auto* graph = app.add_subcommand("graph", "disjointness graph connectivity");
    add_common(graph, false);
    graph->add_option("--m", opt.m, "subset size")->required();
    auto* cover = app.add_subcommand("cover", "generator support cover check");
    add_common(cover);
    cover->add_option("--m", opt.m, "subsurface size");
    auto* all = app.add_subcommand("all-checks", "run the full verification battery");
    add_common(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    auto t0 = std::chrono::steady_clock::now();
    if (!dim_guard(opt)) return 2;

    char* out = nullptr;
    int status = TRL_INTERNAL;

    if (all->parsed()) {
        status = trl_all_checks_json(&out);
        return finish(status, out, opt, t0);
    }
    if (graph->parsed()) {
        status = trl_graph_json(opt.genus, opt.m, &out);
        return finish(status, out, opt, t0);
    }

    ModelPtr model = make_model(opt, status);
    if (!model) return finish(status, nullptr, opt, t0);

    if (table->parsed())
        status = trl_table_json(model.get(), &out);
    else if (enumerate->parsed())
        status = trl_enumerate_json(model.get(), &out);
    else if (rewrite->parsed())
        status = trl_rewrite_json(model.get(), opt.chain.c_str(), opt.twist, opt.sign, &out);
    else if (tau->parsed())
        status = trl_tau_json(model.get(), opt.chain.c_str(), &out);
    else if (sigma->parsed())
        status = trl_sigma_json(model.get(), opt.chain.c_str(), &out);
    else if (verify->parsed())
        status = trl_verify_json(model.get(), opt.relation.c_str(), opt.k, &out);
    else if (rank->parsed())
        status = trl_rank_json(model.get(), &out);
    else if (span->parsed())
        status = trl_span_json(model.get(), opt.what.c_str(), &out);
    else if (cover->parsed())
        status = trl_cover_json(model.get(), opt.m, &out);

    return finish(status, out, opt, t0);
}
