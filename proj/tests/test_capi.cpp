// Exercises the shared-library surface: handles, status codes, JSON shape.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <torelli.h>

#include <json.hpp>

#include <cstring>
#include <string>

namespace {

std::string take(char* s) {
    REQUIRE(s != nullptr);
    std::string out = s;
    trl_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("model lifecycle and errors") {
    trl_model* m = nullptr;
    CHECK(trl_model_new(3, 2, &m) == TRL_OK);
    REQUIRE(m != nullptr);
    trl_model_free(m);

    trl_model* bad = nullptr;
    CHECK(trl_model_new(0, 2, &bad) == TRL_INVALID);
    CHECK(bad == nullptr);
    CHECK(std::strlen(trl_last_error()) > 0);
    CHECK(trl_model_new(3, 7, &bad) == TRL_INVALID);
}

TEST_CASE("table json") {
    trl_model* m = nullptr;
    REQUIRE(trl_model_new(3, 2, &m) == TRL_OK);
    char* out = nullptr;
    REQUIRE(trl_table_json(m, &out) == TRL_OK);
    auto doc = nlohmann::json::parse(take(out));
    CHECK(doc["rank"] == 8);
    CHECK(doc["curves"].contains("c8"));
    CHECK(doc["curves"]["c1"].size() == 8);
    CHECK(doc["basis"][0] == "x1");
    trl_model_free(m);
}

TEST_CASE("tau, sigma and rewrite") {
    trl_model* m = nullptr;
    REQUIRE(trl_model_new(3, 2, &m) == TRL_OK);
    char* out = nullptr;

    REQUIRE(trl_tau_json(m, "1234", &out) == TRL_OK);
    auto tau = nlohmann::json::parse(take(out));
    REQUIRE(tau["triples"].size() == 1);
    CHECK(tau["triples"][0] == nlohmann::json::array({"x1", "y1", "y2", 1}));

    REQUIRE(trl_sigma_json(m, "1234", &out) == TRL_OK);
    auto sig = nlohmann::json::parse(take(out));
    CHECK(sig["monomials"].size() == 2);

    CHECK(trl_tau_json(m, "1", &out) == TRL_INVALID);
    CHECK(out == nullptr);
    CHECK(trl_tau_json(m, "135", &out) == TRL_INVALID);  // even curve count

    REQUIRE(trl_rewrite_json(m, "1356", 3, -1, &out) == TRL_OK);
    auto rw = nlohmann::json::parse(take(out));
    CHECK(rw["tokens"].size() == 1);
    CHECK(rw["tokens"][0]["chain"] == "1456");
    trl_model_free(m);
}

TEST_CASE("verify, graph and cover") {
    trl_model* m = nullptr;
    REQUIRE(trl_model_new(3, 2, &m) == TRL_OK);
    char* out = nullptr;

    REQUIRE(trl_verify_json(m, "J1", 3, &out) == TRL_OK);
    auto v = nlohmann::json::parse(take(out));
    CHECK(v["verdict"] == "pass");
    CHECK(v["tau_zero"] == true);
    CHECK(trl_verify_json(m, "J9", 3, &out) == TRL_INVALID);

    REQUIRE(trl_graph_json(7, 3, &out) == TRL_OK);
    auto g = nlohmann::json::parse(take(out));
    CHECK(g["connected"] == true);
    CHECK(g["vertices"] == 56);
    CHECK(trl_graph_json(3, 99, &out) == TRL_INVALID);

    REQUIRE(trl_twist_matrix_json(m, "c3", -1, &out) == TRL_OK);
    auto tm = nlohmann::json::parse(take(out));
    CHECK(tm["matrix"].size() == 8);
    CHECK(tm["matrix"][0].size() == 8);
    CHECK(trl_twist_matrix_json(m, "zz", 1, &out) == TRL_INVALID);

    REQUIRE(trl_cover_json(m, 2, &out) == TRL_OK);
    auto c = nlohmann::json::parse(take(out));
    CHECK(c["covered"] == true);
    trl_model_free(m);
}

TEST_CASE("rank report at genus 3") {
    trl_model* m = nullptr;
    REQUIRE(trl_model_new(3, 2, &m) == TRL_OK);
    char* out = nullptr;
    REQUIRE(trl_rank_json(m, &out) == TRL_OK);
    auto doc = nlohmann::json::parse(take(out));
    CHECK(doc["expected"] == 64);
    CHECK(doc["computed"] == 64);
    CHECK(doc["tau_computed"] == 35);
    CHECK(doc["verdict"] == "pass");
    trl_model_free(m);
}

TEST_CASE("deterministic output") {
    trl_model* m = nullptr;
    REQUIRE(trl_model_new(3, 2, &m) == TRL_OK);
    char* a = nullptr;
    char* b = nullptr;
    REQUIRE(trl_enumerate_json(m, &a) == TRL_OK);
    REQUIRE(trl_enumerate_json(m, &b) == TRL_OK);
    CHECK(take(a) == take(b));
    trl_model_free(m);
}
