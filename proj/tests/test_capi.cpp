#include <doctest.h>

#include <cstring>
#include <filesystem>

#include <unistd.h>
#include <string>

#include <json.hpp>
#include <scx/scx.h>

using nlohmann::json;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("scx_capi_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

/// Takes ownership of a returned string and parses it.
json take_json(char* s) {
    REQUIRE(s != nullptr);
    json j = json::parse(s);
    scx_string_free(s);
    return j;
}

constexpr const char* kTriangle =
    R"({"name": "tri", "maximal_simplices": [[0, 1, 2], [2, 3]]})";

} // namespace

TEST_CASE("version and error buffer basics") {
    REQUIRE(scx_version() != nullptr);
    CHECK(std::string(scx_version()) == "1.0.0");
    REQUIRE(scx_last_error() != nullptr);
    scx_string_free(nullptr); // must be a no-op
}

TEST_CASE("complex handles expose counts and summaries") {
    scx_complex* c = nullptr;
    REQUIRE(scx_complex_from_json(kTriangle, &c) == SCX_OK);
    REQUIRE(c != nullptr);

    int dim = -1;
    CHECK(scx_complex_dimension(c, &dim) == SCX_OK);
    CHECK(dim == 2);

    size_t n = 0;
    CHECK(scx_complex_count(c, 0, &n) == SCX_OK);
    CHECK(n == 4);
    CHECK(scx_complex_count(c, 1, &n) == SCX_OK);
    CHECK(n == 4);
    CHECK(scx_complex_count(c, 2, &n) == SCX_OK);
    CHECK(n == 1);
    CHECK(scx_complex_size(c, &n) == SCX_OK);
    CHECK(n == 9);
    CHECK(scx_complex_size_below_top(c, &n) == SCX_OK);
    CHECK(n == 8);

    char* out = nullptr;
    REQUIRE(scx_complex_summary_json(c, &out) == SCX_OK);
    json j = take_json(out);
    CHECK(j.at("name") == "tri");
    CHECK(j.at("dimension") == 2);
    CHECK(j.at("counts") == json::array({4, 4, 1}));
    CHECK(j.at("n_total") == 9);
    CHECK(j.at("n_below_top") == 8);

    scx_complex_free(c);
}

TEST_CASE("statuses map the failure kinds") {
    scx_complex* c = nullptr;
    CHECK(scx_complex_from_json("{broken", &c) == SCX_ERROR_PARSE);
    CHECK(std::string(scx_last_error()).find("not valid JSON") != std::string::npos);

    CHECK(scx_complex_from_json(nullptr, &c) == SCX_ERROR_INVALID_ARGUMENT);
    CHECK(scx_complex_from_json(kTriangle, nullptr) == SCX_ERROR_INVALID_ARGUMENT);

    CHECK(scx_complex_load("/nonexistent/x.json", &c) == SCX_ERROR_IO);
    CHECK(std::string(scx_last_error()).find("x.json") != std::string::npos);

    int dim = 0;
    CHECK(scx_complex_dimension(nullptr, &dim) == SCX_ERROR_INVALID_ARGUMENT);

    char* result = nullptr;
    CHECK(scx_cmd_gen(R"({"bogus": 1})", &result) == SCX_ERROR_INVALID_ARGUMENT);
    CHECK(std::string(scx_last_error()).find("bogus") != std::string::npos);

    CHECK(scx_cmd_train_ae(R"({"config": {"autoencoder": {"loss": "volume"}}})", &result) ==
          SCX_ERROR_CONFIG);

    CHECK(scx_cmd_build("{}", nullptr) == SCX_ERROR_INVALID_ARGUMENT);
}

TEST_CASE("pipeline commands run end to end through the interface") {
    TempDir tmp;
    std::string data = tmp.file("data");
    std::string emb = tmp.file("emb");

    json gen_args = {
        {"family", "polygon_disk"}, {"count", 2},   {"size_lo", 4},
        {"size_hi", 4},             {"noise", 0.1}, {"out_dir", data},
        {"config", {{"seed", 3}}},
    };
    char* out = nullptr;
    REQUIRE(scx_cmd_gen(gen_args.dump().c_str(), &out) == SCX_OK);
    json gen = take_json(out);
    CHECK(gen.at("command") == "gen");
    CHECK(gen.at("seed") == 3);
    CHECK(gen.at("config_hash").get<std::string>().size() == 16);
    REQUIRE(gen.at("written").size() == 2);

    std::string first = gen.at("written")[0].get<std::string>();
    scx_complex* c = nullptr;
    REQUIRE(scx_complex_load(first.c_str(), &c) == SCX_OK);
    int dim = 0;
    CHECK(scx_complex_dimension(c, &dim) == SCX_OK);
    CHECK(dim == 2);
    scx_complex_free(c);

    json build_args = {{"complex", first}};
    REQUIRE(scx_cmd_build(build_args.dump().c_str(), &out) == SCX_OK);
    json build = take_json(out);
    CHECK(build.at("dimension") == 2);
    CHECK(build.at("counts").size() == 3);

    json config = {
        {"seed", 3},
        {"autoencoder", {{"embed_dim", 2}, {"epochs", 5}, {"negative_ratio", 1}}},
    };
    json train_args = {
        {"complexes", json::array({gen.at("written")[0], gen.at("written")[1]})},
        {"out_dir", emb},
        {"config", config},
    };
    REQUIRE(scx_cmd_train_ae(train_args.dump().c_str(), &out) == SCX_OK);
    json trained = take_json(out);
    REQUIRE(trained.at("embeddings").size() == 2);
    CHECK(trained.at("per_complex")[0].at("rows").get<int>() > 0);
    std::string emb_path = trained.at("embeddings")[0].get<std::string>();
    CHECK(std::filesystem::exists(emb_path));

    // the embed command re-reads what train-ae wrote
    json embed_args = {
        {"embedding", emb_path}, {"out", tmp.file("u.txt")}, {"config", config}};
    REQUIRE(scx_cmd_embed(embed_args.dump().c_str(), &out) == SCX_OK);
    json embedded = take_json(out);
    CHECK(embedded.at("rows").get<int>() > 0);
    CHECK(embedded.at("cols") == 2);
}
