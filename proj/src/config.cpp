#include "config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"
#include "rng.hpp"

namespace scx {

using nlohmann::json;

namespace {

void reject_unknown(const json& j, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) throw config_error("unknown key \"" + key + "\" in " + where);
    }
}

template <typename T>
T take_int(const json& j, const char* key, T fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number_integer() && !j.at(key).is_number_unsigned()) {
        throw config_error(std::string("key \"") + key + "\" must be an integer");
    }
    return j.at(key).get<T>();
}

double take_double(const json& j, const char* key, double fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_number()) {
        throw config_error(std::string("key \"") + key + "\" must be a number");
    }
    return j.at(key).get<double>();
}

std::string take_string(const json& j, const char* key, const std::string& fallback) {
    if (!j.contains(key)) return fallback;
    if (!j.at(key).is_string()) {
        throw config_error(std::string("key \"") + key + "\" must be a string");
    }
    return j.at(key).get<std::string>();
}

json require_object(const json& j, const char* key) {
    if (!j.at(key).is_object()) {
        throw config_error(std::string("key \"") + key + "\" must be an object");
    }
    return j.at(key);
}

} // namespace

void RunConfig::resolve() {
    // one master seed fans out into non-overlapping stage streams; the
    // autoencoder seed is further split per complex by the pipeline
    ae.seed = RngState::substream(seed, 1).next_u64();
    pool.seed = RngState::substream(seed, 2).next_u64();
    sampling.seed = RngState::substream(seed, 3).next_u64();
    validate_autoencoder_config(ae);
}

RunConfig parse_run_config(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw config_error("config must be a JSON object");
    reject_unknown(j, {"seed", "autoencoder", "pooling", "sampling"}, "config");

    RunConfig cfg;
    cfg.seed = take_int<std::uint64_t>(j, "seed", cfg.seed);

    if (j.contains("autoencoder")) {
        json a = require_object(j, "autoencoder");
        reject_unknown(a,
                       {"encoder", "scheme", "layers", "feature_init", "decoder", "similarity",
                        "loss", "embed_dim", "negative_ratio", "epochs", "batch_size", "optimizer",
                        "learning_rate", "walks_per_simplex", "walk_length", "window"},
                       "autoencoder");
        auto& ae = cfg.ae;
        ae.encoder = encoder_from_name(take_string(a, "encoder", encoder_name(ae.encoder)));
        ae.scheme = scheme_from_name(take_string(a, "scheme", scheme_name(ae.scheme)));
        ae.layers = take_int<int>(a, "layers", ae.layers);
        ae.feature_init =
            feature_init_from_name(take_string(a, "feature_init", feature_init_name(ae.feature_init)));
        ae.decoder = decoder_from_name(take_string(a, "decoder", decoder_name(ae.decoder)));
        ae.similarity =
            similarity_from_name(take_string(a, "similarity", similarity_name(ae.similarity)));
        ae.loss = loss_from_name(take_string(a, "loss", loss_name(ae.loss)));
        ae.embed_dim = take_int<Eigen::Index>(a, "embed_dim", ae.embed_dim);
        ae.negative_ratio = take_int<int>(a, "negative_ratio", ae.negative_ratio);
        ae.epochs = take_int<int>(a, "epochs", ae.epochs);
        ae.batch_size = take_int<int>(a, "batch_size", ae.batch_size);
        ae.optimizer.kind =
            optimizer_from_name(take_string(a, "optimizer", optimizer_name(ae.optimizer.kind)));
        ae.optimizer.learning_rate = take_double(a, "learning_rate", ae.optimizer.learning_rate);
        ae.walk.walks_per_simplex = take_int<int>(a, "walks_per_simplex", ae.walk.walks_per_simplex);
        ae.walk.walk_length = take_int<int>(a, "walk_length", ae.walk.walk_length);
        ae.walk.window = take_int<int>(a, "window", ae.walk.window);
    }

    if (j.contains("pooling")) {
        json p = require_object(j, "pooling");
        reject_unknown(p, {"mode", "margin", "epochs", "optimizer", "learning_rate"}, "pooling");
        auto& pool = cfg.pool;
        pool.mode = pooling_mode_from_name(take_string(p, "mode", pooling_mode_name(pool.mode)));
        pool.margin = take_double(p, "margin", pool.margin);
        pool.epochs = take_int<int>(p, "epochs", pool.epochs);
        pool.optimizer.kind =
            optimizer_from_name(take_string(p, "optimizer", optimizer_name(pool.optimizer.kind)));
        pool.optimizer.learning_rate = take_double(p, "learning_rate", pool.optimizer.learning_rate);
    }

    if (j.contains("sampling")) {
        json s = require_object(j, "sampling");
        reject_unknown(s, {"points_per_top_simplex"}, "sampling");
        cfg.sampling.points_per_top_simplex =
            take_int<int>(s, "points_per_top_simplex", cfg.sampling.points_per_top_simplex);
        if (cfg.sampling.points_per_top_simplex < 0) {
            throw config_error("points_per_top_simplex must be >= 0");
        }
    }

    return cfg;
}

RunConfig load_run_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw io_error("cannot open config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_run_config(buf.str());
    } catch (const Error& e) {
        throw Error(e.code(), path + ": " + e.what());
    }
}

std::string dump_run_config(const RunConfig& cfg) {
    json a{
        {"encoder", encoder_name(cfg.ae.encoder)},
        {"scheme", scheme_name(cfg.ae.scheme)},
        {"layers", cfg.ae.layers},
        {"feature_init", feature_init_name(cfg.ae.feature_init)},
        {"decoder", decoder_name(cfg.ae.decoder)},
        {"similarity", similarity_name(cfg.ae.similarity)},
        {"loss", loss_name(cfg.ae.loss)},
        {"embed_dim", cfg.ae.embed_dim},
        {"negative_ratio", cfg.ae.negative_ratio},
        {"epochs", cfg.ae.epochs},
        {"batch_size", cfg.ae.batch_size},
        {"optimizer", optimizer_name(cfg.ae.optimizer.kind)},
        {"learning_rate", cfg.ae.optimizer.learning_rate},
        {"walks_per_simplex", cfg.ae.walk.walks_per_simplex},
        {"walk_length", cfg.ae.walk.walk_length},
        {"window", cfg.ae.walk.window},
    };
    json p{
        {"mode", pooling_mode_name(cfg.pool.mode)},
        {"margin", cfg.pool.margin},
        {"epochs", cfg.pool.epochs},
        {"optimizer", optimizer_name(cfg.pool.optimizer.kind)},
        {"learning_rate", cfg.pool.optimizer.learning_rate},
    };
    json s{{"points_per_top_simplex", cfg.sampling.points_per_top_simplex}};
    json j{{"seed", cfg.seed}, {"autoencoder", a}, {"pooling", p}, {"sampling", s}};
    return j.dump(); // nlohmann objects keep keys sorted: canonical text
}

std::string config_hash(const RunConfig& cfg) {
    std::string text = dump_run_config(cfg);
    std::uint64_t h = 1469598103934665603ULL; // FNV-1a 64 offset basis
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

} // namespace scx
