#include "pipeline.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include <json.hpp>

#include "config.hpp"
#include "dataset.hpp"
#include "error.hpp"
#include "evaluate.hpp"
#include "hausdorff.hpp"
#include "io.hpp"
#include "neighborhood.hpp"
#include "pooling.hpp"
#include "rng.hpp"

namespace scx {

using nlohmann::json;

namespace {

json parse_args(const std::string& args_json, std::initializer_list<const char*> allowed) {
    json j;
    try {
        j = args_json.empty() ? json::object() : json::parse(args_json);
    } catch (const json::exception& e) {
        throw parse_error(std::string("command arguments are not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw invalid_argument("command arguments must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        bool ok = key == "config";
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw invalid_argument("unknown argument \"" + key + "\"");
    }
    return j;
}

RunConfig resolve_config(const json& args) {
    RunConfig cfg;
    if (args.contains("config")) {
        if (!args.at("config").is_object()) {
            throw config_error("argument \"config\" must be an object");
        }
        cfg = parse_run_config(args.at("config").dump());
    }
    cfg.resolve();
    return cfg;
}

/// Every result carries the resolved config, its hash, and the master seed.
json result_base(const std::string& command, const RunConfig& cfg) {
    json r;
    r["command"] = command;
    r["config"] = json::parse(dump_run_config(cfg));
    r["config_hash"] = config_hash(cfg);
    r["seed"] = cfg.seed;
    return r;
}

std::string require_string(const json& args, const char* key) {
    if (!args.contains(key)) throw invalid_argument(std::string("missing argument \"") + key + "\"");
    if (!args.at(key).is_string()) {
        throw invalid_argument(std::string("argument \"") + key + "\" must be a string");
    }
    return args.at(key).get<std::string>();
}

std::vector<std::string> require_string_list(const json& args, const char* key) {
    if (!args.contains(key)) throw invalid_argument(std::string("missing argument \"") + key + "\"");
    if (!args.at(key).is_array() || args.at(key).empty()) {
        throw invalid_argument(std::string("argument \"") + key +
                               "\" must be a non-empty array of paths");
    }
    std::vector<std::string> out;
    for (const json& v : args.at(key)) {
        if (!v.is_string()) {
            throw invalid_argument(std::string("argument \"") + key + "\" must contain strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

void require_exists(const std::string& path) {
    if (!std::filesystem::exists(path)) throw io_error("missing file " + path);
}

struct LoadedComplex {
    ComplexFile file;
    SimplicialComplex complex;
};

std::vector<LoadedComplex> load_complexes(const std::vector<std::string>& paths) {
    std::vector<LoadedComplex> out;
    std::set<std::string> seen;
    for (const auto& p : paths) {
        require_exists(p);
        ComplexFile f = load_complex_file(p);
        if (f.name.empty()) f.name = std::filesystem::path(p).stem().string();
        if (!seen.insert(f.name).second) {
            throw invalid_argument("duplicate complex name \"" + f.name + "\"");
        }
        SimplicialComplex X = f.build();
        out.push_back({std::move(f), std::move(X)});
    }
    return out;
}

std::string check_artifact_config(const std::string& artifact_config, const RunConfig& cfg,
                                  const std::string& path) {
    std::string expect = config_hash(cfg);
    if (!artifact_config.empty() && artifact_config != expect) {
        throw config_error(path + " was produced under config " + artifact_config +
                           "; the current config hashes to " + expect);
    }
    return expect;
}

/// Per-complex training seed, fanned out from the autoencoder stage seed.
std::uint64_t complex_seed(const RunConfig& cfg, std::size_t index) {
    return RngState::substream(cfg.ae.seed, index).next_u64();
}

std::vector<Vec> pooled_rows(const Mat& h) {
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(h.rows()));
    for (Eigen::Index i = 0; i < h.rows(); ++i) out.push_back(h.row(i).transpose());
    return out;
}

} // namespace

std::string cmd_gen(const std::string& args_json) {
    json args = parse_args(args_json,
                           {"family", "count", "size_lo", "size_hi", "noise", "out_dir"});
    RunConfig cfg = resolve_config(args);
    DatasetFamily family = family_from_name(require_string(args, "family"));
    int count = args.value("count", 10);
    int size_lo = args.value("size_lo", 6);
    int size_hi = args.value("size_hi", 12);
    double noise = args.value("noise", 0.1);
    std::string out_dir = require_string(args, "out_dir");
    std::filesystem::create_directories(out_dir);

    auto items = generate_synthetic_dataset(family, count, size_lo, size_hi, noise, cfg.seed);
    json written = json::array();
    for (const auto& item : items) {
        ComplexFile f;
        f.name = item.name;
        f.label = item.label;
        f.maximal = item.maximal;
        f.coords = item.coords;
        std::string path = (std::filesystem::path(out_dir) / (item.name + ".json")).string();
        write_complex_file(f, path);
        written.push_back(path);
    }
    json r = result_base("gen", cfg);
    r["family"] = family_name(family);
    r["written"] = written;
    return r.dump();
}

std::string cmd_build(const std::string& args_json) {
    json args = parse_args(args_json, {"complex", "out_dir"});
    RunConfig cfg = resolve_config(args);
    std::string path = require_string(args, "complex");
    require_exists(path);
    ComplexFile f = load_complex_file(path);
    SimplicialComplex X = f.build();

    json counts = json::array();
    for (int k = 0; k <= X.dim(); ++k) counts.push_back(X.count(k));

    json r = result_base("build", cfg);
    r["name"] = f.name;
    r["dimension"] = X.dim();
    r["counts"] = counts;
    r["n_total"] = X.size();
    r["n_below_top"] = X.size_below_top();

    if (args.contains("out_dir")) {
        std::string out_dir = require_string(args, "out_dir");
        std::filesystem::create_directories(out_dir);
        std::string hash = config_hash(cfg);
        json files = json::array();
        auto emit = [&](const std::string& kind, const Mat& m) {
            std::string p = (std::filesystem::path(out_dir) / (f.name + "." + kind + ".txt")).string();
            write_matrix_artifact(p, kind, m, hash);
            files.push_back(p);
        };
        if (X.dim() >= 1) {
            emit("A_adj", adjacency_matrix(X).to_dense());
            emit("A_co", coadjacency_matrix(X).to_dense());
            for (int m = 0; m < X.dim(); ++m) {
                emit("B_" + std::to_string(m), coboundary_incidence(X, m).to_dense());
            }
        }
        r["matrices_written"] = files;
    }
    return r.dump();
}

std::string cmd_train_ae(const std::string& args_json) {
    json args = parse_args(args_json, {"complexes", "out_dir"});
    RunConfig cfg = resolve_config(args);
    auto complexes = load_complexes(require_string_list(args, "complexes"));
    std::string out_dir = require_string(args, "out_dir");
    std::filesystem::create_directories(out_dir);
    std::string hash = config_hash(cfg);

    json per = json::array();
    json paths = json::array();
    for (std::size_t i = 0; i < complexes.size(); ++i) {
        AutoencoderConfig acfg = cfg.ae;
        acfg.seed = complex_seed(cfg, i);
        auto trained = train_autoencoder(complexes[i].complex, acfg);

        EmbeddingArtifact art;
        art.config = hash;
        art.complex_name = complexes[i].file.name;
        art.dims = trained.embedded;
        art.offsets = trained.row_offsets;
        art.u = trained.u;
        std::string p =
            (std::filesystem::path(out_dir) / (complexes[i].file.name + ".emb")).string();
        write_embedding_artifact(p, art);
        paths.push_back(p);

        json entry;
        entry["name"] = complexes[i].file.name;
        entry["rows"] = trained.u.rows();
        entry["cols"] = trained.u.cols();
        if (!trained.log.empty()) {
            entry["initial_loss"] = trained.log.front().total;
            entry["final_loss"] = trained.log.back().total;
        }
        if (!trained.warnings.empty()) entry["warnings"] = trained.warnings;
        per.push_back(entry);
    }
    json r = result_base("train-ae", cfg);
    r["embeddings"] = paths;
    r["per_complex"] = per;
    return r.dump();
}

std::string cmd_embed(const std::string& args_json) {
    json args = parse_args(args_json, {"embedding", "out"});
    RunConfig cfg = resolve_config(args);
    std::string path = require_string(args, "embedding");
    require_exists(path);
    EmbeddingArtifact art = read_embedding_artifact(path);
    check_artifact_config(art.config, cfg, path);

    json r = result_base("embed", cfg);
    r["complex"] = art.complex_name;
    r["rows"] = art.u.rows();
    r["cols"] = art.u.cols();
    r["dims"] = art.dims;
    r["offsets"] = art.offsets;
    if (args.contains("out")) {
        std::string out = require_string(args, "out");
        write_embedding_artifact(out, art);
        r["out"] = out;
    }
    return r.dump();
}

std::string cmd_distmat(const std::string& args_json) {
    json args = parse_args(args_json, {"complexes", "out"});
    RunConfig cfg = resolve_config(args);
    auto complexes = load_complexes(require_string_list(args, "complexes"));
    std::string out = require_string(args, "out");

    std::vector<const SimplicialComplex*> ptrs;
    std::vector<std::string> names;
    for (const auto& lc : complexes) {
        ptrs.push_back(&lc.complex);
        names.push_back(lc.file.name);
    }
    Mat d = distance_matrix(ptrs, cfg.sampling);
    write_matrix_artifact(out, "distmat", d, config_hash(cfg), names);

    json r = result_base("distmat", cfg);
    r["size"] = d.rows();
    r["out"] = out;
    return r.dump();
}

namespace {

struct EmbeddingSet {
    std::vector<EmbeddingArtifact> arts;
    std::vector<Mat> tables;
    std::vector<std::string> names;
};

EmbeddingSet load_embeddings(const std::vector<std::string>& paths, const RunConfig& cfg) {
    EmbeddingSet set;
    for (const auto& p : paths) {
        require_exists(p);
        EmbeddingArtifact art = read_embedding_artifact(p);
        check_artifact_config(art.config, cfg, p);
        set.tables.push_back(art.u);
        set.names.push_back(art.complex_name);
        set.arts.push_back(std::move(art));
    }
    return set;
}

std::vector<std::string> labels_for(const EmbeddingSet& set,
                                    const std::vector<LoadedComplex>& complexes) {
    std::map<std::string, std::string> by_name;
    for (const auto& lc : complexes) by_name[lc.file.name] = lc.file.label;
    std::vector<std::string> labels;
    for (const auto& n : set.names) {
        auto it = by_name.find(n);
        if (it == by_name.end()) {
            throw invalid_argument("no complex file provided for embedding of \"" + n + "\"");
        }
        if (it->second.empty()) {
            throw invalid_argument("complex \"" + n + "\" carries no label");
        }
        labels.push_back(it->second);
    }
    return labels;
}

} // namespace

std::string cmd_train_pool(const std::string& args_json) {
    json args =
        parse_args(args_json, {"embeddings", "distmat", "complexes", "out_model", "out_pooled"});
    RunConfig cfg = resolve_config(args);
    auto set = load_embeddings(require_string_list(args, "embeddings"), cfg);
    std::string out_model = require_string(args, "out_model");
    std::string out_pooled = require_string(args, "out_pooled");
    std::string hash = config_hash(cfg);

    const Mat* dist = nullptr;
    Mat d;
    std::vector<std::string> labels;
    const std::vector<std::string>* labels_ptr = nullptr;
    if (cfg.pool.mode == PoolingMode::Stress) {
        std::string dpath = require_string(args, "distmat");
        require_exists(dpath);
        MatrixArtifact dart = read_matrix_artifact(dpath);
        check_artifact_config(dart.config, cfg, dpath);
        if (!dart.items.empty() && dart.items != set.names) {
            throw invalid_argument(dpath + " row order does not match the embedding list");
        }
        d = dart.m;
        dist = &d;
    } else {
        auto complexes = load_complexes(require_string_list(args, "complexes"));
        labels = labels_for(set, complexes);
        labels_ptr = &labels;
    }

    auto out = train_pooling(set.tables, cfg.pool, dist, labels_ptr);

    write_matrix_artifact(out_model, "pooling_w", out.w, hash);
    Mat pooled(static_cast<Eigen::Index>(out.h.size()), out.w.rows());
    for (std::size_t i = 0; i < out.h.size(); ++i) {
        pooled.row(static_cast<Eigen::Index>(i)) = out.h[i].transpose();
    }
    write_matrix_artifact(out_pooled, "pooled", pooled, hash, set.names);

    json r = result_base("train-pool", cfg);
    r["mode"] = pooling_mode_name(cfg.pool.mode);
    r["initial_loss"] = out.log.front();
    r["final_loss"] = out.log.back();
    r["out_model"] = out_model;
    r["out_pooled"] = out_pooled;
    return r.dump();
}

std::string cmd_eval(const std::string& args_json) {
    json args = parse_args(args_json, {"complexes", "embeddings", "distmat", "pooled"});
    RunConfig cfg = resolve_config(args);
    auto complexes = load_complexes(require_string_list(args, "complexes"));
    json r = result_base("eval", cfg);

    std::map<std::string, const SimplicialComplex*> by_name;
    for (const auto& lc : complexes) by_name[lc.file.name] = &lc.complex;

    if (args.contains("embeddings")) {
        auto set = load_embeddings(require_string_list(args, "embeddings"), cfg);
        json aucs = json::array();
        for (std::size_t i = 0; i < set.arts.size(); ++i) {
            auto it = by_name.find(set.names[i]);
            if (it == by_name.end()) {
                throw invalid_argument("no complex file provided for embedding of \"" +
                                       set.names[i] + "\"");
            }
            const SimplicialComplex& X = *it->second;
            const EmbeddingArtifact& art = set.arts[i];
            json per_dim = json::object();
            for (std::size_t di = 0; di < art.dims.size(); ++di) {
                int k = art.dims[di];
                if (k >= X.dim()) continue; // top dimension has no adjacency
                auto rows = static_cast<Eigen::Index>(X.count(k));
                Mat u_k = art.u.middleRows(static_cast<Eigen::Index>(art.offsets[di]), rows);
                per_dim[std::to_string(k)] = reconstruction_auc(X, k, u_k, cfg.ae.decoder);
            }
            json entry;
            entry["name"] = set.names[i];
            entry["auc"] = per_dim;
            aucs.push_back(entry);
        }
        r["reconstruction"] = aucs;
    }

    if (args.contains("pooled")) {
        std::string ppath = require_string(args, "pooled");
        require_exists(ppath);
        MatrixArtifact part = read_matrix_artifact(ppath);
        check_artifact_config(part.config, cfg, ppath);
        auto h = pooled_rows(part.m);

        if (args.contains("distmat")) {
            std::string dpath = require_string(args, "distmat");
            require_exists(dpath);
            MatrixArtifact dart = read_matrix_artifact(dpath);
            check_artifact_config(dart.config, cfg, dpath);
            if (!dart.items.empty() && !part.items.empty() && dart.items != part.items) {
                throw invalid_argument(dpath + " row order does not match " + ppath);
            }
            if (dart.m.rows() != static_cast<Eigen::Index>(h.size())) {
                throw invalid_argument("distance matrix size does not match pooled embeddings");
            }
            r["stress"] = stress_loss(h, dart.m);
        }

        if (!part.items.empty()) {
            std::vector<std::string> labels;
            bool all_labeled = true;
            for (const auto& n : part.items) {
                auto it = std::find_if(complexes.begin(), complexes.end(),
                                       [&](const LoadedComplex& lc) { return lc.file.name == n; });
                if (it == complexes.end() || it->file.label.empty()) {
                    all_labeled = false;
                    break;
                }
                labels.push_back(it->file.label);
            }
            if (all_labeled && labels.size() >= 2) {
                r["knn_accuracy"] = loo_knn_accuracy(h, labels);
                if (!label_triplets(labels).empty()) {
                    r["triplet_satisfaction"] = triplet_satisfaction(h, labels, cfg.pool.margin);
                }
            }
        }
    }

    return r.dump();
}

} // namespace scx
