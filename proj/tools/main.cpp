// Command-line front end. Talks to the library exclusively through the
// public C interface; flags assemble the JSON argument objects the
// commands expect.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <scx/scx.h>

using nlohmann::json;

namespace {

/// Run-config flags shared by every subcommand. Each flag overrides the
/// matching field of the (optional) --config file.
struct ConfigFlags {
    std::string config_path;
    std::uint64_t seed = 0;

    std::string encoder, scheme, feature_init, decoder, similarity, loss;
    int layers = 0, ae_epochs = 0, negative_ratio = 0, batch_size = 0;
    long embed_dim = 0;
    std::string ae_optimizer;
    double ae_learning_rate = 0.0;
    int walks_per_simplex = 0, walk_length = 0, window = 0;

    std::string pool_mode, pool_optimizer;
    double margin = 0.0, pool_learning_rate = 0.0;
    int pool_epochs = 0;

    int points_per_top_simplex = 0;

    void register_on(CLI::App* cmd) {
        cmd->add_option("--config", config_path, "JSON run-config file");
        cmd->add_option("--seed", seed, "master seed");

        cmd->add_option("--encoder", encoder, "shallow_table | cxn");
        cmd->add_option("--scheme", scheme, "amps | cmps | hcmps");
        cmd->add_option("--layers", layers, "message-passing layers");
        cmd->add_option("--feature-init", feature_init, "structural | ones");
        cmd->add_option("--decoder", decoder, "laplacian | inner_product | softmax_rw");
        cmd->add_option("--similarity", similarity, "adjacency | random_walk");
        cmd->add_option("--loss", loss, "lap_product | squared_error | neg_log_likelihood");
        cmd->add_option("--embed-dim", embed_dim, "embedding width d");
        cmd->add_option("--negative-ratio", negative_ratio, "negatives per positive pair");
        cmd->add_option("--ae-epochs", ae_epochs, "autoencoder epochs");
        cmd->add_option("--batch-size", batch_size, "pairs per step (0 = all)");
        cmd->add_option("--ae-optimizer", ae_optimizer, "sgd | adam");
        cmd->add_option("--ae-learning-rate", ae_learning_rate, "autoencoder learning rate");
        cmd->add_option("--walks-per-simplex", walks_per_simplex, "random walks per simplex");
        cmd->add_option("--walk-length", walk_length, "random walk length");
        cmd->add_option("--window", window, "co-occurrence window");

        cmd->add_option("--pool-mode", pool_mode, "stress | triplet");
        cmd->add_option("--margin", margin, "triplet margin");
        cmd->add_option("--pool-epochs", pool_epochs, "pooling epochs");
        cmd->add_option("--pool-optimizer", pool_optimizer, "sgd | adam");
        cmd->add_option("--pool-learning-rate", pool_learning_rate, "pooling learning rate");

        cmd->add_option("--points-per-top-simplex", points_per_top_simplex,
                        "extra Hausdorff samples per maximal simplex");
    }

    json assemble(CLI::App* cmd) const {
        json cfg = json::object();
        if (cmd->count("--config") > 0) {
            std::ifstream in(config_path, std::ios::binary);
            if (!in) {
                throw CLI::ValidationError("--config", "cannot open " + config_path);
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            try {
                cfg = json::parse(buf.str());
            } catch (const json::exception& e) {
                throw CLI::ValidationError("--config", std::string("invalid JSON: ") + e.what());
            }
        }
        auto set = [&](const char* flag, const char* section, const char* key, json value) {
            if (cmd->count(flag) > 0) {
                if (section) {
                    cfg[section][key] = std::move(value);
                } else {
                    cfg[key] = std::move(value);
                }
            }
        };
        set("--seed", nullptr, "seed", seed);
        set("--encoder", "autoencoder", "encoder", encoder);
        set("--scheme", "autoencoder", "scheme", scheme);
        set("--layers", "autoencoder", "layers", layers);
        set("--feature-init", "autoencoder", "feature_init", feature_init);
        set("--decoder", "autoencoder", "decoder", decoder);
        set("--similarity", "autoencoder", "similarity", similarity);
        set("--loss", "autoencoder", "loss", loss);
        set("--embed-dim", "autoencoder", "embed_dim", embed_dim);
        set("--negative-ratio", "autoencoder", "negative_ratio", negative_ratio);
        set("--ae-epochs", "autoencoder", "epochs", ae_epochs);
        set("--batch-size", "autoencoder", "batch_size", batch_size);
        set("--ae-optimizer", "autoencoder", "optimizer", ae_optimizer);
        set("--ae-learning-rate", "autoencoder", "learning_rate", ae_learning_rate);
        set("--walks-per-simplex", "autoencoder", "walks_per_simplex", walks_per_simplex);
        set("--walk-length", "autoencoder", "walk_length", walk_length);
        set("--window", "autoencoder", "window", window);
        set("--pool-mode", "pooling", "mode", pool_mode);
        set("--margin", "pooling", "margin", margin);
        set("--pool-epochs", "pooling", "epochs", pool_epochs);
        set("--pool-optimizer", "pooling", "optimizer", pool_optimizer);
        set("--pool-learning-rate", "pooling", "learning_rate", pool_learning_rate);
        set("--points-per-top-simplex", "sampling", "points_per_top_simplex",
            points_per_top_simplex);
        return cfg;
    }
};

int run(scx_status (*fn)(const char*, char**), const json& args) {
    char* result = nullptr;
    scx_status status = fn(args.dump().c_str(), &result);
    if (status != SCX_OK) {
        json err;
        err["status"] = static_cast<int>(status);
        err["error"] = scx_last_error();
        std::cerr << err.dump() << "\n";
        return static_cast<int>(status);
    }
    std::cout << result << "\n";
    scx_string_free(result);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"simplicial-complex representation pipeline"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(scx_version()));

    struct Sub {
        CLI::App* cmd = nullptr;
        ConfigFlags flags;
    };

    // gen
    Sub gen;
    std::string gen_family, gen_out_dir;
    int gen_count = 10, gen_size_lo = 6, gen_size_hi = 12;
    double gen_noise = 0.1;
    gen.cmd = app.add_subcommand("gen", "generate a synthetic dataset");
    gen.cmd->add_option("--family", gen_family, "polygon_disk | annulus")->required();
    gen.cmd->add_option("--count", gen_count, "number of complexes");
    gen.cmd->add_option("--size-lo", gen_size_lo, "minimum boundary vertices");
    gen.cmd->add_option("--size-hi", gen_size_hi, "maximum boundary vertices");
    gen.cmd->add_option("--noise", gen_noise, "geometric jitter in [0, inf)");
    gen.cmd->add_option("--out-dir", gen_out_dir, "output directory")->required();
    gen.flags.register_on(gen.cmd);

    // build
    Sub build;
    std::string build_complex, build_out_dir;
    build.cmd = app.add_subcommand("build", "inspect a complex and write its matrices");
    build.cmd->add_option("--complex", build_complex, "complex JSON file")->required();
    build.cmd->add_option("--out-dir", build_out_dir, "directory for matrix files");
    build.flags.register_on(build.cmd);

    // train-ae
    Sub trainae;
    std::vector<std::string> trainae_complexes;
    std::string trainae_out_dir;
    trainae.cmd = app.add_subcommand("train-ae", "train one autoencoder per complex");
    trainae.cmd->add_option("--complex", trainae_complexes, "complex JSON file (repeatable)")
        ->required();
    trainae.cmd->add_option("--out-dir", trainae_out_dir, "directory for .emb artifacts")
        ->required();
    trainae.flags.register_on(trainae.cmd);

    // embed
    Sub embed;
    std::string embed_path, embed_out;
    embed.cmd = app.add_subcommand("embed", "inspect or re-export a stored embedding");
    embed.cmd->add_option("--embedding", embed_path, "stored .emb artifact")->required();
    embed.cmd->add_option("--out", embed_out, "re-export path");
    embed.flags.register_on(embed.cmd);

    // distmat
    Sub distmat;
    std::vector<std::string> distmat_complexes;
    std::string distmat_out;
    distmat.cmd = app.add_subcommand("distmat", "Hausdorff distance matrix of a dataset");
    distmat.cmd->add_option("--complex", distmat_complexes, "complex JSON file (repeatable)")
        ->required();
    distmat.cmd->add_option("--out", distmat_out, "output matrix file")->required();
    distmat.flags.register_on(distmat.cmd);

    // train-pool
    Sub trainpool;
    std::vector<std::string> trainpool_embeddings, trainpool_complexes;
    std::string trainpool_distmat, trainpool_model, trainpool_pooled;
    trainpool.cmd = app.add_subcommand("train-pool", "train the attention pooling");
    trainpool.cmd->add_option("--embedding", trainpool_embeddings, ".emb artifact (repeatable)")
        ->required();
    trainpool.cmd->add_option("--distmat", trainpool_distmat, "target distances (stress mode)");
    trainpool.cmd->add_option("--complex", trainpool_complexes,
                              "labeled complex files (triplet mode)");
    trainpool.cmd->add_option("--out-model", trainpool_model, "output W file")->required();
    trainpool.cmd->add_option("--out-pooled", trainpool_pooled, "output pooled-vector file")
        ->required();
    trainpool.flags.register_on(trainpool.cmd);

    // eval
    Sub eval;
    std::vector<std::string> eval_complexes, eval_embeddings;
    std::string eval_distmat, eval_pooled;
    eval.cmd = app.add_subcommand("eval", "evaluate stored artifacts");
    eval.cmd->add_option("--complex", eval_complexes, "complex JSON file (repeatable)")->required();
    eval.cmd->add_option("--embedding", eval_embeddings, ".emb artifact (repeatable)");
    eval.cmd->add_option("--distmat", eval_distmat, "distance matrix file");
    eval.cmd->add_option("--pooled", eval_pooled, "pooled-vector file");
    eval.flags.register_on(eval.cmd);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen.cmd->parsed()) {
            json args;
            args["config"] = gen.flags.assemble(gen.cmd);
            args["family"] = gen_family;
            args["count"] = gen_count;
            args["size_lo"] = gen_size_lo;
            args["size_hi"] = gen_size_hi;
            args["noise"] = gen_noise;
            args["out_dir"] = gen_out_dir;
            return run(scx_cmd_gen, args);
        }
        if (build.cmd->parsed()) {
            json args;
            args["config"] = build.flags.assemble(build.cmd);
            args["complex"] = build_complex;
            if (build.cmd->count("--out-dir") > 0) args["out_dir"] = build_out_dir;
            return run(scx_cmd_build, args);
        }
        if (trainae.cmd->parsed()) {
            json args;
            args["config"] = trainae.flags.assemble(trainae.cmd);
            args["complexes"] = trainae_complexes;
            args["out_dir"] = trainae_out_dir;
            return run(scx_cmd_train_ae, args);
        }
        if (embed.cmd->parsed()) {
            json args;
            args["config"] = embed.flags.assemble(embed.cmd);
            args["embedding"] = embed_path;
            if (embed.cmd->count("--out") > 0) args["out"] = embed_out;
            return run(scx_cmd_embed, args);
        }
        if (distmat.cmd->parsed()) {
            json args;
            args["config"] = distmat.flags.assemble(distmat.cmd);
            args["complexes"] = distmat_complexes;
            args["out"] = distmat_out;
            return run(scx_cmd_distmat, args);
        }
        if (trainpool.cmd->parsed()) {
            json args;
            args["config"] = trainpool.flags.assemble(trainpool.cmd);
            args["embeddings"] = trainpool_embeddings;
            if (trainpool.cmd->count("--distmat") > 0) args["distmat"] = trainpool_distmat;
            if (trainpool.cmd->count("--complex") > 0) args["complexes"] = trainpool_complexes;
            args["out_model"] = trainpool_model;
            args["out_pooled"] = trainpool_pooled;
            return run(scx_cmd_train_pool, args);
        }
        if (eval.cmd->parsed()) {
            json args;
            args["config"] = eval.flags.assemble(eval.cmd);
            args["complexes"] = eval_complexes;
            if (eval.cmd->count("--embedding") > 0) args["embeddings"] = eval_embeddings;
            if (eval.cmd->count("--distmat") > 0) args["distmat"] = eval_distmat;
            if (eval.cmd->count("--pooled") > 0) args["pooled"] = eval_pooled;
            return run(scx_cmd_eval, args);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    }
    return 0;
}
