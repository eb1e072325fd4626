#include "scx/scx.h"

#include <cstring>
#include <string>

#include <json.hpp>

#include "error.hpp"
#include "io.hpp"
#include "pipeline.hpp"
#include "simplex.hpp"

namespace {

thread_local std::string g_last_error;

scx_status set_error(scx::ErrorCode code, const char* what) {
    g_last_error = what;
    switch (code) {
    case scx::ErrorCode::InvalidArgument: return SCX_ERROR_INVALID_ARGUMENT;
    case scx::ErrorCode::Io: return SCX_ERROR_IO;
    case scx::ErrorCode::Parse: return SCX_ERROR_PARSE;
    case scx::ErrorCode::Config: return SCX_ERROR_CONFIG;
    case scx::ErrorCode::Numeric: return SCX_ERROR_NUMERIC;
    }
    return SCX_ERROR_INTERNAL;
}

/// Runs `fn`, mapping exceptions onto status codes.
template <typename Fn>
scx_status guarded(Fn&& fn) {
    try {
        fn();
        return SCX_OK;
    } catch (const scx::Error& e) {
        return set_error(e.code(), e.what());
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SCX_ERROR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SCX_ERROR_INTERNAL;
    }
}

char* copy_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

scx_status run_command(std::string (*cmd)(const std::string&), const char* args_json,
                       char** result_json) {
    return guarded([&] {
        if (!result_json) throw scx::invalid_argument("result pointer is null");
        std::string result = cmd(args_json ? std::string(args_json) : std::string());
        *result_json = copy_string(result);
    });
}

} // namespace

struct scx_complex {
    scx::ComplexFile file;
    scx::SimplicialComplex complex;
};

extern "C" {

const char* scx_version(void) { return "1.0.0"; }

const char* scx_last_error(void) { return g_last_error.c_str(); }

void scx_string_free(char* s) { delete[] s; }

scx_status scx_complex_load(const char* path, scx_complex** out) {
    return guarded([&] {
        if (!path || !out) throw scx::invalid_argument("null argument");
        scx::ComplexFile f = scx::load_complex_file(path);
        auto c = f.build();
        *out = new scx_complex{std::move(f), std::move(c)};
    });
}

scx_status scx_complex_from_json(const char* json_text, scx_complex** out) {
    return guarded([&] {
        if (!json_text || !out) throw scx::invalid_argument("null argument");
        scx::ComplexFile f = scx::parse_complex_json(json_text);
        auto c = f.build();
        *out = new scx_complex{std::move(f), std::move(c)};
    });
}

void scx_complex_free(scx_complex* c) { delete c; }

scx_status scx_complex_dimension(const scx_complex* c, int* out) {
    return guarded([&] {
        if (!c || !out) throw scx::invalid_argument("null argument");
        *out = c->complex.dim();
    });
}

scx_status scx_complex_count(const scx_complex* c, int k, size_t* out) {
    return guarded([&] {
        if (!c || !out) throw scx::invalid_argument("null argument");
        *out = c->complex.count(k);
    });
}

scx_status scx_complex_size(const scx_complex* c, size_t* out) {
    return guarded([&] {
        if (!c || !out) throw scx::invalid_argument("null argument");
        *out = c->complex.size();
    });
}

scx_status scx_complex_size_below_top(const scx_complex* c, size_t* out) {
    return guarded([&] {
        if (!c || !out) throw scx::invalid_argument("null argument");
        *out = c->complex.size_below_top();
    });
}

scx_status scx_complex_summary_json(const scx_complex* c, char** out) {
    return guarded([&] {
        if (!c || !out) throw scx::invalid_argument("null argument");
        nlohmann::json j;
        j["name"] = c->file.name;
        if (!c->file.label.empty()) j["label"] = c->file.label;
        j["dimension"] = c->complex.dim();
        nlohmann::json counts = nlohmann::json::array();
        for (int k = 0; k <= c->complex.dim(); ++k) counts.push_back(c->complex.count(k));
        j["counts"] = counts;
        j["n_total"] = c->complex.size();
        j["n_below_top"] = c->complex.size_below_top();
        *out = copy_string(j.dump());
    });
}

scx_status scx_cmd_gen(const char* args_json, char** result_json) {
    return run_command(scx::cmd_gen, args_json, result_json);
}

scx_status scx_cmd_build(const char* args_json, char** result_json) {
    return run_command(scx::cmd_build, args_json, result_json);
}

scx_status scx_cmd_train_ae(const char* args_json, char** result_json) {
    return run_command(scx::cmd_train_ae, args_json, result_json);
}

scx_status scx_cmd_embed(const char* args_json, char** result_json) {
    return run_command(scx::cmd_embed, args_json, result_json);
}

scx_status scx_cmd_distmat(const char* args_json, char** result_json) {
    return run_command(scx::cmd_distmat, args_json, result_json);
}

scx_status scx_cmd_train_pool(const char* args_json, char** result_json) {
    return run_command(scx::cmd_train_pool, args_json, result_json);
}

scx_status scx_cmd_eval(const char* args_json, char** result_json) {
    return run_command(scx::cmd_eval, args_json, result_json);
}

} // extern "C"
