#pragma once

#include <string>

namespace scx {

/// Batch commands behind the public API. Each takes a JSON argument object
/// (string form) and returns a JSON result summary; every result echoes the
/// resolved run configuration, its hash, and the master seed. Arguments
/// common to all commands:
///   "config": RunConfig object (optional; defaults apply when absent)
/// Everything else is command-specific; unknown keys are rejected.
std::string cmd_gen(const std::string& args_json);
std::string cmd_build(const std::string& args_json);
std::string cmd_train_ae(const std::string& args_json);
std::string cmd_embed(const std::string& args_json);
std::string cmd_distmat(const std::string& args_json);
std::string cmd_train_pool(const std::string& args_json);
std::string cmd_eval(const std::string& args_json);

} // namespace scx
