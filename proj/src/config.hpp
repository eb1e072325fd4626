#pragma once

#include <cstdint>
#include <string>

#include "autoencoder.hpp"
#include "hausdorff.hpp"
#include "pooling.hpp"

namespace scx {

/// Every hyperparameter of the pipeline in one place. Stage seeds are
/// derived from the single master seed; the per-section seed fields are
/// filled in by resolve() and never serialized on their own.
struct RunConfig {
    std::uint64_t seed = 0;
    AutoencoderConfig ae;
    PoolingConfig pool;
    SamplingConfig sampling;

    /// Derives the stage seeds from the master seed and validates the
    /// autoencoder triple. Call once after parsing.
    void resolve();
};

/// Strict parse: unknown keys anywhere are rejected, missing keys keep
/// their defaults. The text must be a JSON object.
RunConfig parse_run_config(const std::string& json_text);

/// Reads the file and parses it; errors name the path.
RunConfig load_run_config(const std::string& path);

/// Canonical serialization: fixed key set, sorted keys, round-trip floats.
/// parse(dump(c)) == c and dump is byte-stable for equal configs.
std::string dump_run_config(const RunConfig& cfg);

/// FNV-1a (64-bit) of the canonical dump, as 16 hex characters. Persisted
/// artifacts carry this value so downstream stages can refuse mismatches.
std::string config_hash(const RunConfig& cfg);

} // namespace scx
