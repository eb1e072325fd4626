#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dense.hpp"
#include "simplex.hpp"

namespace scx {

/// On-disk description of one complex: maximal simplices plus optional
/// geometry and class label. JSON with a fixed key set; parsing is strict
/// and serialization is canonical, so write -> parse -> write is a fixed
/// point at the byte level.
struct ComplexFile {
    std::string name;
    std::string label; // empty = unlabeled
    std::vector<std::vector<VertexId>> maximal;
    std::optional<Coordinates> coords;

    SimplicialComplex build() const { return SimplicialComplex::build(maximal, coords); }
};

ComplexFile parse_complex_json(const std::string& text);
std::string dump_complex_json(const ComplexFile& file);
ComplexFile load_complex_file(const std::string& path);
void write_complex_file(const ComplexFile& file, const std::string& path);

/// Matrices travel as plain text: optional "# scx-matrix v1" header block
/// (kind, producing config hash, item names), a "size R C" line, then one
/// "row col value" triplet per stored entry in row-major order. Values are
/// printed with %.17g so doubles round-trip exactly. Headerless files
/// (size line first) are accepted for externally produced matrices.
struct MatrixArtifact {
    std::string kind;               // empty for headerless input
    std::string config;             // config hash, empty if absent
    std::vector<std::string> items; // row labels, empty if absent
    Mat m;
};

void write_matrix_artifact(const std::string& path, const std::string& kind, const Mat& m,
                           const std::string& config_hash = "",
                           const std::vector<std::string>& items = {});
MatrixArtifact read_matrix_artifact(const std::string& path);

/// Embedding table of one complex: the matrix plus the embedded dimensions
/// and their starting rows.
struct EmbeddingArtifact {
    std::string config; // config hash
    std::string complex_name;
    std::vector<int> dims;
    std::vector<std::size_t> offsets;
    Mat u;
};

void write_embedding_artifact(const std::string& path, const EmbeddingArtifact& art);
EmbeddingArtifact read_embedding_artifact(const std::string& path);

/// %.17g, the shortest fixed format that round-trips IEEE doubles.
std::string format_double(double v);

} // namespace scx
