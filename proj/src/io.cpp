#include "io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "error.hpp"

namespace scx {

using nlohmann::json;

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
}

namespace {

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw io_error("failed writing " + path);
}

double parse_double(const std::string& tok, const std::string& path, std::size_t line) {
    char* end = nullptr;
    double v = std::strtod(tok.c_str(), &end);
    if (end == tok.c_str() || *end != '\0') {
        throw parse_error(path + ":" + std::to_string(line) + ": bad number \"" + tok + "\"");
    }
    return v;
}

long parse_long(const std::string& tok, const std::string& path, std::size_t line) {
    char* end = nullptr;
    long v = std::strtol(tok.c_str(), &end, 10);
    if (end == tok.c_str() || *end != '\0') {
        throw parse_error(path + ":" + std::to_string(line) + ": bad integer \"" + tok + "\"");
    }
    return v;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

ComplexFile parse_complex_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw parse_error(std::string("complex file is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("complex file must be a JSON object");
    for (const auto& [key, value] : j.items()) {
        (void)value;
        if (key != "name" && key != "label" && key != "ambient_dim" && key != "coordinates" &&
            key != "maximal_simplices") {
            throw parse_error("unknown key \"" + key + "\" in complex file");
        }
    }

    ComplexFile out;
    if (j.contains("name")) {
        if (!j.at("name").is_string()) throw parse_error("field \"name\" must be a string");
        out.name = j.at("name").get<std::string>();
    }
    if (j.contains("label")) {
        if (!j.at("label").is_string()) throw parse_error("field \"label\" must be a string");
        out.label = j.at("label").get<std::string>();
    }
    if (!j.contains("maximal_simplices")) {
        throw parse_error("complex file lacks \"maximal_simplices\"");
    }
    const json& ms = j.at("maximal_simplices");
    if (!ms.is_array() || ms.empty()) {
        throw parse_error("field \"maximal_simplices\" must be a non-empty array");
    }
    for (const json& s : ms) {
        if (!s.is_array() || s.empty()) {
            throw parse_error("each maximal simplex must be a non-empty array of vertex ids");
        }
        std::vector<VertexId> verts;
        for (const json& v : s) {
            if (!v.is_number_integer() && !v.is_number_unsigned()) {
                throw parse_error("vertex ids must be integers");
            }
            verts.push_back(v.get<VertexId>());
        }
        out.maximal.push_back(std::move(verts));
    }

    if (j.contains("coordinates") != j.contains("ambient_dim")) {
        throw parse_error("\"coordinates\" and \"ambient_dim\" must appear together");
    }
    if (j.contains("coordinates")) {
        Coordinates c;
        if (!j.at("ambient_dim").is_number_integer()) {
            throw parse_error("field \"ambient_dim\" must be an integer");
        }
        c.ambient_dim = j.at("ambient_dim").get<int>();
        const json& pts = j.at("coordinates");
        if (!pts.is_object()) throw parse_error("field \"coordinates\" must be an object");
        for (const auto& [key, value] : pts.items()) {
            char* end = nullptr;
            long id = std::strtol(key.c_str(), &end, 10);
            if (end == key.c_str() || *end != '\0') {
                throw parse_error("coordinate key \"" + key + "\" is not a vertex id");
            }
            if (!value.is_array()) throw parse_error("coordinates must be arrays of numbers");
            std::vector<double> p;
            for (const json& x : value) {
                if (!x.is_number()) throw parse_error("coordinates must be arrays of numbers");
                p.push_back(x.get<double>());
            }
            c.points[id] = std::move(p);
        }
        out.coords = std::move(c);
    }
    return out;
}

std::string dump_complex_json(const ComplexFile& file) {
    json j;
    j["name"] = file.name;
    if (!file.label.empty()) j["label"] = file.label;
    if (file.coords) {
        j["ambient_dim"] = file.coords->ambient_dim;
        json pts = json::object();
        for (const auto& [id, p] : file.coords->points) {
            pts[std::to_string(id)] = p;
        }
        j["coordinates"] = pts;
    }
    j["maximal_simplices"] = file.maximal;
    return j.dump(2) + "\n";
}

ComplexFile load_complex_file(const std::string& path) {
    try {
        return parse_complex_json(read_text_file(path));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Io) throw;
        throw Error(e.code(), path + ": " + e.what());
    }
}

void write_complex_file(const ComplexFile& file, const std::string& path) {
    write_text_file(path, dump_complex_json(file));
}

void write_matrix_artifact(const std::string& path, const std::string& kind, const Mat& m,
                           const std::string& config_hash, const std::vector<std::string>& items) {
    std::ostringstream out;
    out << "# scx-matrix v1\n";
    out << "# kind " << kind << "\n";
    if (!config_hash.empty()) out << "# config " << config_hash << "\n";
    if (!items.empty()) {
        out << "# items";
        for (const auto& it : items) out << " " << it;
        out << "\n";
    }
    out << "size " << m.rows() << " " << m.cols() << "\n";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0.0) {
                out << i << " " << j << " " << format_double(m(i, j)) << "\n";
            }
        }
    }
    write_text_file(path, out.str());
}

MatrixArtifact read_matrix_artifact(const std::string& path) {
    std::istringstream in(read_text_file(path));
    MatrixArtifact art;
    std::string line;
    std::size_t lineno = 0;
    bool sized = false;
    Eigen::Index rows = 0, cols = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto toks = split_ws(line);
            if (toks.size() >= 2 && toks[1] == "scx-matrix") continue;
            if (toks.size() >= 3 && toks[1] == "kind") art.kind = toks[2];
            if (toks.size() >= 3 && toks[1] == "config") art.config = toks[2];
            if (toks.size() >= 2 && toks[1] == "items") {
                art.items.assign(toks.begin() + 2, toks.end());
            }
            continue;
        }
        auto toks = split_ws(line);
        if (!sized) {
            if (toks.size() != 3 || toks[0] != "size") {
                throw parse_error(path + ":" + std::to_string(lineno) +
                                  ": expected \"size R C\" before matrix entries");
            }
            rows = parse_long(toks[1], path, lineno);
            cols = parse_long(toks[2], path, lineno);
            if (rows < 0 || cols < 0) {
                throw parse_error(path + ":" + std::to_string(lineno) + ": negative matrix size");
            }
            art.m = Mat::Zero(rows, cols);
            sized = true;
            continue;
        }
        if (toks.size() != 3) {
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": expected \"row col value\" triplet");
        }
        long i = parse_long(toks[0], path, lineno);
        long j = parse_long(toks[1], path, lineno);
        if (i < 0 || i >= rows || j < 0 || j >= cols) {
            throw parse_error(path + ":" + std::to_string(lineno) + ": entry out of bounds");
        }
        art.m(i, j) = parse_double(toks[2], path, lineno);
    }
    if (!sized) throw parse_error(path + ": no \"size R C\" line found");
    return art;
}

void write_embedding_artifact(const std::string& path, const EmbeddingArtifact& art) {
    if (art.dims.size() != art.offsets.size()) {
        throw invalid_argument("embedding artifact dims/offsets length mismatch");
    }
    std::ostringstream out;
    out << "# scx-embedding v1\n";
    out << "# config " << art.config << "\n";
    out << "# complex " << art.complex_name << "\n";
    out << "# dims";
    for (int d : art.dims) out << " " << d;
    out << "\n# offsets";
    for (std::size_t o : art.offsets) out << " " << o;
    out << "\n";
    out << "size " << art.u.rows() << " " << art.u.cols() << "\n";
    for (Eigen::Index i = 0; i < art.u.rows(); ++i) {
        for (Eigen::Index j = 0; j < art.u.cols(); ++j) {
            if (art.u(i, j) != 0.0) {
                out << i << " " << j << " " << format_double(art.u(i, j)) << "\n";
            }
        }
    }
    write_text_file(path, out.str());
}

EmbeddingArtifact read_embedding_artifact(const std::string& path) {
    std::istringstream in(read_text_file(path));
    EmbeddingArtifact art;
    std::string line;
    std::size_t lineno = 0;
    bool magic = false, sized = false;
    Eigen::Index rows = 0, cols = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            auto toks = split_ws(line);
            if (toks.size() >= 3 && toks[1] == "scx-embedding" && toks[2] == "v1") magic = true;
            if (toks.size() >= 3 && toks[1] == "config") art.config = toks[2];
            if (toks.size() >= 3 && toks[1] == "complex") art.complex_name = toks[2];
            if (toks.size() >= 2 && toks[1] == "dims") {
                for (std::size_t t = 2; t < toks.size(); ++t) {
                    art.dims.push_back(static_cast<int>(parse_long(toks[t], path, lineno)));
                }
            }
            if (toks.size() >= 2 && toks[1] == "offsets") {
                for (std::size_t t = 2; t < toks.size(); ++t) {
                    long o = parse_long(toks[t], path, lineno);
                    if (o < 0) throw parse_error(path + ": negative row offset");
                    art.offsets.push_back(static_cast<std::size_t>(o));
                }
            }
            continue;
        }
        if (!magic) throw parse_error(path + " is not an scx-embedding file");
        auto toks = split_ws(line);
        if (!sized) {
            if (toks.size() != 3 || toks[0] != "size") {
                throw parse_error(path + ":" + std::to_string(lineno) +
                                  ": expected \"size R C\" before matrix entries");
            }
            rows = parse_long(toks[1], path, lineno);
            cols = parse_long(toks[2], path, lineno);
            if (rows < 0 || cols < 0) {
                throw parse_error(path + ":" + std::to_string(lineno) + ": negative matrix size");
            }
            art.u = Mat::Zero(rows, cols);
            sized = true;
            continue;
        }
        if (toks.size() != 3) {
            throw parse_error(path + ":" + std::to_string(lineno) +
                              ": expected \"row col value\" triplet");
        }
        long i = parse_long(toks[0], path, lineno);
        long j = parse_long(toks[1], path, lineno);
        if (i < 0 || i >= rows || j < 0 || j >= cols) {
            throw parse_error(path + ":" + std::to_string(lineno) + ": entry out of bounds");
        }
        art.u(i, j) = parse_double(toks[2], path, lineno);
    }
    if (!magic) throw parse_error(path + " is not an scx-embedding file");
    if (!sized) throw parse_error(path + ": no \"size R C\" line found");
    if (art.dims.size() != art.offsets.size()) {
        throw parse_error(path + ": dims/offsets length mismatch");
    }
    return art;
}

} // namespace scx
