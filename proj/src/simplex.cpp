#include "simplex.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "error.hpp"

namespace scx {

namespace {

std::string simplex_to_string(const std::vector<VertexId>& vs) {
    std::string out = "{";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(vs[i]);
    }
    out += "}";
    return out;
}

// Enumerating faces uses a bitmask over the vertex list.
constexpr std::size_t kMaxSimplexVertices = 24;

} // namespace

Simplex make_simplex(std::vector<VertexId> vertices) {
    if (vertices.empty()) throw invalid_argument("malformed simplex: empty vertex set");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] < 0) {
            throw invalid_argument("malformed simplex: negative vertex id in " + simplex_to_string(vertices));
        }
        if (i > 0 && vertices[i] == vertices[i - 1]) {
            throw invalid_argument("malformed simplex: duplicate vertex in " + simplex_to_string(vertices));
        }
    }
    return Simplex(std::move(vertices));
}

SimplicialComplex SimplicialComplex::build(const std::vector<std::vector<VertexId>>& maximal,
                                           std::optional<Coordinates> coords) {
    if (maximal.empty()) throw invalid_argument("empty complex: no maximal simplices given");

    std::set<Simplex> members;
    for (const auto& raw : maximal) {
        Simplex top = make_simplex(raw);
        std::size_t m = top.vertices.size();
        if (m > kMaxSimplexVertices) {
            throw invalid_argument("simplex too large: " + std::to_string(m) + " vertices (limit " +
                                   std::to_string(kMaxSimplexVertices) + ")");
        }
        for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<VertexId> face;
            for (std::size_t i = 0; i < m; ++i) {
                if (mask & (1u << i)) face.push_back(top.vertices[i]);
            }
            members.insert(Simplex(std::move(face)));
        }
    }

    SimplicialComplex X;
    // std::set ordering already matches the canonical (dim, lex) order.
    X.simplices_.assign(members.begin(), members.end());
    X.dim_ = X.simplices_.back().dim();

    X.dim_offset_.assign(static_cast<std::size_t>(X.dim_) + 2, 0);
    for (std::size_t g = 0; g < X.simplices_.size(); ++g) {
        X.index_.emplace(X.simplices_[g], g);
    }
    for (int k = 0; k <= X.dim_; ++k) {
        auto probe = [&](const Simplex& s) { return s.dim() < k; };
        auto it = std::partition_point(X.simplices_.begin(), X.simplices_.end(), probe);
        X.dim_offset_[static_cast<std::size_t>(k)] = static_cast<std::size_t>(it - X.simplices_.begin());
    }
    X.dim_offset_.back() = X.simplices_.size();

    X.facets_.resize(X.size());
    X.cofacets_.resize(X.size());
    for (std::size_t g = 0; g < X.size(); ++g) {
        const Simplex& s = X.simplices_[g];
        if (s.dim() == 0) continue;
        for (std::size_t drop = 0; drop < s.vertices.size(); ++drop) {
            std::vector<VertexId> face;
            face.reserve(s.vertices.size() - 1);
            for (std::size_t i = 0; i < s.vertices.size(); ++i) {
                if (i != drop) face.push_back(s.vertices[i]);
            }
            std::size_t fg = X.index_.at(Simplex(std::move(face)));
            X.facets_[g].push_back(fg);
            X.cofacets_[fg].push_back(g);
        }
        std::sort(X.facets_[g].begin(), X.facets_[g].end());
    }
    for (auto& cf : X.cofacets_) std::sort(cf.begin(), cf.end());

    if (coords) {
        for (std::size_t g = X.dim_offset_[0]; g < X.dim_offset_[1]; ++g) {
            VertexId v = X.simplices_[g].vertices[0];
            auto it = coords->points.find(v);
            if (it == coords->points.end()) {
                throw invalid_argument("missing coordinate for vertex " + std::to_string(v));
            }
            if (static_cast<int>(it->second.size()) != coords->ambient_dim) {
                throw invalid_argument("coordinate for vertex " + std::to_string(v) +
                                       " does not match ambient dimension");
            }
        }
        X.coords_ = std::move(coords);
    }
    return X;
}

std::size_t SimplicialComplex::count(int k) const {
    if (k < 0 || k > dim_) return 0;
    return dim_offset_[static_cast<std::size_t>(k) + 1] - dim_offset_[static_cast<std::size_t>(k)];
}

bool SimplicialComplex::contains(const Simplex& s) const {
    return index_.count(s) > 0;
}

std::size_t SimplicialComplex::global_ordinal(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
        throw invalid_argument("unknown simplex " + simplex_to_string(s.vertices));
    }
    return it->second;
}

std::size_t SimplicialComplex::local_ordinal(const Simplex& s) const {
    return global_ordinal(s) - dim_offset(s.dim());
}

const Coordinates& SimplicialComplex::coords() const {
    if (!coords_) throw invalid_argument("coordinates required but not present");
    return *coords_;
}

std::vector<Simplex> facets(const SimplicialComplex& X, const Simplex& c) {
    std::size_t g = X.global_ordinal(c);
    std::vector<Simplex> out;
    for (std::size_t fg : X.facet_ordinals(g)) out.push_back(X.simplex(fg));
    return out;
}

std::vector<Simplex> cofacets(const SimplicialComplex& X, const Simplex& c) {
    std::size_t g = X.global_ordinal(c);
    std::vector<Simplex> out;
    for (std::size_t cg : X.cofacet_ordinals(g)) out.push_back(X.simplex(cg));
    return out;
}

namespace {

std::vector<Simplex> ordinal_intersection(const SimplicialComplex& X,
                                          const std::vector<std::size_t>& a,
                                          const std::vector<std::size_t>& b) {
    std::vector<std::size_t> common;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
    std::vector<Simplex> out;
    out.reserve(common.size());
    for (std::size_t g : common) out.push_back(X.simplex(g));
    return out;
}

void require_distinct_equal_dim(const SimplicialComplex& X, const Simplex& a, const Simplex& b) {
    X.global_ordinal(a);
    X.global_ordinal(b);
    if (a.dim() != b.dim()) {
        throw invalid_argument("dimension mismatch: dim " + std::to_string(a.dim()) + " vs dim " +
                               std::to_string(b.dim()));
    }
    if (a == b) throw invalid_argument("intersection requires distinct simplices");
}

} // namespace

std::vector<Simplex> co_intersection(const SimplicialComplex& X, const Simplex& a, const Simplex& b) {
    require_distinct_equal_dim(X, a, b);
    return ordinal_intersection(X, X.cofacet_ordinals(X.global_ordinal(a)),
                                X.cofacet_ordinals(X.global_ordinal(b)));
}

std::vector<Simplex> facet_intersection(const SimplicialComplex& X, const Simplex& a, const Simplex& b) {
    require_distinct_equal_dim(X, a, b);
    return ordinal_intersection(X, X.facet_ordinals(X.global_ordinal(a)),
                                X.facet_ordinals(X.global_ordinal(b)));
}

} // namespace scx
