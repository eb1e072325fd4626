#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace scx {

using VertexId = std::int64_t;

/// A simplex is its strictly increasing vertex list; dim = |vertices| - 1.
struct Simplex {
    std::vector<VertexId> vertices;

    Simplex() = default;
    Simplex(std::initializer_list<VertexId> vs) : vertices(vs) {}
    explicit Simplex(std::vector<VertexId> vs) : vertices(std::move(vs)) {}

    int dim() const { return static_cast<int>(vertices.size()) - 1; }

    bool operator==(const Simplex& o) const { return vertices == o.vertices; }
    bool operator<(const Simplex& o) const {
        if (vertices.size() != o.vertices.size()) return vertices.size() < o.vertices.size();
        return vertices < o.vertices;
    }
};

/// Canonicalize a raw vertex set: sort and check for duplicates / negatives.
Simplex make_simplex(std::vector<VertexId> vertices);

struct Coordinates {
    int ambient_dim = 0;
    std::map<VertexId, std::vector<double>> points;
};

/// Face-closed, unoriented simplicial complex with canonical indexing:
/// simplices sorted by dimension, then lexicographically by vertex list.
/// Immutable after construction.
class SimplicialComplex {
public:
    /// Downward closure of the given maximal simplices. Vertex sets are
    /// canonicalized on ingestion; faces that appear more than once are
    /// stored once.
    static SimplicialComplex build(const std::vector<std::vector<VertexId>>& maximal,
                                   std::optional<Coordinates> coords = std::nullopt);

    int dim() const { return dim_; }
    std::size_t size() const { return simplices_.size(); }           // N
    std::size_t count(int k) const;                                  // |X^k|
    std::size_t size_below_top() const { return size() - count(dim_); } // N-hat

    const std::vector<Simplex>& simplices() const { return simplices_; }
    const Simplex& simplex(std::size_t global) const { return simplices_[global]; }

    bool contains(const Simplex& s) const;
    /// Global ordinal in canonical order; throws "unknown simplex" if absent.
    std::size_t global_ordinal(const Simplex& s) const;
    /// Ordinal within X^k.
    std::size_t local_ordinal(const Simplex& s) const;
    /// First global ordinal of dimension k (valid for 0 <= k <= dim()+1).
    std::size_t dim_offset(int k) const { return dim_offset_[static_cast<std::size_t>(k)]; }

    std::size_t global_from_local(int k, std::size_t local) const { return dim_offset(k) + local; }

    /// Facet / cofacet ordinals (global) of the simplex at `global`.
    const std::vector<std::size_t>& facet_ordinals(std::size_t global) const { return facets_[global]; }
    const std::vector<std::size_t>& cofacet_ordinals(std::size_t global) const { return cofacets_[global]; }

    bool has_coords() const { return coords_.has_value(); }
    const Coordinates& coords() const;

    /// True when the simplex is not a proper face of any other simplex.
    bool is_maximal(std::size_t global) const { return cofacets_[global].empty(); }

private:
    std::vector<Simplex> simplices_;
    std::vector<std::size_t> dim_offset_; // size dim_+2; [k] = first ordinal of dim k
    std::map<Simplex, std::size_t> index_;
    std::vector<std::vector<std::size_t>> facets_;
    std::vector<std::vector<std::size_t>> cofacets_;
    std::optional<Coordinates> coords_;
    int dim_ = 0;
};

/// All members of X one dimension below c whose vertex set is contained in
/// c's. Empty for vertices.
std::vector<Simplex> facets(const SimplicialComplex& X, const Simplex& c);

/// All members of X one dimension above c having c as a facet.
std::vector<Simplex> cofacets(const SimplicialComplex& X, const Simplex& c);

/// CO[a, b] = cofacets(a) ∩ cofacets(b); a and b must be distinct and of
/// equal dimension. Non-empty iff a and b are adjacent.
std::vector<Simplex> co_intersection(const SimplicialComplex& X, const Simplex& a, const Simplex& b);

/// C[a, b] = facets(a) ∩ facets(b); non-empty iff a and b are co-adjacent.
std::vector<Simplex> facet_intersection(const SimplicialComplex& X, const Simplex& a, const Simplex& b);

} // namespace scx
