#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "simplex.hpp"

namespace scx {

enum class DatasetFamily { PolygonDisk, Annulus };
const char* family_name(DatasetFamily f);
DatasetFamily family_from_name(const std::string& s);

struct DatasetItem {
    std::string name;
    std::string label;
    std::vector<std::vector<VertexId>> maximal;
    Coordinates coords;

    SimplicialComplex build() const { return SimplicialComplex::build(maximal, coords); }
};

/// Triangulated planar shapes for the end-to-end fixtures: fan-triangulated
/// noisy convex polygons ("disks") and triangulated rings ("annuli"). The
/// boundary vertex count is drawn uniformly from [size_lo, size_hi].
/// Deterministic per seed.
std::vector<DatasetItem> generate_synthetic_dataset(DatasetFamily family, int count, int size_lo,
                                                    int size_hi, double noise, std::uint64_t seed);

} // namespace scx
