#include "dataset.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"
#include "rng.hpp"

namespace scx {

const char* family_name(DatasetFamily f) {
    return f == DatasetFamily::PolygonDisk ? "polygon_disk" : "annulus";
}

DatasetFamily family_from_name(const std::string& s) {
    if (s == "polygon_disk") return DatasetFamily::PolygonDisk;
    if (s == "annulus") return DatasetFamily::Annulus;
    throw config_error("unknown dataset family '" + s + "'");
}

namespace {

constexpr double kTau = 6.283185307179586;

/// Jittered but order-preserving boundary angles.
std::vector<double> ring_angles(int b, double noise, RngState& rng) {
    std::vector<double> out;
    for (int i = 0; i < b; ++i) {
        double jitter = noise * 0.3 * rng.uniform(-1.0, 1.0);
        out.push_back(kTau * (static_cast<double>(i) + jitter) / b);
    }
    return out;
}

DatasetItem polygon_disk(int b, double noise, RngState& rng) {
    DatasetItem item;
    item.label = family_name(DatasetFamily::PolygonDisk);
    item.coords.ambient_dim = 2;
    item.coords.points[0] = {0.0, 0.0}; // fan center
    auto angles = ring_angles(b, noise, rng);
    // radius tracks the total cell count (4b+1 here) so geometric scale
    // grows at the same per-cell rate in every family
    for (int i = 0; i < b; ++i) {
        double r = 2.25 * (4 * b + 1) * (1.0 + noise * 0.2 * rng.uniform(-1.0, 1.0));
        item.coords.points[i + 1] = {r * std::cos(angles[static_cast<std::size_t>(i)]),
                                     r * std::sin(angles[static_cast<std::size_t>(i)])};
    }
    for (int i = 0; i < b; ++i) {
        item.maximal.push_back({0, i + 1, (i + 1) % b + 1});
    }
    return item;
}

DatasetItem annulus(int b, double noise, RngState& rng) {
    DatasetItem item;
    item.label = family_name(DatasetFamily::Annulus);
    item.coords.ambient_dim = 2;
    auto outer_angles = ring_angles(b, noise, rng);
    auto inner_angles = ring_angles(b, noise, rng);
    for (int i = 0; i < b; ++i) {
        // total cell count is 8b; inner radius stays at half the outer
        double ro = 2.25 * (8 * b) * (1.0 + noise * 0.2 * rng.uniform(-1.0, 1.0));
        double ri = 0.5 * ro * (1.0 + noise * 0.2 * rng.uniform(-1.0, 1.0));
        item.coords.points[i] = {ro * std::cos(outer_angles[static_cast<std::size_t>(i)]),
                                 ro * std::sin(outer_angles[static_cast<std::size_t>(i)])};
        item.coords.points[b + i] = {ri * std::cos(inner_angles[static_cast<std::size_t>(i)]),
                                     ri * std::sin(inner_angles[static_cast<std::size_t>(i)])};
    }
    for (int i = 0; i < b; ++i) {
        int j = (i + 1) % b;
        item.maximal.push_back({i, j, b + i});
        item.maximal.push_back({b + i, b + j, j});
    }
    return item;
}

} // namespace

std::vector<DatasetItem> generate_synthetic_dataset(DatasetFamily family, int count, int size_lo,
                                                    int size_hi, double noise, std::uint64_t seed) {
    if (count < 1) throw config_error("dataset count must be positive");
    if (size_lo < 3 || size_hi < size_lo) {
        throw config_error("size range must satisfy 3 <= lo <= hi");
    }
    if (noise < 0.0) throw config_error("noise must be non-negative");

    std::vector<DatasetItem> out;
    for (int i = 0; i < count; ++i) {
        RngState rng = RngState::substream(seed, static_cast<std::uint64_t>(i));
        int b = size_lo + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(size_hi - size_lo + 1)));
        DatasetItem item = family == DatasetFamily::PolygonDisk ? polygon_disk(b, noise, rng)
                                                                : annulus(b, noise, rng);
        char buf[64];
        std::snprintf(buf, sizeof(buf), "%s_%03d", family_name(family), i);
        item.name = buf;
        out.push_back(std::move(item));
    }
    return out;
}

} // namespace scx
