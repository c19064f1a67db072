#pragma once

#include "ckgeom/constructions.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace ckgeom::detail {

/// Runs the named checks and stores them in the report.
void finalize(BuildReport& report, const std::vector<std::pair<std::string, int>>& checks);

/// Independent per-slot seed from a scenario seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

const SliceJet& slice_at(const FreeData& fd, const std::string& id);
Jet function_or_zero(const FreeData& fd, const std::string& id, int n, int degree_cap);

} // namespace ckgeom::detail
