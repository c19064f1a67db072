#pragma once

#include "ckgeom/io.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace ckgeom::cli {

/// One build described by a JSON document:
///
///   {"construction": "torsion-free", "n": 3, "D": 4, "seed": 7,
///    "prescribed": "zero" | {"random": {"degree": 2, "coeff_bound": 3, "symmetric": false}}
///                 | {"inline": <bilinear>},
///    "reference": {"degree": 3, "coeff_bound": 3},
///    "free_data": "zero" | "random" | {"default": "zero", "slots": {"<id>": <jet or slice>}},
///    "connection": "zero" | {"random": {...}} | {"inline": <connection>},
///    "output": "report.json"}
///
/// With "reference" a known solution is drawn from the seed, the prescribed
/// tensor (or connection) is taken from it and the free data is extracted
/// from it, so the build reproduces the reference.
struct Scenario {
    ConstructionTag construction{};
    int dim = 0;
    int degree_cap = 0;
    std::uint64_t seed = 0;
    Json prescribed;  // null when absent
    std::optional<SampleSpec> reference;
    Json free_data;   // null when absent
    Json connection;  // null when absent
    std::string output;
};

/// Throws FormatError on schema violations.
Scenario parse_scenario(const Json& j);

/// Builds the report; PreconditionError and friends propagate.
BuildReport run_scenario(const Scenario& s);

} // namespace ckgeom::cli
