#pragma once

#include "ckgeom/jet.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ckgeom {

enum class ConstructionTag {
    General,                 // prescribed Ricci, arbitrary torsion
    TraceFreeTorsion,        // prescribed Ricci with tau = 0
    TorsionFree,             // prescribed Ricci, symmetric connection
    Metric2d,                // 2D metric with prescribed Ricci
    Statistical2d,           // Codazzi pair for a given 2D connection
    TraceFreeStatistical2d,  // ... with parallel metric volume
    Statistical,             // statistical structures, n >= 3
};

const std::string& tag_name(ConstructionTag tag);
/// Throws PreconditionError("unsupported-construction") for unknown names.
ConstructionTag parse_tag(const std::string& name);
const std::vector<ConstructionTag>& all_tags();

/// Slot ids, built from 0-based indices and printed 1-based:
/// gamma_slot(2, 0, 1) == "Gamma:3;1,2", metric_slot(0, 1) == "g:1,2".
std::string gamma_slot(int k, int i, int j);
std::string metric_slot(int i, int j);
/// Inverse of gamma_slot / metric_slot (0-based result); nullopt otherwise.
std::optional<std::array<int, 3>> parse_gamma_slot(const std::string& id);
std::optional<std::array<int, 2>> parse_metric_slot(const std::string& id);

inline const std::string kGaugeSlot = "phi";
inline const std::string kConformalSlot = "h";
inline const std::string kConformalDerivativeSlot = "h_1";

struct Census {
    ConstructionTag tag{};
    int dim = 0;
    std::vector<std::string> free_functions;
    std::vector<std::string> initial_slices;
    std::vector<std::string> ck_unknowns;
    std::vector<std::string> determined;
};

/// Throws PreconditionError("unsupported-construction") for n < 2, for
/// trace-free torsion or statistical with n < 3 and for the 2D builders with n != 2.
Census census(ConstructionTag tag, int n);

/// Arbitrary data a builder consumes. Functions live in n variables, slices
/// in x^2..x^n.
struct FreeData {
    std::map<std::string, Jet> functions;
    std::map<std::string, SliceJet> slices;
};

/// Throws PreconditionError("slot-mismatch") unless the slot ids equal the
/// census lists (the gauge slot may be omitted and then reads as zero), and
/// DimensionMismatch when a jet lives in another workspace.
void check_free_data(const Census& census, int degree_cap, const FreeData& fd);

} // namespace ckgeom
