#pragma once

#include "ckgeom/census.hpp"
#include "ckgeom/geometry.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ckgeom {

struct CheckResult {
    std::string name;
    int zero_to_order = 0;
    bool passed = false;
};

/// Everything a build consumed and produced, plus the checks it advertises.
/// `verify` recomputes the checks from these fields alone.
struct BuildReport {
    ConstructionTag construction{};
    int dim = 0;
    int degree_cap = 0;
    FreeData free_data;
    std::optional<Bilinear> prescribed;        // r
    std::optional<Connection> connection;
    std::optional<Metric> metric;
    std::optional<Jet> conformal_factor;       // h, metric-2d
    std::optional<Jet> volume;                 // nu_12, trace-free statistical
    std::vector<CheckResult> checks;
};

/// Names accepted in BuildReport::checks.
const std::vector<std::string>& check_names();

/// Re-runs every check of the report, each at its recorded order or at
/// `order` when given. True iff all of them hold.
bool verify(const BuildReport& report, std::optional<int> order = std::nullopt);

/// Recomputes one named check; throws FormatError for unknown names or when
/// the report lacks the fields the check needs.
bool run_check(const BuildReport& report, const std::string& name, int order);

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Connection with Ric = r; free Christoffel symbols from fd.
BuildReport build_prescribed_ricci_general(const Bilinear& r, const FreeData& fd);

/// As above with vanishing torsion trace; n >= 3.
BuildReport build_prescribed_ricci_trace_free_torsion(const Bilinear& r, const FreeData& fd);

/// Symmetric connection with Ric = r. Rejects r whose antisymmetric part is
/// not closed with PreconditionError("antisymmetric-part-not-closed").
BuildReport build_prescribed_ricci_torsion_free(const Bilinear& r, const FreeData& fd);

/// Dispatches on the tag among the three builders above.
BuildReport build_prescribed_ricci(ConstructionTag tag, const Bilinear& r, const FreeData& fd);

/// g = h r with Ric(g) = r for diagonal nondegenerate r; h = phi and
/// (h)_1 = psi on x^1 = 0.
BuildReport build_metric_2d_prescribed_ricci(const Bilinear& r, const SliceJet& phi,
                                             const SliceJet& psi);

/// Metric g with g_11 given and (nabla g) symmetric for an arbitrary 2D connection.
BuildReport build_statistical_2d(const Connection& c, const Jet& g11, const SliceJet& init12,
                                 const SliceJet& init22);

/// Symmetric c with closed trace form: Codazzi metric with det g = nu^2, nabla nu = 0.
BuildReport build_trace_free_statistical_2d(const Connection& c, const SliceJet& init12,
                                            const SliceJet& init22);

/// Statistical structure (g, nabla) for n >= 3.
BuildReport build_statistical_nd(int n, int degree_cap, const FreeData& fd);

// ---------------------------------------------------------------------------
// Free data of known solutions (round trips)
// ---------------------------------------------------------------------------

/// Free data under which the prescribed-Ricci builder for `tag` reproduces c
/// from r = ricci(c). For torsion-free the gauge is the potential of
/// D(c) - primitive(antisym ricci(c)).
FreeData extract_prescribed_ricci_data(ConstructionTag tag, const Connection& c);

/// Free data reproducing (g, c) with the statistical builders (2D: g_11 and
/// the slices; n >= 3: also the free Christoffel symbols).
FreeData extract_statistical_data(ConstructionTag tag, const Metric& g, const Connection& c);

// ---------------------------------------------------------------------------
// Seeded samples
// ---------------------------------------------------------------------------

struct SampleSpec {
    int degree = 3;
    int coeff_bound = 3;
};

Connection random_connection(std::uint64_t seed, int n, int degree_cap, SampleSpec spec,
                             bool symmetric);
/// Random connection with tau = 0: free and unknown slots random, the rest
/// solved from tau = 0.
Connection random_trace_free_connection(std::uint64_t seed, int n, int degree_cap, SampleSpec spec);
/// I + random symmetric polynomial vanishing at 0.
Metric random_normalized_metric(std::uint64_t seed, int n, int degree_cap, SampleSpec spec);
Bilinear random_bilinear(std::uint64_t seed, int n, int degree_cap, SampleSpec spec);
/// Diagonal r with r_ii(0) a nonzero integer.
Bilinear random_diagonal_nondegenerate(std::uint64_t seed, int degree_cap, SampleSpec spec);

/// Random free data for a census. Normalizations are kept: metric slots are
/// delta_ij at 0, h(0) = 1.
FreeData random_free_data(const Census& c, std::uint64_t seed, int degree_cap, SampleSpec spec);
/// The same with every perturbation zero (flat data).
FreeData zero_free_data(const Census& c, int degree_cap);

} // namespace ckgeom
