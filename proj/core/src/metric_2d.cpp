#include "build_common.hpp"

#include "ckgeom/ck_solver.hpp"

namespace ckgeom {

BuildReport build_metric_2d_prescribed_ricci(const Bilinear& r, const SliceJet& phi,
                                             const SliceJet& psi) {
    if (r.dim() != 2) {
        throw PreconditionError("unsupported-construction", "metric-2d needs n = 2");
    }
    const int cap = r.degree_cap();
    if (!r.at(0, 1).is_zero() || !r.at(1, 0).is_zero()) {
        throw PreconditionError("degenerate-prescribed-tensor", "metric-2d: r must be diagonal");
    }
    if (r.at(0, 0).constant_term() == 0 || r.at(1, 1).constant_term() == 0) {
        throw PreconditionError("degenerate-prescribed-tensor",
                                "metric-2d: r_11(0) and r_22(0) must be nonzero");
    }
    if (phi.values().constant_term() == 0) {
        throw PreconditionError("initial-value-zero", "metric-2d: phi(0) must be nonzero");
    }

    const Jet& r11 = r.at(0, 0);
    const Jet& r22 = r.at(1, 1);
    const Jet r22_1 = partial(r22, 0);
    const Jet r22_11 = partial(r22_1, 0);

    // f h = 1 with f = B - h_11 / (2 h^2 r_11), where B is the curvature
    // formula with (g_22)_11 stripped of its h_11 r_22 term.
    SecondOrderSystem sys;
    sys.dim = 2;
    sys.degree_cap = cap;
    sys.labels = {kConformalSlot};
    sys.initial = {phi};
    sys.initial_derivative = {psi};
    sys.rhs = [&](std::span<const Jet> u) {
        const Jet& h = u[0];
        const Jet h_1 = partial(h, 0);
        DiagonalMetricJets p;
        p.g11 = h * r11;
        p.g22 = h * r22;
        p.g11_1 = partial(p.g11, 0);
        p.g11_2 = partial(p.g11, 1);
        p.g22_1 = partial(p.g22, 0);
        p.g22_2 = partial(p.g22, 1);
        p.g11_22 = partial(p.g11_2, 1);
        p.g22_11 = Rational(2) * h_1 * r22_1 + h * r22_11;
        const Jet b = sectional_curvature_from_parts(p);
        return std::vector<Jet>{Rational(2) * r11 * (h * h * b - h)};
    };
    const CKSolution sol = solve_second_order(sys);
    const Jet& h = sol.values[0];

    Bilinear g(2, cap);
    g.at(0, 0) = h * r11;
    g.at(1, 1) = h * r22;

    BuildReport report;
    report.construction = ConstructionTag::Metric2d;
    report.dim = 2;
    report.degree_cap = cap;
    report.free_data.slices = {{kConformalSlot, phi}, {kConformalDerivativeSlot, psi}};
    report.prescribed = r;
    report.metric = Metric(std::move(g));
    report.conformal_factor = h;
    detail::finalize(report, {{"metric_ricci_residual", cap - 2},
                              {"initial_slices", cap},
                              {"metric_symmetric", cap}});
    return report;
}

} // namespace ckgeom
