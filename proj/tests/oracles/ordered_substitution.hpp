#pragma once

// Determined Christoffel symbols of a statistical structure by a sweep over
// the designated Codazzi equations, one symbol at a time:
//   Gamma^j_1k  from (nabla g)_j1k = (nabla g)_k1j   (coefficient  g_jj)
//   Gamma^j_ii  from (nabla g)_iji = (nabla g)_jii   (coefficient -g_jj)
//   Gamma^j_ik  from (nabla g)_ijk = (nabla g)_jik   (coefficient -g_jj)
// Each sweep is exact at the constant level (g(0) = I decouples the
// equations), so D + 1 sweeps fix every degree.

#include "ckgeom/constructions.hpp"

namespace oracle {

inline ckgeom::Connection ordered_substitution(const ckgeom::Metric& g,
                                               const ckgeom::FreeData& fd) {
    using namespace ckgeom;
    const int n = g.dim();
    const int cap = g.degree_cap();
    const Census census_n = census(ConstructionTag::Statistical, n);
    Connection c(n, cap, true);
    for (const auto& [id, jet] : fd.functions) {
        if (const auto s = parse_gamma_slot(id)) {
            c.set((*s)[0], (*s)[1], (*s)[2], jet);
        }
    }
    for (int sweep = 0; sweep <= cap; ++sweep) {
        for (const auto& id : census_n.determined) {
            const auto [j, a, b] = *parse_gamma_slot(id);
            const CubicForm t = nabla_g(c, g);
            Jet rho;
            Jet coef;
            if (a == 0) {
                rho = t.at(j, 0, b) - t.at(b, 0, j);
                coef = g.at(j, j);
            } else if (a == b) {
                rho = t.at(a, j, a) - t.at(j, a, a);
                coef = -g.at(j, j);
            } else {
                rho = t.at(a, j, b) - t.at(j, a, b);
                coef = -g.at(j, j);
            }
            c.set(j, a, b, c.at(j, a, b) - rho * reciprocal(coef));
        }
    }
    return c;
}

} // namespace oracle
