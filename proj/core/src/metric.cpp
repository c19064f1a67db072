#include "ckgeom/geometry.hpp"

#include "ckgeom/linalg.hpp"

#include <algorithm>
#include <array>

namespace ckgeom {

Metric::Metric(Bilinear g) : g_(std::move(g)) {
    const int n = g_.dim();
    std::vector<std::vector<Rational>> g0(n, std::vector<Rational>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j > i && !equal_to_order(g_.at(i, j), g_.at(j, i), g_.degree_cap())) {
                throw PreconditionError("metric-not-symmetric", "metric must satisfy g_ij = g_ji");
            }
            g0[i][j] = g_.at(i, j).constant_term();
        }
    }
    if (n > 0 && rational_inverse(g0).empty()) {
        throw SingularJet("metric: g(0) is not invertible");
    }
}

bool Metric::normalized_at_zero() const {
    const int n = dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (g_.at(i, j).constant_term() != (i == j ? 1 : 0)) {
                return false;
            }
        }
    }
    return true;
}

Metric Metric::identity(int dim, int degree_cap) {
    Bilinear g(dim, degree_cap);
    for (int i = 0; i < dim; ++i) {
        g.at(i, i) = Jet::constant(dim, degree_cap, 1);
    }
    return Metric(std::move(g));
}

CubicForm nabla_g(const Connection& c, const Metric& g) {
    const int n = c.dim();
    if (g.dim() != n || g.degree_cap() != c.degree_cap()) {
        throw DimensionMismatch("nabla_g: connection and metric live in different workspaces");
    }
    CubicForm out(n, c.degree_cap());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                Jet v = partial(g.at(j, k), i);
                for (int l = 0; l < n; ++l) {
                    v -= c.at(l, i, j) * g.at(l, k);
                    v -= c.at(l, i, k) * g.at(j, l);
                }
                out.at(i, j, k) = std::move(v);
            }
        }
    }
    return out;
}

bool is_codazzi(const Connection& c, const Metric& g, int order) {
    const CubicForm t = nabla_g(c, g);
    const int n = c.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = i; k < n; ++k) {
                if (!equal_to_order(t.at(i, j, k), t.at(j, i, k), order)) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_totally_symmetric(const CubicForm& t, int order) {
    const int n = t.dim();
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            for (int k = 0; k < n; ++k) {
                std::array<int, 3> p{i, j, k};
                std::sort(p.begin(), p.end());
                do {
                    if (!equal_to_order(t.at(i, j, k), t.at(p[0], p[1], p[2]), order)) {
                        return false;
                    }
                } while (std::next_permutation(p.begin(), p.end()));
            }
        }
    }
    return true;
}

Connection levi_civita(const Metric& g) {
    const int n = g.dim();
    const int cap = g.degree_cap();
    JetMatrix gm(n, std::vector<Jet>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            gm[i][j] = g.at(i, j);
        }
    }
    const JetMatrix ginv = inverse(gm);

    // dg[m][a][b] = (g_ab)_m
    std::vector<Bilinear> dg(n, Bilinear(n, cap));
    for (int m = 0; m < n; ++m) {
        for (int a = 0; a < n; ++a) {
            for (int b = 0; b < n; ++b) {
                dg[m].at(a, b) = partial(g.at(a, b), m);
            }
        }
    }

    Connection out(n, cap, true);
    const Rational half(1, 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            std::vector<Jet> lowered(n);
            for (int k = 0; k < n; ++k) {
                lowered[k] = half * (dg[j].at(k, i) + dg[i].at(j, k) - dg[k].at(j, i));
            }
            for (int s = 0; s < n; ++s) {
                Jet v = Jet::zero(n, cap);
                for (int k = 0; k < n; ++k) {
                    v += ginv[s][k] * lowered[k];
                }
                out.set(s, i, j, v);
            }
        }
    }
    return out;
}

namespace {

void require_diagonal_2d(const Metric& g, const char* where) {
    if (g.dim() != 2) {
        throw DimensionMismatch(std::string(where) + ": metric must be two-dimensional");
    }
    if (!is_zero_to_order(g.at(0, 1), g.at(0, 1).valid_order())) {
        throw PreconditionError("metric-not-diagonal", std::string(where) + ": g_12 must vanish");
    }
}

} // namespace

Connection levi_civita_diagonal_2d(const Metric& g) {
    require_diagonal_2d(g, "levi_civita_diagonal_2d");
    const Jet& g11 = g.at(0, 0);
    const Jet& g22 = g.at(1, 1);
    const Jet i11 = reciprocal(g11);
    const Jet i22 = reciprocal(g22);
    const Rational half(1, 2);
    const Jet g11_1 = partial(g11, 0), g11_2 = partial(g11, 1);
    const Jet g22_1 = partial(g22, 0), g22_2 = partial(g22, 1);

    Connection c(2, g.degree_cap(), true);
    c.set(0, 0, 0, half * i11 * g11_1);
    c.set(0, 0, 1, half * i11 * g11_2);
    c.set(0, 1, 1, -half * i11 * g22_1);
    c.set(1, 0, 0, -half * i22 * g11_2);
    c.set(1, 0, 1, half * i22 * g22_1);
    c.set(1, 1, 1, half * i22 * g22_2);
    return c;
}

Jet sectional_curvature_from_parts(const DiagonalMetricJets& p) {
    const Jet i11 = reciprocal(p.g11);
    const Jet i22 = reciprocal(p.g22);
    Jet f = Rational(-1, 2) * i11 * i22 * (p.g11_22 + p.g22_11);
    f += Rational(1, 4) * i11 * i22 * i22 * (p.g22_2 * p.g11_2 + p.g22_1 * p.g22_1);
    f += Rational(1, 4) * i11 * i11 * i22 * (p.g11_1 * p.g22_1 + p.g11_2 * p.g11_2);
    return f;
}

Jet sectional_curvature_2d(const Metric& g) {
    require_diagonal_2d(g, "sectional_curvature_2d");
    DiagonalMetricJets p;
    p.g11 = g.at(0, 0);
    p.g22 = g.at(1, 1);
    p.g11_1 = partial(p.g11, 0);
    p.g11_2 = partial(p.g11, 1);
    p.g22_1 = partial(p.g22, 0);
    p.g22_2 = partial(p.g22, 1);
    p.g11_22 = partial(p.g11_2, 1);
    p.g22_11 = partial(p.g22_1, 0);
    return sectional_curvature_from_parts(p);
}

OneForm volume_trace_form_2d(const Connection& c) {
    if (c.dim() != 2) {
        throw DimensionMismatch("volume_trace_form_2d: connection must be two-dimensional");
    }
    OneForm t(2, c.degree_cap());
    for (int k = 0; k < 2; ++k) {
        t.at(k) = c.at(0, k, 0) + c.at(1, k, 1);
    }
    return t;
}

Jet parallel_volume_2d(const Connection& c) {
    const OneForm t = volume_trace_form_2d(c);
    const int check_order = t.valid_order() - 1;
    if (check_order >= 0 && !one_form_closed(t, check_order)) {
        throw PreconditionError("ricci-not-symmetric",
                                "parallel_volume_2d: trace form is not closed");
    }
    return exp_jet(potential_of_one_form(t));
}

} // namespace ckgeom
