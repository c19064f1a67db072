#include "build_common.hpp"

#include "ckgeom/ck_solver.hpp"
#include "ckgeom/linalg.hpp"

#include <map>
#include <set>

namespace ckgeom {

namespace {

using Pair = std::pair<int, int>;  // (j, k) with k <= j

std::vector<Pair> metric_pairs(int n) {
    std::vector<Pair> pairs;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= j; ++k) {
            if (j != 0 || k != 0) {
                pairs.emplace_back(j, k);
            }
        }
    }
    return pairs;
}

// Full symmetric table from g_11 and the CK unknowns in metric_pairs order.
Bilinear assemble_metric(int n, int cap, const Jet& g11, std::span<const Jet> u) {
    Bilinear g(n, cap);
    g.at(0, 0) = g11;
    const auto pairs = metric_pairs(n);
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        g.at(pairs[p].first, pairs[p].second) = u[p];
        g.at(pairs[p].second, pairs[p].first) = u[p];
    }
    return g;
}

// (nabla g)_1jk = (nabla g)_j1k solved for (g_jk)_1:
// (g_jk)_1 = (g_1k)_j + sum_l [G^l_1j g_lk + G^l_1k g_jl - G^l_j1 g_lk - G^l_jk g_1l].
// Valid for connections with torsion; only non-x^1 derivatives of g appear.
std::vector<Jet> codazzi_rhs(const Connection& c, const Bilinear& g) {
    const int n = c.dim();
    std::vector<Jet> out;
    for (const auto& [j, k] : metric_pairs(n)) {
        Jet v = partial(g.at(0, k), j);
        for (int l = 0; l < n; ++l) {
            v += c.at(l, 0, j) * g.at(l, k);
            v += c.at(l, 0, k) * g.at(j, l);
            v -= c.at(l, j, 0) * g.at(l, k);
            v -= c.at(l, j, k) * g.at(0, l);
        }
        out.push_back(std::move(v));
    }
    return out;
}

void require_normalized(const Jet& g11, const SliceJet& s12, const SliceJet& s22) {
    if (g11.constant_term() != 1 || s12.values().constant_term() != 0 ||
        s22.values().constant_term() != 1) {
        throw PreconditionError("normalization-violated", "metric data must satisfy g(0) = I");
    }
}

BuildReport statistical_2d_report(ConstructionTag tag, const Connection& c, Bilinear g,
                                  FreeData fd) {
    BuildReport report;
    report.construction = tag;
    report.dim = 2;
    report.degree_cap = c.degree_cap();
    report.free_data = std::move(fd);
    report.connection = c;
    report.metric = Metric(std::move(g));
    return report;
}

// ---------------------------------------------------------------------------
// n >= 3: algebraic elimination of the determined Christoffel symbols
// ---------------------------------------------------------------------------

struct GammaTerm {
    int sign;
    std::array<int, 3> gamma;  // (l, a, b), canonical a <= b
    int ga, gb;                // metric entry multiplying it
};
struct DerivativeTerm {
    int sign;
    int ga, gb;
    int axis;
};
struct AlgebraicEquation {
    std::vector<GammaTerm> gamma_terms;
    std::vector<DerivativeTerm> derivative_terms;
};

std::array<int, 3> canon(int l, int a, int b) {
    return a <= b ? std::array<int, 3>{l, a, b} : std::array<int, 3>{l, b, a};
}

// Appends sign * (g_{ga,gb})_axis + gamma_sign * sum_l g_{gx,l} G^l_ab.
void add_half(AlgebraicEquation& e, int sign, int ga, int gb, int axis, int gx, int a, int b,
              int n, int gamma_sign) {
    e.derivative_terms.push_back({sign, ga, gb, axis});
    for (int l = 0; l < n; ++l) {
        e.gamma_terms.push_back({gamma_sign, canon(l, a, b), gx, l});
    }
}

// Equations in the same order as census(Statistical, n).determined.
std::vector<AlgebraicEquation> algebraic_system(int n) {
    std::vector<AlgebraicEquation> eqs;
    // (g_1k)_j + sum g_jl G^l_1k - (g_1j)_k - sum g_kl G^l_1j = 0, 1 < k < j
    for (int j = 1; j < n; ++j) {
        for (int k = 1; k < j; ++k) {
            AlgebraicEquation e;
            add_half(e, +1, 0, k, j, j, 0, k, n, +1);
            add_half(e, -1, 0, j, k, k, 0, j, n, -1);
            eqs.push_back(std::move(e));
        }
    }
    // (g_ji)_i - sum g_jl G^l_ii - (g_ii)_j + sum g_il G^l_ji = 0, i, j >= 2, j != i
    for (int i = 1; i < n; ++i) {
        for (int j = 1; j < n; ++j) {
            if (j == i) {
                continue;
            }
            AlgebraicEquation e;
            add_half(e, +1, j, i, i, j, i, i, n, -1);
            add_half(e, -1, i, i, j, i, j, i, n, +1);
            eqs.push_back(std::move(e));
        }
    }
    // (g_jk)_i - sum g_jl G^l_ik - (g_ik)_j + sum g_il G^l_jk = 0
    for (int i = 1; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            for (int k = i + 1; k < n; ++k) {
                if (k == j) {
                    continue;
                }
                AlgebraicEquation e;
                add_half(e, +1, j, k, i, j, i, k, n, -1);
                add_half(e, -1, i, k, j, i, j, k, n, +1);
                eqs.push_back(std::move(e));
            }
        }
    }
    return eqs;
}

class StatisticalModel {
public:
    StatisticalModel(int n, int cap, const FreeData& fd)
        : n_(n), cap_(cap), census_(census(ConstructionTag::Statistical, n)),
          equations_(algebraic_system(n)) {
        for (std::size_t d = 0; d < census_.determined.size(); ++d) {
            const auto s = *parse_gamma_slot(census_.determined[d]);
            determined_[canon(s[0], s[1], s[2])] = static_cast<int>(d);
        }
        for (const auto& [id, jet] : fd.functions) {
            if (const auto s = parse_gamma_slot(id)) {
                free_[canon((*s)[0], (*s)[1], (*s)[2])] = jet;
            }
        }
    }

    // Free symbols plus the determined ones solved against g.
    Connection connection(const Bilinear& g) const {
        const std::size_t m = equations_.size();
        const Jet zero = Jet::zero(n_, cap_);
        JetMatrix a(m, std::vector<Jet>(m, zero));
        JetMatrix b(m, std::vector<Jet>(1, zero));
        for (std::size_t e = 0; e < m; ++e) {
            Jet& rhs = b[e][0];
            for (const auto& t : equations_[e].derivative_terms) {
                const Jet d = partial(g.at(t.ga, t.gb), t.axis);
                if (t.sign > 0) {
                    rhs -= d;
                } else {
                    rhs += d;
                }
            }
            for (const auto& t : equations_[e].gamma_terms) {
                const Jet& coef = g.at(t.ga, t.gb);
                if (const auto it = determined_.find(t.gamma); it != determined_.end()) {
                    Jet& entry = a[e][static_cast<std::size_t>(it->second)];
                    entry = t.sign > 0 ? entry + coef : entry - coef;
                } else if (const auto f = free_.find(t.gamma); f != free_.end()) {
                    if (!coef.is_zero() && !f->second.is_zero()) {
                        rhs = t.sign > 0 ? rhs - coef * f->second : rhs + coef * f->second;
                    }
                }
            }
        }
        const JetMatrix x = solve_linear(std::move(a), std::move(b));
        Connection c(n_, cap_, true);
        for (const auto& [slot, jet] : free_) {
            c.set(slot[0], slot[1], slot[2], jet);
        }
        for (const auto& [slot, d] : determined_) {
            c.set(slot[0], slot[1], slot[2], x[static_cast<std::size_t>(d)][0]);
        }
        return c;
    }

private:
    int n_, cap_;
    Census census_;
    std::vector<AlgebraicEquation> equations_;
    std::map<std::array<int, 3>, int> determined_;
    std::map<std::array<int, 3>, Jet> free_;
};

std::vector<SliceJet> metric_slices(const FreeData& fd, int n) {
    std::vector<SliceJet> out;
    for (const auto& [j, k] : metric_pairs(n)) {
        out.push_back(detail::slice_at(fd, metric_slot(k, j)));
    }
    return out;
}

std::vector<std::string> metric_labels(int n) {
    std::vector<std::string> out;
    for (const auto& [j, k] : metric_pairs(n)) {
        out.push_back(metric_slot(k, j));
    }
    return out;
}

void require_delta_slices(const std::vector<SliceJet>& slices, int n, const Jet& g11) {
    const auto pairs = metric_pairs(n);
    bool ok = g11.constant_term() == 1;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const int want = pairs[p].first == pairs[p].second ? 1 : 0;
        ok = ok && slices[p].values().constant_term() == want;
    }
    if (!ok) {
        throw PreconditionError("normalization-violated", "metric data must satisfy g(0) = I");
    }
}

} // namespace

BuildReport build_statistical_2d(const Connection& c, const Jet& g11, const SliceJet& init12,
                                 const SliceJet& init22) {
    if (c.dim() != 2) {
        throw PreconditionError("unsupported-construction", "statistical-2d needs n = 2");
    }
    require_normalized(g11, init12, init22);
    const int cap = c.degree_cap();
    FirstOrderSystem sys;
    sys.dim = 2;
    sys.degree_cap = cap;
    sys.labels = metric_labels(2);
    sys.initial = {init12, init22};
    sys.rhs = [&](std::span<const Jet> u) { return codazzi_rhs(c, assemble_metric(2, cap, g11, u)); };
    const CKSolution sol = solve_first_order(sys);

    FreeData fd;
    fd.functions[metric_slot(0, 0)] = g11;
    fd.slices = {{metric_slot(0, 1), init12}, {metric_slot(1, 1), init22}};
    BuildReport report = statistical_2d_report(ConstructionTag::Statistical2d, c,
                                               assemble_metric(2, cap, g11, sol.values), fd);
    detail::finalize(report, {{"codazzi", cap - 1},
                              {"normalized", 0},
                              {"metric_symmetric", cap},
                              {"free_slots", cap},
                              {"initial_slices", cap}});
    return report;
}

BuildReport build_trace_free_statistical_2d(const Connection& c, const SliceJet& init12,
                                            const SliceJet& init22) {
    if (c.dim() != 2) {
        throw PreconditionError("unsupported-construction", "trace-free-statistical-2d needs n = 2");
    }
    if (!c.lower_indices_symmetric()) {
        throw PreconditionError("connection-not-symmetric",
                                "trace-free statistical structures need a torsion-free connection");
    }
    const int cap = c.degree_cap();
    const Jet nu = parallel_volume_2d(c);
    const Jet nu2 = nu * nu;
    require_normalized(nu2, init12, init22);
    auto g11_of = [&](std::span<const Jet> u) { return (nu2 + u[0] * u[0]) * reciprocal(u[1]); };

    FirstOrderSystem sys;
    sys.dim = 2;
    sys.degree_cap = cap;
    sys.labels = metric_labels(2);
    sys.initial = {init12, init22};
    sys.rhs = [&](std::span<const Jet> u) {
        return codazzi_rhs(c, assemble_metric(2, cap, g11_of(u), u));
    };
    const CKSolution sol = solve_first_order(sys);

    FreeData fd;
    fd.slices = {{metric_slot(0, 1), init12}, {metric_slot(1, 1), init22}};
    BuildReport report =
        statistical_2d_report(ConstructionTag::TraceFreeStatistical2d, c,
                              assemble_metric(2, cap, g11_of(sol.values), sol.values), fd);
    report.volume = nu;
    detail::finalize(report, {{"codazzi", cap - 1},
                              {"normalized", 0},
                              {"metric_symmetric", cap},
                              {"initial_slices", cap},
                              {"volume_determinant", cap},
                              {"parallel_volume", cap - 1}});
    return report;
}

BuildReport build_statistical_nd(int n, int degree_cap, const FreeData& fd) {
    const Census census_n = census(ConstructionTag::Statistical, n);
    check_free_data(census_n, degree_cap, fd);
    const Jet& g11 = fd.functions.at(metric_slot(0, 0));
    std::vector<SliceJet> initial = metric_slices(fd, n);
    require_delta_slices(initial, n, g11);

    const StatisticalModel model(n, degree_cap, fd);
    FirstOrderSystem sys;
    sys.dim = n;
    sys.degree_cap = degree_cap;
    sys.labels = metric_labels(n);
    sys.initial = std::move(initial);
    sys.rhs = [&](std::span<const Jet> u) {
        const Bilinear g = assemble_metric(n, degree_cap, g11, u);
        return codazzi_rhs(model.connection(g), g);
    };
    const CKSolution sol = solve_first_order(sys);

    Bilinear g = assemble_metric(n, degree_cap, g11, sol.values);
    BuildReport report;
    report.construction = ConstructionTag::Statistical;
    report.dim = n;
    report.degree_cap = degree_cap;
    report.free_data = fd;
    report.connection = model.connection(g);
    report.metric = Metric(std::move(g));
    detail::finalize(report, {{"codazzi", degree_cap - 1},
                              {"normalized", 0},
                              {"metric_symmetric", degree_cap},
                              {"symmetric", degree_cap},
                              {"free_slots", degree_cap},
                              {"initial_slices", degree_cap}});
    return report;
}

FreeData extract_statistical_data(ConstructionTag tag, const Metric& g, const Connection& c) {
    const int n = g.dim();
    const Census cs = census(tag, n);
    FreeData fd;
    for (const auto& id : cs.free_functions) {
        if (const auto s = parse_gamma_slot(id)) {
            fd.functions[id] = c.at((*s)[0], (*s)[1], (*s)[2]);
        } else if (const auto m = parse_metric_slot(id)) {
            fd.functions[id] = g.at((*m)[0], (*m)[1]);
        }
    }
    for (const auto& id : cs.initial_slices) {
        const auto m = *parse_metric_slot(id);
        fd.slices[id] = restrict_x1(g.at(m[0], m[1]));
    }
    return fd;
}

} // namespace ckgeom
