#include "build_common.hpp"
#include "linear_forms.hpp"

#include "ckgeom/ck_solver.hpp"

namespace ckgeom {

namespace {

using detail::ConnectionModel;
using detail::RicciCKAssembly;
using detail::RicciEquation;
using detail::Slot;

void require_square_workspace(const Bilinear& r) {
    if (r.dim() < 2) {
        throw PreconditionError("unsupported-construction", "prescribed Ricci needs n >= 2");
    }
}

// tau_k = 0 solved for Gamma^{k+1}_{k,k+1} (k < n) and Gamma^{n-1}_{n,n-1}.
void add_trace_free_relations(ConnectionModel& model) {
    const int n = model.dim();
    const Jet zero = Jet::zero(n, model.degree_cap());
    for (int k = 0; k + 1 < n; ++k) {
        std::vector<std::pair<Rational, Slot>> terms;
        for (int i = 0; i < n; ++i) {
            terms.push_back({1, {i, i, k}});
            if (i != k + 1) {
                terms.push_back({-1, {i, k, i}});
            }
        }
        model.set_determined({k + 1, k, k + 1}, zero, std::move(terms));
    }
    const int last = n - 1;
    std::vector<std::pair<Rational, Slot>> terms;
    for (int i = 0; i <= n - 2; ++i) {
        terms.push_back({1, {i, i, last}});
    }
    for (int i = 0; i <= n - 3; ++i) {
        terms.push_back({-1, {i, last, i}});
    }
    model.set_determined({n - 2, last, n - 2}, zero, std::move(terms));
}

// sum_k Gamma^k_kj = D_j solved for Gamma^1_11 and Gamma^k_kk (k >= 2).
void add_divergence_relations(ConnectionModel& model, const OneForm& d) {
    const int n = model.dim();
    for (int k = 0; k < n; ++k) {
        std::vector<std::pair<Rational, Slot>> terms;
        for (int l = 0; l < n; ++l) {
            if (l != k) {
                terms.push_back({-1, {l, l, k}});
            }
        }
        model.set_determined({k, k, k}, d.at(k), std::move(terms));
    }
}

std::vector<RicciEquation> full_equations(const Bilinear& r) {
    const int n = r.dim();
    std::vector<RicciEquation> eqs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            RicciEquation e{i, j, {}, r.at(i, j)};
            for (int k = 0; k < n; ++k) {
                e.derivative_terms.emplace_back(1, Slot{k, i, j}, k);
                e.derivative_terms.emplace_back(-1, Slot{k, k, j}, i);
            }
            eqs.push_back(std::move(e));
        }
    }
    return eqs;
}

std::vector<RicciEquation> symmetric_equations(const Bilinear& s) {
    const int n = s.dim();
    const Rational half(1, 2);
    std::vector<RicciEquation> eqs;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            RicciEquation e{i, j, {}, s.at(i, j)};
            for (int k = 0; k < n; ++k) {
                e.derivative_terms.emplace_back(1, Slot{k, i, j}, k);
                e.derivative_terms.emplace_back(-half, Slot{k, k, j}, i);
                e.derivative_terms.emplace_back(-half, Slot{k, k, i}, j);
            }
            eqs.push_back(std::move(e));
        }
    }
    return eqs;
}

Slot slot_of(const std::string& id) {
    const auto s = parse_gamma_slot(id);
    if (!s) {
        throw std::logic_error("not a Christoffel slot: " + id);
    }
    return {(*s)[0], (*s)[1], (*s)[2]};
}

OneForm divergence_target(const Bilinear& r, const Jet& gauge) {
    const TwoForm a = split(r).second;
    const int order = a.as_bilinear().valid_order() - 1;
    if (order >= 0 && !two_form_closed(a, order)) {
        throw PreconditionError("antisymmetric-part-not-closed",
                                "the antisymmetric part of r is not closed");
    }
    OneForm d = primitive_of_two_form(a);
    const OneForm grad = gradient(gauge);
    for (int k = 0; k < d.dim(); ++k) {
        d.at(k) += grad.at(k);
    }
    return d;
}

} // namespace

BuildReport build_prescribed_ricci(ConstructionTag tag, const Bilinear& r, const FreeData& fd) {
    require_square_workspace(r);
    const int n = r.dim();
    const int cap = r.degree_cap();
    if (tag != ConstructionTag::General && tag != ConstructionTag::TraceFreeTorsion &&
        tag != ConstructionTag::TorsionFree) {
        throw PreconditionError("unsupported-construction",
                                tag_name(tag) + " is not a prescribed-Ricci construction");
    }
    const Census c = census(tag, n);
    check_free_data(c, cap, fd);
    const bool symmetric = tag == ConstructionTag::TorsionFree;

    ConnectionModel model(n, cap, symmetric);
    for (const auto& [id, jet] : fd.functions) {
        if (id != kGaugeSlot) {
            model.set_free(slot_of(id), jet);
        }
    }
    std::vector<SliceJet> initial;
    for (const auto& id : c.ck_unknowns) {
        model.add_unknown(slot_of(id));
        initial.push_back(detail::slice_at(fd, id));
    }

    std::vector<RicciEquation> equations;
    if (tag == ConstructionTag::TorsionFree) {
        const Jet gauge = detail::function_or_zero(fd, kGaugeSlot, n, cap);
        add_divergence_relations(model, divergence_target(r, gauge));
        equations = symmetric_equations(split(r).first);
    } else {
        if (tag == ConstructionTag::TraceFreeTorsion) {
            add_trace_free_relations(model);
        }
        equations = full_equations(r);
    }
    const RicciCKAssembly assembly(model, std::move(equations));

    FirstOrderSystem sys;
    sys.dim = n;
    sys.degree_cap = cap;
    sys.labels = c.ck_unknowns;
    sys.initial = std::move(initial);
    sys.rhs = [&assembly](std::span<const Jet> u) { return assembly.rhs(u); };
    const CKSolution sol = solve_first_order(sys);

    BuildReport report;
    report.construction = tag;
    report.dim = n;
    report.degree_cap = cap;
    report.free_data = fd;
    report.prescribed = r;
    report.connection = model.assemble(sol.values);

    std::vector<std::pair<std::string, int>> checks{
        {"ricci_residual", cap - 1}, {"free_slots", cap}, {"initial_slices", cap}};
    if (tag == ConstructionTag::TraceFreeTorsion) {
        checks.emplace_back("torsion_trace", cap);
    }
    if (tag == ConstructionTag::TorsionFree) {
        checks.emplace_back("symmetric", cap);
    }
    detail::finalize(report, checks);
    return report;
}

BuildReport build_prescribed_ricci_general(const Bilinear& r, const FreeData& fd) {
    return build_prescribed_ricci(ConstructionTag::General, r, fd);
}

BuildReport build_prescribed_ricci_trace_free_torsion(const Bilinear& r, const FreeData& fd) {
    return build_prescribed_ricci(ConstructionTag::TraceFreeTorsion, r, fd);
}

BuildReport build_prescribed_ricci_torsion_free(const Bilinear& r, const FreeData& fd) {
    return build_prescribed_ricci(ConstructionTag::TorsionFree, r, fd);
}

FreeData extract_prescribed_ricci_data(ConstructionTag tag, const Connection& conn) {
    const int n = conn.dim();
    const Census c = census(tag, n);
    if (tag == ConstructionTag::TorsionFree && !conn.lower_indices_symmetric()) {
        throw PreconditionError("connection-not-symmetric", "torsion-free data needs symmetric c");
    }
    FreeData fd;
    for (const auto& id : c.free_functions) {
        if (id == kGaugeSlot) {
            const TwoForm a = split(ricci(conn)).second;
            OneForm diff = divergence_form(conn);
            const OneForm prim = primitive_of_two_form(a);
            for (int k = 0; k < n; ++k) {
                diff.at(k) -= prim.at(k);
            }
            fd.functions[id] = potential_of_one_form(diff);
        } else {
            const Slot s = slot_of(id);
            fd.functions[id] = conn.at(s.k, s.i, s.j);
        }
    }
    for (const auto& id : c.initial_slices) {
        const Slot s = slot_of(id);
        fd.slices[id] = restrict_x1(conn.at(s.k, s.i, s.j));
    }
    return fd;
}

Connection random_trace_free_connection(std::uint64_t seed, int n, int degree_cap,
                                        SampleSpec spec) {
    const Connection raw = random_connection(seed, n, degree_cap, spec, false);
    const Census c = census(ConstructionTag::TraceFreeTorsion, n);
    ConnectionModel model(n, degree_cap, false);
    for (const auto& id : c.free_functions) {
        const Slot s = slot_of(id);
        model.set_free(s, raw.at(s.k, s.i, s.j));
    }
    for (const auto& id : c.ck_unknowns) {
        const Slot s = slot_of(id);
        model.set_free(s, raw.at(s.k, s.i, s.j));
    }
    add_trace_free_relations(model);
    return model.assemble({});
}

} // namespace ckgeom
