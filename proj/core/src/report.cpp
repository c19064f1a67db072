#include "build_common.hpp"

#include "ckgeom/errors.hpp"

#include <algorithm>

namespace ckgeom {

namespace detail {

const SliceJet& slice_at(const FreeData& fd, const std::string& id) {
    const auto it = fd.slices.find(id);
    if (it == fd.slices.end()) {
        throw PreconditionError("slot-mismatch", "missing initial slice " + id);
    }
    return it->second;
}

Jet function_or_zero(const FreeData& fd, const std::string& id, int n, int degree_cap) {
    const auto it = fd.functions.find(id);
    return it == fd.functions.end() ? Jet::zero(n, degree_cap) : it->second;
}

void finalize(BuildReport& report, const std::vector<std::pair<std::string, int>>& checks) {
    report.checks.clear();
    for (const auto& [name, order] : checks) {
        report.checks.push_back({name, order, run_check(report, name, order)});
    }
}

} // namespace detail

namespace {

[[noreturn]] void missing(const std::string& check, const char* field) {
    throw FormatError("check " + check + " needs the report field '" + field + "'");
}

const Connection& need_connection(const BuildReport& r, const std::string& check) {
    if (!r.connection) {
        missing(check, "connection");
    }
    return *r.connection;
}

const Metric& need_metric(const BuildReport& r, const std::string& check) {
    if (!r.metric) {
        missing(check, "metric");
    }
    return *r.metric;
}

const Bilinear& need_prescribed(const BuildReport& r, const std::string& check) {
    if (!r.prescribed) {
        missing(check, "prescribed");
    }
    return *r.prescribed;
}

const Jet& need_conformal(const BuildReport& r, const std::string& check) {
    if (!r.conformal_factor) {
        missing(check, "conformal_factor");
    }
    return *r.conformal_factor;
}

bool tables_agree(const Bilinear& a, const Bilinear& b, int order) {
    for (std::size_t i = 0; i < a.entries().size(); ++i) {
        if (!equal_to_order(a.entries()[i], b.entries()[i], order)) {
            return false;
        }
    }
    return true;
}

bool gauge_slot_holds(const BuildReport& r, const Jet& phi, int order) {
    const Connection& c = need_connection(r, "free_slots");
    const OneForm d = divergence_form(c);
    const OneForm prim = primitive_of_two_form(split(need_prescribed(r, "free_slots")).second);
    const OneForm grad = gradient(phi);
    for (int k = 0; k < c.dim(); ++k) {
        if (!equal_to_order(d.at(k), prim.at(k) + grad.at(k), order)) {
            return false;
        }
    }
    return true;
}

bool free_slots_hold(const BuildReport& r, int order) {
    for (const auto& [id, jet] : r.free_data.functions) {
        if (id == kGaugeSlot) {
            if (!gauge_slot_holds(r, jet, order)) {
                return false;
            }
        } else if (const auto s = parse_gamma_slot(id)) {
            const Connection& c = need_connection(r, "free_slots");
            if (!equal_to_order(c.at((*s)[0], (*s)[1], (*s)[2]), jet, order)) {
                return false;
            }
        } else if (const auto m = parse_metric_slot(id)) {
            if (!equal_to_order(need_metric(r, "free_slots").at((*m)[0], (*m)[1]), jet, order)) {
                return false;
            }
        } else {
            throw FormatError("unknown free slot " + id);
        }
    }
    return true;
}

bool initial_slices_hold(const BuildReport& r, int order) {
    for (const auto& [id, slice] : r.free_data.slices) {
        Jet value;
        if (const auto s = parse_gamma_slot(id)) {
            value = need_connection(r, "initial_slices").at((*s)[0], (*s)[1], (*s)[2]);
        } else if (const auto m = parse_metric_slot(id)) {
            value = need_metric(r, "initial_slices").at((*m)[0], (*m)[1]);
        } else if (id == kConformalSlot) {
            value = need_conformal(r, "initial_slices");
        } else if (id == kConformalDerivativeSlot) {
            value = partial(need_conformal(r, "initial_slices"), 0);
        } else {
            throw FormatError("unknown initial slice " + id);
        }
        if (!equal_to_order(restrict_x1(value), slice, order)) {
            return false;
        }
    }
    return true;
}

} // namespace

const std::vector<std::string>& check_names() {
    static const std::vector<std::string> names{
        "ricci_residual", "metric_ricci_residual", "free_slots",         "initial_slices",
        "torsion_trace",  "symmetric",             "metric_symmetric",   "codazzi",
        "normalized",     "volume_determinant",    "parallel_volume",
    };
    return names;
}

bool run_check(const BuildReport& r, const std::string& name, int order) {
    if (name == "ricci_residual") {
        return tables_agree(ricci(need_connection(r, name)), need_prescribed(r, name), order);
    }
    if (name == "metric_ricci_residual") {
        return tables_agree(ricci(levi_civita(need_metric(r, name))), need_prescribed(r, name),
                            order);
    }
    if (name == "free_slots") {
        return free_slots_hold(r, order);
    }
    if (name == "initial_slices") {
        return initial_slices_hold(r, order);
    }
    if (name == "torsion_trace") {
        const OneForm tau = torsion_trace(need_connection(r, name));
        return std::all_of(tau.entries().begin(), tau.entries().end(),
                           [&](const Jet& t) { return is_zero_to_order(t, order); });
    }
    if (name == "symmetric") {
        const Connection& c = need_connection(r, name);
        for (int k = 0; k < c.dim(); ++k) {
            for (int i = 0; i < c.dim(); ++i) {
                for (int j = i + 1; j < c.dim(); ++j) {
                    if (!equal_to_order(c.at(k, i, j), c.at(k, j, i), order)) {
                        return false;
                    }
                }
            }
        }
        return true;
    }
    if (name == "metric_symmetric") {
        const Metric& g = need_metric(r, name);
        for (int i = 0; i < g.dim(); ++i) {
            for (int j = i + 1; j < g.dim(); ++j) {
                if (!equal_to_order(g.at(i, j), g.at(j, i), order)) {
                    return false;
                }
            }
        }
        return true;
    }
    if (name == "codazzi") {
        return is_codazzi(need_connection(r, name), need_metric(r, name), order);
    }
    if (name == "normalized") {
        return need_metric(r, name).normalized_at_zero();
    }
    if (name == "volume_determinant" || name == "parallel_volume") {
        if (!r.volume) {
            missing(name, "volume");
        }
        const Jet& nu = *r.volume;
        if (name == "volume_determinant") {
            const Metric& g = need_metric(r, name);
            const Jet det = g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(1, 0);
            return equal_to_order(det, nu * nu, order);
        }
        const OneForm t = volume_trace_form_2d(need_connection(r, name));
        for (int k = 0; k < 2; ++k) {
            if (!equal_to_order(partial(nu, k), t.at(k) * nu, order)) {
                return false;
            }
        }
        return true;
    }
    throw FormatError("unknown check '" + name + "'");
}

bool verify(const BuildReport& report, std::optional<int> order) {
    if (report.checks.empty()) {
        return false;
    }
    return std::all_of(report.checks.begin(), report.checks.end(), [&](const CheckResult& c) {
        return run_check(report, c.name, order.value_or(c.zero_to_order));
    });
}

// ---------------------------------------------------------------------------
// Samples
// ---------------------------------------------------------------------------

namespace {

Jet sample(std::uint64_t seed, std::uint64_t stream, int n, int cap, SampleSpec spec,
           bool vanishing) {
    const int degree = std::min(spec.degree, cap);
    const std::uint64_t s = detail::mix_seed(seed, stream);
    return vanishing ? random_poly_vanishing_at_zero(s, n, cap, degree, spec.coeff_bound)
                     : random_poly(s, n, cap, degree, spec.coeff_bound);
}

} // namespace

Connection random_connection(std::uint64_t seed, int n, int degree_cap, SampleSpec spec,
                             bool symmetric) {
    Connection c(n, degree_cap, symmetric);
    std::uint64_t stream = 0;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = symmetric ? i : 0; j < n; ++j) {
                c.set(k, i, j, sample(seed, stream++, n, degree_cap, spec, false));
            }
        }
    }
    return c;
}

Metric random_normalized_metric(std::uint64_t seed, int n, int degree_cap, SampleSpec spec) {
    Bilinear g(n, degree_cap);
    std::uint64_t stream = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i; j < n; ++j) {
            Jet v = sample(seed, stream++, n, degree_cap, spec, true);
            if (i == j) {
                v += Jet::constant(n, degree_cap, 1);
            }
            g.at(i, j) = v;
            g.at(j, i) = v;
        }
    }
    return Metric(std::move(g));
}

Bilinear random_bilinear(std::uint64_t seed, int n, int degree_cap, SampleSpec spec) {
    Bilinear b(n, degree_cap);
    std::uint64_t stream = 0;
    for (auto& e : b.entries()) {
        e = sample(seed, stream++, n, degree_cap, spec, false);
    }
    return b;
}

Bilinear random_diagonal_nondegenerate(std::uint64_t seed, int degree_cap, SampleSpec spec) {
    Bilinear r(2, degree_cap);
    const int bound = std::max(1, spec.coeff_bound);
    for (int i = 0; i < 2; ++i) {
        const std::uint64_t s = detail::mix_seed(seed, 100 + static_cast<std::uint64_t>(i));
        int c0 = static_cast<int>(s % static_cast<std::uint64_t>(bound)) + 1;
        if ((s >> 32) & 1U) {
            c0 = -c0;
        }
        r.at(i, i) = Jet::constant(2, degree_cap, c0) +
                     sample(seed, static_cast<std::uint64_t>(i), 2, degree_cap, spec, true);
    }
    return r;
}

namespace {

FreeData make_free_data(const Census& c, std::uint64_t seed, int cap, SampleSpec spec,
                        bool random) {
    const int n = c.dim;
    FreeData fd;
    std::uint64_t stream = 0;
    auto perturb = [&](bool vanishing) {
        ++stream;
        return random ? sample(seed, stream, n, cap, spec, vanishing) : Jet::zero(n, cap);
    };
    auto unit = [&] { return Jet::constant(n, cap, 1); };
    for (const auto& id : c.free_functions) {
        if (id == kGaugeSlot) {
            fd.functions[id] = perturb(true);
        } else if (const auto m = parse_metric_slot(id)) {
            fd.functions[id] = unit() + perturb(true);
        } else {
            fd.functions[id] = perturb(false);
        }
    }
    for (const auto& id : c.initial_slices) {
        Jet v;
        if (const auto m = parse_metric_slot(id)) {
            v = perturb(true);
            if ((*m)[0] == (*m)[1]) {
                v += unit();
            }
        } else if (id == kConformalSlot) {
            v = unit() + perturb(true);
        } else {
            v = perturb(false);
        }
        fd.slices[id] = restrict_x1(v);
    }
    return fd;
}

} // namespace

FreeData random_free_data(const Census& c, std::uint64_t seed, int degree_cap, SampleSpec spec) {
    return make_free_data(c, seed, degree_cap, spec, true);
}

FreeData zero_free_data(const Census& c, int degree_cap) {
    return make_free_data(c, 0, degree_cap, {}, false);
}

} // namespace ckgeom
