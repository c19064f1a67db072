// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "ckgeom/ck_solver.hpp"
#include "ckgeom/constructions.hpp"
#include "ckgeom/io.hpp"
#include "oracles/ck_recursion.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

using namespace ckgeom;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool same_table(std::span<const Jet> a, std::span<const Jet> b, int order) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal_to_order(a[i], b[i], order)) {
            return false;
        }
    }
    return true;
}

bool table_zero(std::span<const Jet> a, int order) {
    for (const auto& e : a) {
        if (!is_zero_to_order(e, order)) {
            return false;
        }
    }
    return true;
}

Rational factorial(int k) {
    Rational f(1);
    for (int i = 2; i <= k; ++i) {
        f *= i;
    }
    return f;
}

// ---------------------------------------------------------------------------

Outcome census_conformance() {
    Outcome o;
    for (int n = 2; n <= 6; ++n) {
        const auto sz = [](int v) { return static_cast<std::size_t>(v); };
        const Census g = census(ConstructionTag::General, n);
        o.require(g.free_functions.size() == sz(n * n * n - n * n) &&
                      g.initial_slices.size() == sz(n * n),
                  "general n=" + std::to_string(n));
        const Census tf = census(ConstructionTag::TorsionFree, n);
        o.require(tf.free_functions.size() == sz((n * n * n - 3 * n) / 2 + 1) &&
                      tf.initial_slices.size() == sz((n * n + n) / 2),
                  "torsion-free n=" + std::to_string(n));
        if (n >= 3) {
            const Census t = census(ConstructionTag::TraceFreeTorsion, n);
            o.require(t.free_functions.size() == sz(n * n * n - n * n - n) &&
                          t.initial_slices.size() == sz(n * n),
                      "trace-free-torsion n=" + std::to_string(n));
            const Census s = census(ConstructionTag::Statistical, n);
            o.require(s.free_functions.size() == sz((n * n * n + 6 * n * n + 5 * n) / 6) &&
                          s.initial_slices.size() == sz(n * (n + 1) / 2 - 1),
                      "statistical n=" + std::to_string(n));
        }
    }
    bool rejected = false;
    try {
        census(ConstructionTag::TraceFreeTorsion, 2);
    } catch (const PreconditionError&) {
        rejected = true;
    }
    o.require(rejected, "trace-free-torsion n=2 accepted");
    return o;
}

Outcome ck_solver_suite() {
    Outcome o;
    const int D = 8;
    FirstOrderSystem exp_sys{1, D, {"U"}, {SliceJet::constant(1, D, 1)},
                             [](std::span<const Jet> u) { return std::vector<Jet>{u[0]}; }};
    const Jet e = solve_first_order(exp_sys)["U"];
    for (int k = 0; k <= D; ++k) {
        o.require(e.coefficient(std::vector<int>{k}) == 1 / factorial(k), "exponential");
    }

    FirstOrderSystem transport{2, D, {"U"}, {restrict_x1(Jet::variable(2, D, 1))},
                               [](std::span<const Jet> u) { return std::vector<Jet>{partial(u[0], 1)}; }};
    o.require(equal_to_order(solve_first_order(transport)["U"],
                             Jet::variable(2, D, 0) + Jet::variable(2, D, 1), D),
              "transport");

    SecondOrderSystem cosine{1, D, {"U"}, {SliceJet::constant(1, D, 1)}, {SliceJet::zero(1, D)},
                             [](std::span<const Jet> u) { return std::vector<Jet>{-u[0]}; }};
    const Jet c = solve_second_order(cosine)["U"];
    for (int k = 0; k <= D; ++k) {
        const Rational expected = k % 2 ? Rational(0) : Rational(k % 4 ? -1 : 1) / factorial(k);
        o.require(c.coefficient(std::vector<int>{k}) == expected, "cosine");
    }

    const int D6 = 6;
    const Jet phi = Jet::variable(2, D6, 1);
    FirstOrderSystem burgers{2, D6, {"U"}, {restrict_x1(phi)}, [](std::span<const Jet> u) {
                                 return std::vector<Jet>{u[0] * partial(u[0], 1)};
                             }};
    const auto expected1 = oracle::solve_first_order(
        oracle::Poly::from_jet(phi), [](const oracle::Poly& u) { return u * u.partial(1); });
    o.require(oracle::same_to_order(solve_first_order(burgers)["U"], expected1, D6),
              "first-order nonlinear vs recursion");

    const Jet p2 = random_poly(17, 2, D6, 3, 3);
    const Jet q2 = random_poly(18, 2, D6, 3, 3);
    SecondOrderSystem wave{2, D6, {"U"}, {restrict_x1(p2)}, {restrict_x1(q2)},
                           [](std::span<const Jet> u) {
                               return std::vector<Jet>{u[0] * partial(partial(u[0], 1), 1)};
                           }};
    const auto expected2 = oracle::solve_second_order(
        oracle::Poly::from_jet(p2), oracle::Poly::from_jet(q2),
        [](const oracle::Poly& u) { return u * u.partial(1).partial(1); });
    o.require(oracle::same_to_order(solve_second_order(wave)["U"], expected2, D6),
              "second-order nonlinear vs recursion");
    return o;
}

Bilinear closed_random_ricci(std::uint64_t seed, int n, int D) {
    Bilinear r = split(random_bilinear(seed, n, D, {2, 3})).first;
    OneForm beta(n, D);
    for (int i = 0; i < n; ++i) {
        beta.at(i) = random_poly(seed * 13 + static_cast<std::uint64_t>(i), n, D, 3, 2);
    }
    const TwoForm a = antisymmetrized_derivative(beta);
    for (std::size_t e = 0; e < r.entries().size(); ++e) {
        r.entries()[e] += a.as_bilinear().entries()[e];
    }
    return r;
}

Outcome prescribed_ricci_residuals() {
    Outcome o;
    const int D = 4;
    for (ConstructionTag tag :
         {ConstructionTag::General, ConstructionTag::TraceFreeTorsion, ConstructionTag::TorsionFree}) {
        for (int n : {2, 3}) {
            if (tag == ConstructionTag::TraceFreeTorsion && n == 2) {
                continue;
            }
            const Census cs = census(tag, n);
            for (std::uint64_t seed = 1; seed <= 5; ++seed) {
                const Bilinear r = tag == ConstructionTag::TorsionFree
                                       ? closed_random_ricci(seed, n, D)
                                       : random_bilinear(seed, n, D, {2, 3});
                const BuildReport rep =
                    build_prescribed_ricci(tag, r, random_free_data(cs, seed, D, {}));
                const std::string where = tag_name(tag) + " n=" + std::to_string(n) +
                                          " seed=" + std::to_string(seed);
                o.require(same_table(ricci(*rep.connection).entries(), r.entries(), D - 1),
                          "ricci residual " + where);
                if (tag == ConstructionTag::TraceFreeTorsion) {
                    o.require(table_zero(torsion_trace(*rep.connection).entries(), D), "tau " + where);
                }
                if (tag == ConstructionTag::TorsionFree) {
                    o.require(rep.connection->lower_indices_symmetric(), "symmetry " + where);
                }
            }
        }
    }
    return o;
}

Outcome round_trips() {
    Outcome o;
    const int n = 3, D = 4;
    for (ConstructionTag tag :
         {ConstructionTag::General, ConstructionTag::TraceFreeTorsion, ConstructionTag::TorsionFree}) {
        for (std::uint64_t seed = 1; seed <= 5; ++seed) {
            const Connection c0 =
                tag == ConstructionTag::TraceFreeTorsion
                    ? random_trace_free_connection(seed, n, D, {})
                    : random_connection(seed, n, D, {}, tag == ConstructionTag::TorsionFree);
            const BuildReport rep =
                build_prescribed_ricci(tag, ricci(c0), extract_prescribed_ricci_data(tag, c0));
            o.require(same_table(rep.connection->table().entries(), c0.table().entries(), D),
                      tag_name(tag) + " seed=" + std::to_string(seed));
        }
    }
    return o;
}

Outcome closedness_gate() {
    Outcome o;
    const int D = 4;
    Bilinear r(3, D);
    r.at(0, 1) = Jet::variable(3, D, 2);
    r.at(1, 0) = -Jet::variable(3, D, 2);
    const FreeData fd = zero_free_data(census(ConstructionTag::TorsionFree, 3), D);
    std::string reason = "accepted";
    try {
        build_prescribed_ricci_torsion_free(r, fd);
    } catch (const PreconditionError& e) {
        reason = e.reason();
    }
    o.require(reason == "antisymmetric-part-not-closed", "non-closed input gave " + reason);
    r.at(0, 2) = Jet::variable(3, D, 1);
    r.at(2, 0) = -Jet::variable(3, D, 1);
    try {
        const BuildReport rep = build_prescribed_ricci_torsion_free(r, fd);
        o.require(same_table(ricci(*rep.connection).entries(), r.entries(), D - 1),
                  "closed input residual");
    } catch (const Error& e) {
        o.require(false, std::string("closed input rejected: ") + e.reason());
    }
    return o;
}

Outcome local_consequence() {
    Outcome o;
    const int D = 4;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Connection c = random_connection(seed, 3, D, {}, true);
        const TwoForm a = split(ricci(c)).second;
        const TwoForm curl = antisymmetrized_derivative(divergence_form(c));
        o.require(same_table(a.as_bilinear().entries(), curl.as_bilinear().entries(), D - 1),
                  "curl identity seed=" + std::to_string(seed));
        o.require(two_form_closed(a, D - 2), "closedness seed=" + std::to_string(seed));
    }
    return o;
}

Outcome metric_2d() {
    Outcome o;
    const int D = 5;
    const Jet e2 = exp_jet(Rational(2) * Jet::variable(2, D, 0));
    Bilinear hyp(2, D);
    hyp.at(0, 0) = Jet::constant(2, D, -1);
    hyp.at(1, 1) = -e2;
    const BuildReport h = build_metric_2d_prescribed_ricci(hyp, SliceJet::constant(2, D, -1),
                                                           SliceJet::zero(2, D));
    o.require(identical(*h.conformal_factor, Jet::constant(2, D, -1)), "hyperbolic h != -1");
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Bilinear r = random_diagonal_nondegenerate(seed, D, {});
        Jet phi = restrict_x1(random_poly(seed + 1, 2, D, 3, 3)).values();
        phi.set_coefficient(0, Rational(1 + static_cast<int>(seed % 3)));
        const SliceJet psi = restrict_x1(random_poly(seed + 2, 2, D, 3, 3));
        const BuildReport rep = build_metric_2d_prescribed_ricci(r, SliceJet(phi, 2), psi);
        o.require(same_table(ricci(levi_civita(*rep.metric)).entries(), r.entries(), D - 2),
                  "residual seed=" + std::to_string(seed));
    }
    return o;
}

Outcome statistical() {
    Outcome o;
    const int D = 4;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        const std::string s = " seed=" + std::to_string(seed);
        const Connection c = random_connection(seed, 2, D, {}, false);
        const FreeData fd2 = random_free_data(census(ConstructionTag::Statistical2d, 2), seed, D, {});
        const BuildReport a = build_statistical_2d(c, fd2.functions.at("g:1,1"),
                                                   fd2.slices.at("g:1,2"), fd2.slices.at("g:2,2"));
        o.require(is_codazzi(c, *a.metric, D - 1), "2d codazzi" + s);
        o.require(a.metric->normalized_at_zero(), "2d g(0)" + s);

        const BuildReport b = build_statistical_nd(
            3, D, random_free_data(census(ConstructionTag::Statistical, 3), seed, D, {2, 2}));
        o.require(is_codazzi(*b.connection, *b.metric, D - 1), "3d codazzi" + s);
        o.require(b.metric->normalized_at_zero(), "3d g(0)" + s);

        const Metric g2 = random_normalized_metric(seed, 2, D, {});
        const Connection lc2 = levi_civita(g2);
        const FreeData e2 = extract_statistical_data(ConstructionTag::Statistical2d, g2, lc2);
        const BuildReport r2 = build_statistical_2d(lc2, e2.functions.at("g:1,1"),
                                                    e2.slices.at("g:1,2"), e2.slices.at("g:2,2"));
        o.require(same_table(r2.metric->components().entries(), g2.components().entries(), D),
                  "2d round trip" + s);

        const Metric g3 = random_normalized_metric(seed, 3, D, {});
        const Connection lc3 = levi_civita(g3);
        const BuildReport r3 = build_statistical_nd(
            3, D, extract_statistical_data(ConstructionTag::Statistical, g3, lc3));
        o.require(same_table(r3.metric->components().entries(), g3.components().entries(), D) &&
                      same_table(r3.connection->table().entries(), lc3.table().entries(), D),
                  "3d round trip" + s);

        const BuildReport t = build_trace_free_statistical_2d(lc2, e2.slices.at("g:1,2"),
                                                              e2.slices.at("g:2,2"));
        const Metric& g = *t.metric;
        o.require(equal_to_order(g.at(0, 0) * g.at(1, 1) - g.at(0, 1) * g.at(0, 1),
                                 *t.volume * *t.volume, D),
                  "det g = nu^2" + s);
        o.require(is_codazzi(lc2, g, D - 1), "trace-free codazzi" + s);
    }
    Bilinear r(2, D);
    r.at(0, 1) = Jet::constant(2, D, 1);
    r.at(1, 0) = Jet::constant(2, D, -1);
    const Connection bad = *build_prescribed_ricci_torsion_free(
                                r, zero_free_data(census(ConstructionTag::TorsionFree, 2), D))
                                .connection;
    std::string reason = "accepted";
    try {
        build_trace_free_statistical_2d(bad, SliceJet::zero(2, D), SliceJet::constant(2, D, 1));
    } catch (const PreconditionError& e) {
        reason = e.reason();
    }
    o.require(reason == "ricci-not-symmetric", "non-symmetric Ricci gave " + reason);
    return o;
}

Outcome jet_properties() {
    Outcome o;
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dn(1, 4), dc(1, 5);
    constexpr int kCases = 500;
    for (int t = 0; t < kCases && o.ok; ++t) {
        const int n = dn(rng), cap = dc(rng);
        const Jet a = random_poly(rng(), n, cap, cap, 4);
        const Jet b = random_poly(rng(), n, cap, cap, 4);
        const Jet c = random_poly(rng(), n, cap, cap, 4);
        const auto pa = oracle::Poly::from_jet(a), pb = oracle::Poly::from_jet(b);
        o.require(oracle::same_to_order(a + b, pa + pb, cap), "sum vs oracle");
        o.require(oracle::same_to_order(a * b, pa * pb, cap), "product vs oracle");
        o.require(identical(a * b, b * a), "commutativity");
        o.require(equal_to_order((a * b) * c, a * (b * c), cap), "associativity");
        o.require(equal_to_order(a * (b + c), a * b + a * c, cap), "distributivity");
        const int k = static_cast<int>(rng() % static_cast<unsigned>(n));
        o.require(oracle::same_to_order(partial(a, k), pa.partial(k), cap - 1), "partial vs oracle");
        o.require(equal_to_order(partial(antiderivative_x1(a), 0), a, cap - 1), "antiderivative");
        Jet u = a;
        u.set_coefficient(0, Rational(1));
        o.require(equal_to_order(u * reciprocal(u), Jet::constant(n, cap, 1), cap), "reciprocal");
        const Jet z = random_poly_vanishing_at_zero(rng(), n, cap, cap, 3);
        o.require(equal_to_order(exp_jet(z) * exp_jet(-z), Jet::constant(n, cap, 1), cap), "exp");
    }
    return o;
}

Outcome serialization() {
    Outcome o;
    const int D = 3;
    std::vector<BuildReport> reports;
    for (ConstructionTag tag :
         {ConstructionTag::General, ConstructionTag::TraceFreeTorsion, ConstructionTag::TorsionFree}) {
        const Connection c0 = tag == ConstructionTag::TraceFreeTorsion
                                  ? random_trace_free_connection(2, 3, D, {})
                                  : random_connection(2, 3, D, {}, tag == ConstructionTag::TorsionFree);
        reports.push_back(build_prescribed_ricci(tag, ricci(c0), extract_prescribed_ricci_data(tag, c0)));
    }
    reports.push_back(build_metric_2d_prescribed_ricci(random_diagonal_nondegenerate(2, D, {}),
                                                       SliceJet::constant(2, D, 3),
                                                       SliceJet::zero(2, D)));
    const Metric g0 = random_normalized_metric(2, 2, D, {});
    const Connection lc = levi_civita(g0);
    reports.push_back(build_statistical_2d(lc, g0.at(0, 0), restrict_x1(g0.at(0, 1)),
                                           restrict_x1(g0.at(1, 1))));
    reports.push_back(
        build_trace_free_statistical_2d(lc, restrict_x1(g0.at(0, 1)), restrict_x1(g0.at(1, 1))));
    reports.push_back(
        build_statistical_nd(3, D, random_free_data(census(ConstructionTag::Statistical, 3), 2, D, {})));
    for (const auto& rep : reports) {
        const std::string text = dump(to_json(rep));
        const BuildReport back = report_from_json(parse_json(text));
        o.require(dump(to_json(back)) == text, "bytes differ: " + tag_name(rep.construction));
        o.require(verify(back), "re-verify failed: " + tag_name(rep.construction));
    }
    return o;
}

struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "census conformance", 1, census_conformance},
        {2, "CK solver closed forms and recursion oracle", 5, ck_solver_suite},
        {3, "prescribed Ricci residuals", 60, prescribed_ricci_residuals},
        {4, "round-trip reconstruction", 60, round_trips},
        {5, "closedness gate", 60, closedness_gate},
        {6, "antisymmetric Ricci of torsion-free connections", 30, local_consequence},
        {7, "2D metric with prescribed Ricci", 60, metric_2d},
        {8, "statistical structures", 90, statistical},
        {9, "jet arithmetic properties", 30, jet_properties},
        {10, "report serialization", 10, serialization},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (o.ok && secs > c.limit_s) {
            o.ok = false;
            o.detail = "over time limit";
        }
        failures += o.ok ? 0 : 1;
        std::printf("%s %2d %s (%.2f s / %.0f s)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs,
                    c.limit_s, o.ok ? "" : ": ", o.detail.c_str());
    }
    return failures == 0 ? 0 : 1;
}
