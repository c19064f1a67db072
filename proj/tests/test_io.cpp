#include "test_support.hpp"

#include "ckgeom/io.hpp"

#include <gtest/gtest.h>

using namespace ckgeom;
using testing_support::jet_of;

TEST(JetJson, Format) {
    const Jet a = jet_of(2, 2, {{{0, 0}, 1}, {{1, 1}, Rational(-3, 4)}});
    const Json j = to_json(a);
    EXPECT_EQ(j.at("n"), 2);
    EXPECT_EQ(j.at("D"), 2);
    EXPECT_EQ(j.at("valid_order"), 2);
    EXPECT_EQ(j.at("coeffs").size(), 2U);
    EXPECT_EQ(j.at("coeffs").at("0 0"), "1/1");
    EXPECT_EQ(j.at("coeffs").at("1 1"), "-3/4");
}

TEST(JetJson, RoundTrip) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Jet a = scale(Rational(1, static_cast<long>(seed)), random_poly(seed, 3, 4, 4, 9))
                          .with_valid_order(static_cast<int>(seed % 5));
        const Jet b = jet_from_json(parse_json(dump(to_json(a))));
        EXPECT_TRUE(identical(a, b));
        EXPECT_EQ(dump(to_json(a)), dump(to_json(b)));
    }
}

TEST(JetJson, RejectsMalformed) {
    const char* bad[] = {
        R"({"n": 2, "D": 2, "valid_order": 2})",
        R"({"n": 2, "D": 2, "valid_order": 3, "coeffs": {}})",
        R"({"n": 2, "D": 2, "valid_order": 2, "coeffs": {"1": "1/1"}})",
        R"({"n": 2, "D": 2, "valid_order": 2, "coeffs": {"2 1": "1/1"}})",
        R"({"n": 2, "D": 2, "valid_order": 2, "coeffs": {"1 0": "1/0"}})",
        R"({"n": 2, "D": 2, "valid_order": 2, "coeffs": {"1 0": 1}})",
        R"({"n": "2", "D": 2, "valid_order": 2, "coeffs": {}})",
        R"([1, 2])",
    };
    for (const char* text : bad) {
        EXPECT_THROW(jet_from_json(parse_json(text)), FormatError) << text;
    }
    EXPECT_THROW(parse_json("{"), FormatError);
}

TEST(SliceJson, RoundTrip) {
    const SliceJet s = restrict_x1(random_poly(3, 3, 4, 3, 3));
    const SliceJet t = slice_from_json(to_json(s));
    EXPECT_EQ(t.target_dim(), 3);
    EXPECT_TRUE(identical(s.values(), t.values()));
}

TEST(ConnectionJson, RoundTrip) {
    const Connection c = random_connection(4, 3, 3, {}, false);
    const Json j = to_json(c);
    EXPECT_EQ(j.at("components").size(), 27U);
    EXPECT_TRUE(j.at("components").contains("1;2,3"));
    const Connection d = connection_from_json(j);
    EXPECT_FALSE(d.symmetric());
    EXPECT_EQ(dump(to_json(d)), dump(j));
}

TEST(ConnectionJson, SymmetricFlagIsChecked) {
    Json j = to_json(random_connection(4, 2, 3, {}, false));
    j["symmetric"] = true;
    EXPECT_THROW(connection_from_json(j), Error);
}

TEST(BilinearJson, RoundTripAndKeys) {
    const Bilinear b = random_bilinear(2, 2, 3, {});
    const Json j = to_json(b);
    EXPECT_TRUE(j.at("components").contains("2,1"));
    EXPECT_EQ(dump(to_json(bilinear_from_json(j))), dump(j));
    Json bad = j;
    bad["components"]["3,1"] = bad["components"]["1,1"];
    EXPECT_THROW(bilinear_from_json(bad), FormatError);
}

TEST(ReportJson, EveryConstructionRoundTrips) {
    std::vector<BuildReport> reports;
    const int D = 3;
    for (ConstructionTag tag :
         {ConstructionTag::General, ConstructionTag::TraceFreeTorsion, ConstructionTag::TorsionFree}) {
        const Connection c0 = tag == ConstructionTag::TraceFreeTorsion
                                  ? random_trace_free_connection(1, 3, D, {})
                                  : random_connection(1, 3, D, {}, tag == ConstructionTag::TorsionFree);
        reports.push_back(build_prescribed_ricci(tag, ricci(c0), extract_prescribed_ricci_data(tag, c0)));
    }
    reports.push_back(build_metric_2d_prescribed_ricci(random_diagonal_nondegenerate(1, D, {}),
                                                       SliceJet::constant(2, D, 2),
                                                       SliceJet::zero(2, D)));
    const Metric g0 = random_normalized_metric(1, 2, D, {});
    reports.push_back(build_statistical_2d(levi_civita(g0), g0.at(0, 0), restrict_x1(g0.at(0, 1)),
                                           restrict_x1(g0.at(1, 1))));
    reports.push_back(build_trace_free_statistical_2d(levi_civita(g0), restrict_x1(g0.at(0, 1)),
                                                      restrict_x1(g0.at(1, 1))));
    reports.push_back(
        build_statistical_nd(3, D, random_free_data(census(ConstructionTag::Statistical, 3), 1, D, {})));

    for (const auto& rep : reports) {
        const std::string text = dump(to_json(rep));
        const BuildReport back = report_from_json(parse_json(text));
        EXPECT_EQ(dump(to_json(back)), text) << tag_name(rep.construction);
        EXPECT_TRUE(verify(back)) << tag_name(rep.construction);
        EXPECT_EQ(text.back(), '\n');
    }
}

TEST(ReportJson, RejectsMalformed) {
    const BuildReport rep = build_prescribed_ricci_general(
        Bilinear(2, 2), zero_free_data(census(ConstructionTag::General, 2), 2));
    Json j = to_json(rep);
    j.erase("checks");
    EXPECT_THROW(report_from_json(j), FormatError);
    j = to_json(rep);
    j["checks"][0]["zero_to_order"] = "one";
    EXPECT_THROW(report_from_json(j), FormatError);
}
