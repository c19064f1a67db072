#include "ckgeom/census.hpp"
#include "ckgeom/errors.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace ckgeom;

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

bool contains(const std::vector<std::string>& v, const std::string& s) {
    return std::find(v.begin(), v.end(), s) != v.end();
}

} // namespace

TEST(Census, GeneralCounts) {
    for (int n = 2; n <= 6; ++n) {
        const Census c = census(ConstructionTag::General, n);
        EXPECT_EQ(c.free_functions.size(), sz(n * n * n - n * n));
        EXPECT_EQ(c.initial_slices.size(), sz(n * n));
        EXPECT_EQ(c.ck_unknowns, c.initial_slices);
    }
    EXPECT_EQ(census(ConstructionTag::General, 3).free_functions.size(), 18U);
    EXPECT_EQ(census(ConstructionTag::General, 3).initial_slices.size(), 9U);
}

TEST(Census, TraceFreeTorsionCounts) {
    for (int n = 3; n <= 6; ++n) {
        const Census c = census(ConstructionTag::TraceFreeTorsion, n);
        EXPECT_EQ(c.free_functions.size(), sz(n * n * n - n * n - n));
        EXPECT_EQ(c.initial_slices.size(), sz(n * n));
        EXPECT_EQ(c.determined.size(), sz(n));
    }
    EXPECT_EQ(census(ConstructionTag::TraceFreeTorsion, 3).free_functions.size(), 15U);
}

TEST(Census, TraceFreeTorsionNeedsThreeDimensions) {
    try {
        census(ConstructionTag::TraceFreeTorsion, 2);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.reason(), "unsupported-construction");
    }
}

TEST(Census, TorsionFreeCounts) {
    for (int n = 2; n <= 6; ++n) {
        const Census c = census(ConstructionTag::TorsionFree, n);
        EXPECT_EQ(c.free_functions.size(), sz((n * n * n - 3 * n) / 2 + 1));
        EXPECT_EQ(c.initial_slices.size(), sz((n * n + n) / 2));
        EXPECT_TRUE(contains(c.free_functions, kGaugeSlot));
    }
    const Census c3 = census(ConstructionTag::TorsionFree, 3);
    EXPECT_EQ(c3.free_functions.size(), 10U);
    EXPECT_EQ(c3.initial_slices.size(), 6U);
}

TEST(Census, TorsionFreeTwoDimensionalFreeSymbol) {
    const Census c = census(ConstructionTag::TorsionFree, 2);
    EXPECT_EQ(c.free_functions, (std::vector<std::string>{"Gamma:2;1,1", "phi"}));
    EXPECT_EQ(c.initial_slices.size(), 3U);
}

TEST(Census, StatisticalCounts) {
    for (int n = 3; n <= 6; ++n) {
        const Census c = census(ConstructionTag::Statistical, n);
        EXPECT_EQ(c.free_functions.size(), sz((n * n * n + 6 * n * n + 5 * n) / 6));
        EXPECT_EQ(c.initial_slices.size(), sz(n * (n + 1) / 2 - 1));
        EXPECT_TRUE(contains(c.free_functions, "g:1,1"));
        // Free plus determined symbols cover every symmetric Christoffel slot.
        EXPECT_EQ(c.free_functions.size() - 1 + c.determined.size(), sz(n * n * (n + 1) / 2));
    }
    EXPECT_EQ(census(ConstructionTag::Statistical, 3).free_functions.size(), 16U);
    EXPECT_EQ(census(ConstructionTag::Statistical, 3).initial_slices.size(), 5U);
    EXPECT_EQ(census(ConstructionTag::Statistical, 4).free_functions.size(), 30U);
    EXPECT_EQ(census(ConstructionTag::Statistical, 4).initial_slices.size(), 9U);
}

TEST(Census, TwoDimensionalBuilders) {
    const Census m = census(ConstructionTag::Metric2d, 2);
    EXPECT_TRUE(m.free_functions.empty());
    EXPECT_EQ(m.initial_slices, (std::vector<std::string>{"h", "h_1"}));
    EXPECT_EQ(census(ConstructionTag::Statistical2d, 2).free_functions,
              (std::vector<std::string>{"g:1,1"}));
    EXPECT_EQ(census(ConstructionTag::Statistical2d, 2).initial_slices.size(), 2U);
    EXPECT_TRUE(census(ConstructionTag::TraceFreeStatistical2d, 2).free_functions.empty());
    EXPECT_THROW(census(ConstructionTag::Metric2d, 3), PreconditionError);
    EXPECT_THROW(census(ConstructionTag::Statistical, 2), PreconditionError);
    EXPECT_THROW(census(ConstructionTag::General, 1), PreconditionError);
}

TEST(Census, SlotListsAreDisjoint) {
    for (ConstructionTag tag : all_tags()) {
        for (int n = 2; n <= 4; ++n) {
            Census c;
            try {
                c = census(tag, n);
            } catch (const PreconditionError&) {
                continue;
            }
            std::set<std::string> seen;
            for (const auto* list : {&c.free_functions, &c.ck_unknowns, &c.determined}) {
                for (const auto& s : *list) {
                    EXPECT_TRUE(seen.insert(s).second) << tag_name(tag) << " " << s;
                }
            }
        }
    }
}

TEST(Census, TagNames) {
    for (ConstructionTag tag : all_tags()) {
        EXPECT_EQ(parse_tag(tag_name(tag)), tag);
    }
    EXPECT_THROW(parse_tag("riemannian"), PreconditionError);
}

TEST(Census, SlotIds) {
    EXPECT_EQ(gamma_slot(2, 0, 1), "Gamma:3;1,2");
    EXPECT_EQ(metric_slot(1, 0), "g:1,2");
    EXPECT_EQ(parse_gamma_slot("Gamma:3;1,2"), (std::array<int, 3>{2, 0, 1}));
    EXPECT_EQ(parse_metric_slot("g:2,2"), (std::array<int, 2>{1, 1}));
    EXPECT_FALSE(parse_gamma_slot("Gamma:0;1,2"));
    EXPECT_FALSE(parse_gamma_slot("Gamma:1,1,2"));
    EXPECT_FALSE(parse_metric_slot("g:1"));
    EXPECT_FALSE(parse_metric_slot("phi"));
}

TEST(FreeDataCheck, SlotMismatch) {
    const Census c = census(ConstructionTag::Statistical2d, 2);
    FreeData fd;
    fd.slices["g:1,2"] = SliceJet::zero(2, 3);
    fd.slices["g:2,2"] = SliceJet::constant(2, 3, 1);
    try {
        check_free_data(c, 3, fd);
        FAIL();
    } catch (const PreconditionError& e) {
        EXPECT_EQ(e.reason(), "slot-mismatch");
    }
    fd.functions["g:1,1"] = Jet::constant(2, 3, 1);
    EXPECT_NO_THROW(check_free_data(c, 3, fd));
    fd.functions["g:1,1"] = Jet::constant(2, 4, 1);
    EXPECT_THROW(check_free_data(c, 3, fd), DimensionMismatch);
}

TEST(FreeDataCheck, GaugeMayBeOmitted) {
    const Census c = census(ConstructionTag::TorsionFree, 2);
    FreeData fd;
    fd.functions["Gamma:2;1,1"] = Jet::zero(2, 3);
    for (const auto& s : c.initial_slices) {
        fd.slices[s] = SliceJet::zero(2, 3);
    }
    EXPECT_NO_THROW(check_free_data(c, 3, fd));
}
