#include "ckgeom/census.hpp"

#include "ckgeom/errors.hpp"

#include <algorithm>
#include <set>

namespace ckgeom {

namespace {

struct TagEntry {
    ConstructionTag tag;
    std::string name;
};

const std::vector<TagEntry>& tag_table() {
    static const std::vector<TagEntry> table{
        {ConstructionTag::General, "general"},
        {ConstructionTag::TraceFreeTorsion, "trace-free-torsion"},
        {ConstructionTag::TorsionFree, "torsion-free"},
        {ConstructionTag::Metric2d, "metric-2d"},
        {ConstructionTag::Statistical2d, "statistical-2d"},
        {ConstructionTag::TraceFreeStatistical2d, "trace-free-statistical-2d"},
        {ConstructionTag::Statistical, "statistical"},
    };
    return table;
}

[[noreturn]] void unsupported(ConstructionTag tag, int n) {
    throw PreconditionError("unsupported-construction",
                            tag_name(tag) + " is not defined for n=" + std::to_string(n));
}

// Slots Gamma^k_ij over all (k, i, j); with `symmetric` only i <= j.
std::vector<std::string> gamma_slots(int n, bool symmetric) {
    std::vector<std::string> out;
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = symmetric ? i : 0; j < n; ++j) {
                out.push_back(gamma_slot(k, i, j));
            }
        }
    }
    return out;
}

std::vector<std::string> without(const std::vector<std::string>& all,
                                 const std::vector<std::string>& a,
                                 const std::vector<std::string>& b = {}) {
    std::set<std::string> drop(a.begin(), a.end());
    drop.insert(b.begin(), b.end());
    std::vector<std::string> out;
    std::copy_if(all.begin(), all.end(), std::back_inserter(out),
                 [&](const std::string& s) { return drop.count(s) == 0; });
    return out;
}

std::vector<std::string> prescribed_ricci_unknowns(int n) {
    std::vector<std::string> u;
    for (int j = 0; j < n; ++j) {
        u.push_back(gamma_slot(n - 1, n - 1, j));
    }
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            u.push_back(gamma_slot(0, i, j));
        }
    }
    return u;
}

std::vector<std::string> metric_unknowns(int n) {
    std::vector<std::string> u;
    for (int j = 0; j < n; ++j) {
        for (int k = 0; k <= j; ++k) {
            if (j != 0 || k != 0) {
                u.push_back(metric_slot(k, j));
            }
        }
    }
    return u;
}

} // namespace

const std::string& tag_name(ConstructionTag tag) {
    for (const auto& e : tag_table()) {
        if (e.tag == tag) {
            return e.name;
        }
    }
    throw PreconditionError("unsupported-construction", "unknown construction tag");
}

ConstructionTag parse_tag(const std::string& name) {
    for (const auto& e : tag_table()) {
        if (e.name == name) {
            return e.tag;
        }
    }
    throw PreconditionError("unsupported-construction", "unknown construction '" + name + "'");
}

const std::vector<ConstructionTag>& all_tags() {
    static const std::vector<ConstructionTag> tags = [] {
        std::vector<ConstructionTag> t;
        for (const auto& e : tag_table()) {
            t.push_back(e.tag);
        }
        return t;
    }();
    return tags;
}

std::string gamma_slot(int k, int i, int j) {
    return "Gamma:" + std::to_string(k + 1) + ";" + std::to_string(i + 1) + "," +
           std::to_string(j + 1);
}

std::string metric_slot(int i, int j) {
    if (i > j) {
        std::swap(i, j);
    }
    return "g:" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

namespace {

// Parses "a,b,.." of positive integers into 0-based indices.
template <std::size_t N>
std::optional<std::array<int, N>> parse_indices(const std::string& text, char sep0) {
    std::array<int, N> out{};
    std::size_t pos = 0;
    for (std::size_t r = 0; r < N; ++r) {
        const char sep = r + 1 == N ? '\0' : (r == 0 ? sep0 : ',');
        std::size_t end = sep == '\0' ? text.size() : text.find(sep, pos);
        if (end == std::string::npos || end == pos) {
            return std::nullopt;
        }
        int v = 0;
        for (std::size_t q = pos; q < end; ++q) {
            if (text[q] < '0' || text[q] > '9' || v > 1000) {
                return std::nullopt;
            }
            v = v * 10 + (text[q] - '0');
        }
        if (v < 1) {
            return std::nullopt;
        }
        out[r] = v - 1;
        pos = end + 1;
    }
    return out;
}

} // namespace

std::optional<std::array<int, 3>> parse_gamma_slot(const std::string& id) {
    if (id.rfind("Gamma:", 0) != 0) {
        return std::nullopt;
    }
    return parse_indices<3>(id.substr(6), ';');
}

std::optional<std::array<int, 2>> parse_metric_slot(const std::string& id) {
    if (id.rfind("g:", 0) != 0) {
        return std::nullopt;
    }
    return parse_indices<2>(id.substr(2), ',');
}

Census census(ConstructionTag tag, int n) {
    Census c;
    c.tag = tag;
    c.dim = n;
    if (n < 2) {
        unsupported(tag, n);
    }
    switch (tag) {
    case ConstructionTag::General:
        c.ck_unknowns = prescribed_ricci_unknowns(n);
        c.free_functions = without(gamma_slots(n, false), c.ck_unknowns);
        break;
    case ConstructionTag::TraceFreeTorsion:
        if (n < 3) {
            unsupported(tag, n);
        }
        c.ck_unknowns = prescribed_ricci_unknowns(n);
        for (int k = 0; k + 1 < n; ++k) {
            c.determined.push_back(gamma_slot(k + 1, k, k + 1));
        }
        c.determined.push_back(gamma_slot(n - 2, n - 1, n - 2));
        c.free_functions = without(gamma_slots(n, false), c.ck_unknowns, c.determined);
        break;
    case ConstructionTag::TorsionFree:
        c.ck_unknowns.push_back(gamma_slot(1, 0, 1));
        for (int i = 1; i < n; ++i) {
            c.ck_unknowns.push_back(gamma_slot(0, 0, i));
        }
        for (int i = 1; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                c.ck_unknowns.push_back(gamma_slot(0, i, j));
            }
        }
        for (int k = 0; k < n; ++k) {
            c.determined.push_back(gamma_slot(k, k, k));
        }
        c.free_functions = without(gamma_slots(n, true), c.ck_unknowns, c.determined);
        c.free_functions.push_back(kGaugeSlot);
        break;
    case ConstructionTag::Metric2d:
        if (n != 2) {
            unsupported(tag, n);
        }
        c.ck_unknowns = {kConformalSlot};
        c.initial_slices = {kConformalSlot, kConformalDerivativeSlot};
        return c;
    case ConstructionTag::Statistical2d:
        if (n != 2) {
            unsupported(tag, n);
        }
        c.free_functions = {metric_slot(0, 0)};
        c.ck_unknowns = metric_unknowns(n);
        break;
    case ConstructionTag::TraceFreeStatistical2d:
        if (n != 2) {
            unsupported(tag, n);
        }
        c.ck_unknowns = metric_unknowns(n);
        c.determined = {metric_slot(0, 0)};
        break;
    case ConstructionTag::Statistical:
        if (n < 3) {
            unsupported(tag, n);
        }
        c.ck_unknowns = metric_unknowns(n);
        // Gamma^j_1k, 1 < k < j
        for (int j = 1; j < n; ++j) {
            for (int k = 1; k < j; ++k) {
                c.determined.push_back(gamma_slot(j, 0, k));
            }
        }
        // Gamma^j_ii, i, j >= 2, j != i
        for (int i = 1; i < n; ++i) {
            for (int j = 1; j < n; ++j) {
                if (j != i) {
                    c.determined.push_back(gamma_slot(j, i, i));
                }
            }
        }
        // Gamma^j_ik, 2 <= i < j, k not in {i, j}, i < k
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                for (int k = i + 1; k < n; ++k) {
                    if (k != j) {
                        c.determined.push_back(gamma_slot(j, i, k));
                    }
                }
            }
        }
        c.free_functions = without(gamma_slots(n, true), c.determined);
        c.free_functions.push_back(metric_slot(0, 0));
        break;
    }
    c.initial_slices = c.ck_unknowns;
    return c;
}

void check_free_data(const Census& c, int degree_cap, const FreeData& fd) {
    auto mismatch = [&](const std::string& what) {
        throw PreconditionError("slot-mismatch", tag_name(c.tag) + ": " + what);
    };
    std::set<std::string> expected(c.free_functions.begin(), c.free_functions.end());
    std::set<std::string> got;
    for (const auto& [id, jet] : fd.functions) {
        got.insert(id);
        if (jet.dim() != c.dim || jet.degree_cap() != degree_cap) {
            throw DimensionMismatch("free function " + id + " lives in another workspace");
        }
    }
    if (c.tag == ConstructionTag::TorsionFree && got.count(kGaugeSlot) == 0) {
        got.insert(kGaugeSlot);
    }
    if (got != expected) {
        for (const auto& id : expected) {
            if (got.count(id) == 0) {
                mismatch("missing free function " + id);
            }
        }
        for (const auto& id : got) {
            if (expected.count(id) == 0) {
                mismatch("unexpected free function " + id);
            }
        }
    }
    std::set<std::string> expected_slices(c.initial_slices.begin(), c.initial_slices.end());
    std::set<std::string> got_slices;
    for (const auto& [id, s] : fd.slices) {
        got_slices.insert(id);
        if (s.target_dim() != c.dim || s.degree_cap() != degree_cap) {
            throw DimensionMismatch("initial slice " + id + " lives in another workspace");
        }
    }
    for (const auto& id : expected_slices) {
        if (got_slices.count(id) == 0) {
            mismatch("missing initial slice " + id);
        }
    }
    for (const auto& id : got_slices) {
        if (expected_slices.count(id) == 0) {
            mismatch("unexpected initial slice " + id);
        }
    }
}

} // namespace ckgeom
