#include "ckgeom_cli/scenario.hpp"

#include "ckgeom/errors.hpp"

#include <set>

namespace ckgeom::cli {

namespace {

const std::set<std::string> kKeys{"construction", "n",          "D",          "seed",  "prescribed",
                                  "reference",    "free_data",  "connection", "output"};

int int_field(const Json& j, const char* key, int lo, int hi) {
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > hi) {
        throw FormatError(std::string("scenario: '") + key + "' must be an integer in [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    return v.get<int>();
}

SampleSpec sample_spec(const Json& j) {
    if (!j.is_object()) {
        throw FormatError("scenario: sampling parameters must be an object");
    }
    SampleSpec spec;
    if (j.contains("degree")) {
        spec.degree = int_field(j, "degree", 0, 64);
    }
    if (j.contains("coeff_bound")) {
        spec.coeff_bound = int_field(j, "coeff_bound", 0, 1000000);
    }
    return spec;
}

bool symmetric_flag(const Json& j) {
    return j.contains("symmetric") && j.at("symmetric").get<bool>();
}

bool is_prescribed_ricci(ConstructionTag t) {
    return t == ConstructionTag::General || t == ConstructionTag::TraceFreeTorsion ||
           t == ConstructionTag::TorsionFree;
}

bool is_statistical_2d(ConstructionTag t) {
    return t == ConstructionTag::Statistical2d || t == ConstructionTag::TraceFreeStatistical2d;
}

// Single-key object {"random": ...} or {"inline": ...}; returns the key.
std::string variant_key(const Json& j, const char* what) {
    if (!j.is_object() || j.size() != 1) {
        throw FormatError(std::string("scenario: '") + what +
                          "' must be \"zero\" or an object with one key");
    }
    const std::string key = j.begin().key();
    if (key != "random" && key != "inline") {
        throw FormatError(std::string("scenario: unknown '") + what + "' variant '" + key + "'");
    }
    return key;
}

Bilinear prescribed_tensor(const Scenario& s) {
    const int n = s.dim;
    const int cap = s.degree_cap;
    const Json& p = s.prescribed;
    if (p.is_null() || (p.is_string() && p.get<std::string>() == "zero")) {
        return Bilinear(n, cap);
    }
    if (p.is_string()) {
        throw FormatError("scenario: unknown prescribed policy '" + p.get<std::string>() + "'");
    }
    const std::string key = variant_key(p, "prescribed");
    const Json& body = p.at(key);
    if (key == "inline") {
        Bilinear r = bilinear_from_json(body);
        if (r.dim() != n || r.degree_cap() != cap) {
            throw FormatError("scenario: inline prescribed tensor does not match n and D");
        }
        return r;
    }
    const SampleSpec spec = sample_spec(body);
    if (s.construction == ConstructionTag::Metric2d) {
        return random_diagonal_nondegenerate(s.seed, cap, spec);
    }
    Bilinear r = random_bilinear(s.seed, n, cap, spec);
    if (symmetric_flag(body)) {
        r = split(r).first;
    }
    return r;
}

Connection given_connection(const Scenario& s, const std::optional<Metric>& reference) {
    const Json& c = s.connection;
    if (c.is_null()) {
        return reference ? levi_civita(*reference) : Connection(s.dim, s.degree_cap, true);
    }
    if (c.is_string()) {
        if (c.get<std::string>() != "zero") {
            throw FormatError("scenario: unknown connection policy '" + c.get<std::string>() + "'");
        }
        return Connection(s.dim, s.degree_cap, true);
    }
    const std::string key = variant_key(c, "connection");
    const Json& body = c.at(key);
    if (key == "inline") {
        Connection conn = connection_from_json(body);
        if (conn.dim() != s.dim || conn.degree_cap() != s.degree_cap) {
            throw FormatError("scenario: inline connection does not match n and D");
        }
        return conn;
    }
    return random_connection(s.seed * 4 + 2, s.dim, s.degree_cap, sample_spec(body),
                             symmetric_flag(body));
}

FreeData free_data(const Scenario& s, const Census& census_n) {
    const Json& f = s.free_data;
    std::string policy = "zero";
    const Json* slots = nullptr;
    if (f.is_string()) {
        policy = f.get<std::string>();
    } else if (f.is_object()) {
        for (const auto& [key, value] : f.items()) {
            if (key != "default" && key != "slots") {
                throw FormatError("scenario: unknown free_data key '" + key + "'");
            }
        }
        if (f.contains("default")) {
            policy = f.at("default").get<std::string>();
        }
        if (f.contains("slots")) {
            slots = &f.at("slots");
        }
    } else if (!f.is_null()) {
        throw FormatError("scenario: free_data must be a string or an object");
    }
    FreeData fd;
    if (policy == "zero") {
        fd = zero_free_data(census_n, s.degree_cap);
    } else if (policy == "random") {
        fd = random_free_data(census_n, s.seed * 4 + 1, s.degree_cap, SampleSpec{});
    } else {
        throw FormatError("scenario: unknown free_data policy '" + policy + "'");
    }
    if (slots == nullptr) {
        return fd;
    }
    for (const auto& [id, value] : slots->items()) {
        if (fd.functions.count(id) != 0 || id == kGaugeSlot) {
            fd.functions[id] = jet_from_json(value);
        } else if (fd.slices.count(id) != 0) {
            fd.slices[id] = slice_from_json(value);
        } else {
            throw FormatError("scenario: '" + id + "' is not a slot of " +
                              tag_name(s.construction));
        }
    }
    return fd;
}

} // namespace

Scenario parse_scenario(const Json& j) {
    if (!j.is_object()) {
        throw FormatError("scenario must be a JSON object");
    }
    for (const auto& [key, value] : j.items()) {
        if (kKeys.count(key) == 0) {
            throw FormatError("scenario: unknown key '" + key + "'");
        }
    }
    try {
        Scenario s;
        try {
            s.construction = parse_tag(j.at("construction").get<std::string>());
        } catch (const PreconditionError& e) {
            throw FormatError(std::string("scenario: ") + e.what());
        }
        s.dim = int_field(j, "n", 1, 16);
        s.degree_cap = int_field(j, "D", 2, 32);
        if (j.contains("seed")) {
            const Json& seed = j.at("seed");
            if (!seed.is_number_unsigned()) {
                throw FormatError("scenario: 'seed' must be a non-negative integer");
            }
            s.seed = seed.get<std::uint64_t>();
        }
        s.prescribed = j.value("prescribed", Json());
        s.free_data = j.value("free_data", Json());
        s.connection = j.value("connection", Json());
        if (j.contains("reference")) {
            s.reference = sample_spec(j.at("reference"));
            if (!s.prescribed.is_null() || !s.free_data.is_null()) {
                throw FormatError("scenario: 'reference' excludes 'prescribed' and 'free_data'");
            }
            if (s.construction == ConstructionTag::Metric2d) {
                throw FormatError("scenario: 'reference' is not available for metric-2d");
            }
        }
        if (!s.connection.is_null() && !is_statistical_2d(s.construction)) {
            throw FormatError("scenario: 'connection' only applies to the 2D statistical builders");
        }
        if (!s.prescribed.is_null() && !is_prescribed_ricci(s.construction) &&
            s.construction != ConstructionTag::Metric2d) {
            throw FormatError("scenario: 'prescribed' does not apply to " +
                              tag_name(s.construction));
        }
        s.output = j.value("output", std::string());
        return s;
    } catch (const Json::exception& e) {
        throw FormatError(std::string("scenario: ") + e.what());
    }
}

BuildReport run_scenario(const Scenario& s) {
    const Census census_n = census(s.construction, s.dim);
    const int n = s.dim;
    const int cap = s.degree_cap;

    if (is_prescribed_ricci(s.construction)) {
        if (s.reference) {
            Connection ref;
            if (s.construction == ConstructionTag::TraceFreeTorsion) {
                ref = random_trace_free_connection(s.seed, n, cap, *s.reference);
            } else {
                ref = random_connection(s.seed, n, cap, *s.reference,
                                        s.construction == ConstructionTag::TorsionFree);
            }
            return build_prescribed_ricci(s.construction, ricci(ref),
                                          extract_prescribed_ricci_data(s.construction, ref));
        }
        return build_prescribed_ricci(s.construction, prescribed_tensor(s), free_data(s, census_n));
    }

    if (s.construction == ConstructionTag::Metric2d) {
        const FreeData fd = free_data(s, census_n);
        return build_metric_2d_prescribed_ricci(prescribed_tensor(s), fd.slices.at(kConformalSlot),
                                                fd.slices.at(kConformalDerivativeSlot));
    }

    std::optional<Metric> reference;
    FreeData fd;
    if (s.reference) {
        reference = random_normalized_metric(s.seed, n, cap, *s.reference);
    }
    if (s.construction == ConstructionTag::Statistical) {
        if (reference) {
            fd = extract_statistical_data(s.construction, *reference, levi_civita(*reference));
        } else {
            fd = free_data(s, census_n);
        }
        return build_statistical_nd(n, cap, fd);
    }

    const Connection c = given_connection(s, reference);
    fd = reference ? extract_statistical_data(s.construction, *reference, c) : free_data(s, census_n);
    const SliceJet& s12 = fd.slices.at(metric_slot(0, 1));
    const SliceJet& s22 = fd.slices.at(metric_slot(1, 1));
    if (s.construction == ConstructionTag::Statistical2d) {
        return build_statistical_2d(c, fd.functions.at(metric_slot(0, 0)), s12, s22);
    }
    return build_trace_free_statistical_2d(c, s12, s22);
}

} // namespace ckgeom::cli
