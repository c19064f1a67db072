#include "ckgeom/io.hpp"

#include "ckgeom/errors.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace ckgeom {

namespace {

// Runs a reader, turning library and JSON exceptions into FormatError.
template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const FormatError&) {
        throw;
    } catch (const Json::exception& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    } catch (const Error& e) {
        throw FormatError(std::string(what) + ": " + e.what());
    }
}

int read_int(const Json& j, const char* key, int lo, int hi) {
    const Json& v = j.at(key);
    if (!v.is_number_integer()) {
        throw FormatError(std::string("field '") + key + "' must be an integer");
    }
    const auto x = v.get<long long>();
    if (x < lo || x > hi) {
        throw FormatError(std::string("field '") + key + "' out of range");
    }
    return static_cast<int>(x);
}

void require_object(const Json& j, const char* what) {
    if (!j.is_object()) {
        throw FormatError(std::string(what) + " must be a JSON object");
    }
}

std::string pair_key(int i, int j) {
    return std::to_string(i + 1) + "," + std::to_string(j + 1);
}

std::string triple_key(int k, int i, int j) {
    return std::to_string(k + 1) + ";" + pair_key(i, j);
}

void require_workspace(const Jet& jet, int n, int cap, const std::string& where) {
    if (jet.dim() != n || jet.degree_cap() != cap) {
        throw FormatError(where + ": jet lives in another workspace");
    }
}

constexpr int kMaxDim = 64;
constexpr int kMaxDegree = 256;

} // namespace

Json to_json(const Jet& jet) {
    Json coeffs = Json::object();
    const MonomialLayout& layout = jet.layout();
    for (std::size_t i = 0; i < layout.size(); ++i) {
        const Rational& c = jet.coefficient(i);
        if (c != 0) {
            coeffs[to_key(layout.exponents(i))] = to_string(c);
        }
    }
    return Json{{"n", jet.dim()},
                {"D", jet.degree_cap()},
                {"valid_order", jet.valid_order()},
                {"coeffs", std::move(coeffs)}};
}

Jet jet_from_json(const Json& j) {
    return guarded("jet", [&] {
        require_object(j, "jet");
        const int n = read_int(j, "n", 0, kMaxDim);
        const int cap = read_int(j, "D", 0, kMaxDegree);
        const int valid = read_int(j, "valid_order", 0, cap);
        Jet out = Jet::zero(n, cap).with_valid_order(valid);
        const Json& coeffs = j.at("coeffs");
        require_object(coeffs, "coeffs");
        for (const auto& [key, value] : coeffs.items()) {
            const MultiIndex m = parse_key(key);
            if (static_cast<int>(m.exponents.size()) != n || m.total_degree() > cap) {
                throw FormatError("monomial key '" + key + "' does not fit the workspace");
            }
            if (!value.is_string()) {
                throw FormatError("coefficient of '" + key + "' must be a string");
            }
            out.set_coefficient(m.exponents, parse_rational(value.get<std::string>()));
        }
        return out;
    });
}

Json to_json(const SliceJet& slice) {
    Json j = to_json(slice.values());
    j["slice_of"] = slice.target_dim();
    return j;
}

SliceJet slice_from_json(const Json& j) {
    return guarded("slice", [&] {
        require_object(j, "slice");
        const int target = read_int(j, "slice_of", 1, kMaxDim);
        Json values = j;
        values.erase("slice_of");
        Jet v = jet_from_json(values);
        if (v.dim() != target - 1) {
            throw FormatError("slice: n must equal slice_of - 1");
        }
        return SliceJet(std::move(v), target);
    });
}

Json to_json(const Bilinear& b) {
    Json comps = Json::object();
    for (int i = 0; i < b.dim(); ++i) {
        for (int j = 0; j < b.dim(); ++j) {
            comps[pair_key(i, j)] = to_json(b.at(i, j));
        }
    }
    return Json{{"n", b.dim()}, {"D", b.degree_cap()}, {"components", std::move(comps)}};
}

Bilinear bilinear_from_json(const Json& j) {
    return guarded("bilinear", [&] {
        require_object(j, "bilinear");
        const int n = read_int(j, "n", 1, kMaxDim);
        const int cap = read_int(j, "D", 0, kMaxDegree);
        const Json& comps = j.at("components");
        require_object(comps, "components");
        if (comps.size() != static_cast<std::size_t>(n * n)) {
            throw FormatError("bilinear: expected n^2 components");
        }
        Bilinear b(n, cap);
        for (int a = 0; a < n; ++a) {
            for (int c = 0; c < n; ++c) {
                const std::string key = pair_key(a, c);
                Jet jet = jet_from_json(comps.at(key));
                require_workspace(jet, n, cap, "bilinear component " + key);
                b.at(a, c) = std::move(jet);
            }
        }
        return b;
    });
}

Json to_json(const Connection& c) {
    Json comps = Json::object();
    for (int k = 0; k < c.dim(); ++k) {
        for (int i = 0; i < c.dim(); ++i) {
            for (int j = 0; j < c.dim(); ++j) {
                comps[triple_key(k, i, j)] = to_json(c.at(k, i, j));
            }
        }
    }
    return Json{{"n", c.dim()},
                {"D", c.degree_cap()},
                {"symmetric", c.symmetric()},
                {"components", std::move(comps)}};
}

Connection connection_from_json(const Json& j) {
    return guarded("connection", [&] {
        require_object(j, "connection");
        const int n = read_int(j, "n", 1, kMaxDim);
        const int cap = read_int(j, "D", 0, kMaxDegree);
        const bool symmetric = j.at("symmetric").get<bool>();
        const Json& comps = j.at("components");
        require_object(comps, "components");
        if (comps.size() != static_cast<std::size_t>(n * n * n)) {
            throw FormatError("connection: expected n^3 components");
        }
        Connection c(n, cap, false);
        for (int k = 0; k < n; ++k) {
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    const std::string key = triple_key(k, a, b);
                    Jet jet = jet_from_json(comps.at(key));
                    require_workspace(jet, n, cap, "connection component " + key);
                    c.set(k, a, b, jet);
                }
            }
        }
        if (!symmetric) {
            return c;
        }
        for (int k = 0; k < n; ++k) {
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b) {
                    if (!identical(c.at(k, a, b), c.at(k, b, a))) {
                        throw FormatError("connection: flagged symmetric but G^k_ij != G^k_ji");
                    }
                }
            }
        }
        return Connection::symmetric_from(c);
    });
}

Json to_json(const FreeData& fd) {
    Json functions = Json::object();
    for (const auto& [id, jet] : fd.functions) {
        functions[id] = to_json(jet);
    }
    Json slices = Json::object();
    for (const auto& [id, s] : fd.slices) {
        slices[id] = to_json(s);
    }
    return Json{{"functions", std::move(functions)}, {"slices", std::move(slices)}};
}

FreeData free_data_from_json(const Json& j) {
    return guarded("free data", [&] {
        require_object(j, "free data");
        FreeData fd;
        for (const auto& [id, value] : j.at("functions").items()) {
            fd.functions[id] = jet_from_json(value);
        }
        for (const auto& [id, value] : j.at("slices").items()) {
            fd.slices[id] = slice_from_json(value);
        }
        return fd;
    });
}

Json to_json(const BuildReport& r) {
    Json j{{"construction", tag_name(r.construction)},
           {"n", r.dim},
           {"D", r.degree_cap},
           {"free_data", to_json(r.free_data)}};
    if (r.prescribed) {
        j["prescribed"] = to_json(*r.prescribed);
    }
    if (r.connection) {
        j["connection"] = to_json(*r.connection);
    }
    if (r.metric) {
        j["metric"] = to_json(r.metric->components());
    }
    if (r.conformal_factor) {
        j["conformal_factor"] = to_json(*r.conformal_factor);
    }
    if (r.volume) {
        j["volume"] = to_json(*r.volume);
    }
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        checks.push_back(
            Json{{"name", c.name}, {"zero_to_order", c.zero_to_order}, {"passed", c.passed}});
    }
    j["checks"] = std::move(checks);
    return j;
}

BuildReport report_from_json(const Json& j) {
    return guarded("report", [&] {
        require_object(j, "report");
        BuildReport r;
        r.construction = parse_tag(j.at("construction").get<std::string>());
        r.dim = read_int(j, "n", 1, kMaxDim);
        r.degree_cap = read_int(j, "D", 0, kMaxDegree);
        r.free_data = free_data_from_json(j.at("free_data"));
        if (j.contains("prescribed")) {
            r.prescribed = bilinear_from_json(j.at("prescribed"));
        }
        if (j.contains("connection")) {
            r.connection = connection_from_json(j.at("connection"));
        }
        if (j.contains("metric")) {
            r.metric = Metric(bilinear_from_json(j.at("metric")));
        }
        if (j.contains("conformal_factor")) {
            r.conformal_factor = jet_from_json(j.at("conformal_factor"));
        }
        if (j.contains("volume")) {
            r.volume = jet_from_json(j.at("volume"));
        }
        const auto& names = check_names();
        for (const auto& c : j.at("checks")) {
            CheckResult cr{c.at("name").get<std::string>(),
                           read_int(c, "zero_to_order", -1, kMaxDegree),
                           c.at("passed").get<bool>()};
            if (std::find(names.begin(), names.end(), cr.name) == names.end()) {
                throw FormatError("unknown check '" + cr.name + "'");
            }
            r.checks.push_back(std::move(cr));
        }
        return r;
    });
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot read " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error("io-error", "cannot write " + path.string());
    }
    out << text;
}

} // namespace ckgeom
