#include "tclass/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <regex>
#include <set>

#include "tclass/error.hpp"

namespace tclass::io {

namespace {

[[noreturn]] void invalid(const std::string& detail) {
    throw Error(ErrorCode::InvalidInput, detail);
}

void reject_unknown_fields(const Json& doc, const std::set<std::string>& allowed,
                           std::string_view what) {
    if (!doc.is_object()) invalid(std::string(what) + " must be a JSON object");
    for (const auto& [key, _] : doc.items()) {
        if (!allowed.contains(key)) {
            invalid("unknown field \"" + key + "\" in " + std::string(what));
        }
    }
}

const Json& required(const Json& doc, const std::string& key, std::string_view what) {
    auto it = doc.find(key);
    if (it == doc.end()) invalid("missing field \"" + key + "\" in " + std::string(what));
    return *it;
}

int integer_field(const Json& doc, const std::string& key, std::string_view what) {
    const Json& v = required(doc, key, what);
    if (!v.is_number_integer()) invalid("field \"" + key + "\" must be an integer");
    const auto value = v.get<long long>();
    if (value < std::numeric_limits<int>::min() || value > std::numeric_limits<int>::max()) {
        throw Error(ErrorCode::ParameterOutOfRange, "field \"" + key + "\" is out of range");
    }
    return static_cast<int>(value);
}

double real_field(const Json& v, const std::string& key) {
    if (!v.is_number()) invalid("field \"" + key + "\" must be a number");
    return v.get<double>();
}

std::string index_key(int k) { return std::to_string(k); }

}  // namespace

double round_sig(double x) {
    if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.10g", x);
    const double rounded = std::strtod(buffer, nullptr);
    return rounded == 0.0 ? 0.0 : rounded;
}

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round_sig(x);
}

NegCoeffSeries series_from_json(const Json& doc) {
    constexpr std::string_view what = "series";
    reject_unknown_fields(doc, {"j", "terms"}, what);
    const int j = integer_field(doc, "j", what);
    const Json& terms = required(doc, "terms", what);
    if (!terms.is_object()) invalid("\"terms\" must be an object mapping index to coefficient");

    static const std::regex kIndex("^[+-]?[0-9]{1,9}$");
    std::map<int, double> out;
    for (const auto& [key, value] : terms.items()) {
        if (!std::regex_match(key, kIndex)) invalid("term key \"" + key + "\" is not an integer");
        out[std::stoi(key)] = real_field(value, key);
    }
    return NegCoeffSeries(j, std::move(out));
}

Json series_to_json(const NegCoeffSeries& f) {
    // Coefficients keep full precision so a written series reads back to the
    // same value.
    Json terms = Json::object();
    for (const auto& [k, a] : f.terms()) terms[index_key(k)] = a;
    return Json{{"j", f.gap()}, {"terms", std::move(terms)}};
}

ClassParams params_from_json(const Json& doc) {
    constexpr std::string_view what = "params";
    reject_unknown_fields(doc, {"n", "m", "beta", "j", "mode"}, what);
    ClassParams p;
    p.n = integer_field(doc, "n", what);
    p.m = integer_field(doc, "m", what);
    p.beta = real_field(required(doc, "beta", what), "beta");
    p.j = integer_field(doc, "j", what);
    const Json& mode = required(doc, "mode", what);
    if (!mode.is_string()) invalid("field \"mode\" must be a string");
    p.mode = mode_from_string(mode.get<std::string>());
    validate(p);
    return p;
}

Json params_to_json(const ClassParams& p) {
    return Json{{"n", p.n},
                {"m", p.m},
                {"beta", number(p.beta)},
                {"j", p.j},
                {"mode", std::string(to_string(p.mode))}};
}

std::string_view to_string(OperatorMode mode) {
    return mode == OperatorMode::integral ? "integral" : "dual";
}

OperatorMode mode_from_string(std::string_view s) {
    if (s == "integral") return OperatorMode::integral;
    if (s == "dual") return OperatorMode::dual;
    invalid("mode must be \"integral\" or \"dual\"");
}

std::string_view to_string(RadiusKind kind) {
    switch (kind) {
        case RadiusKind::close_to_convex: return "close_to_convex";
        case RadiusKind::starlike: return "starlike";
        case RadiusKind::convex: return "convex";
    }
    return "";
}

RadiusKind radius_kind_from_string(std::string_view s) {
    if (s == "close_to_convex") return RadiusKind::close_to_convex;
    if (s == "starlike") return RadiusKind::starlike;
    if (s == "convex") return RadiusKind::convex;
    invalid("radius kind must be close_to_convex, starlike or convex");
}

std::string_view to_string(ProductKind kind) {
    switch (kind) {
        case ProductKind::gamma: return "gamma";
        case ProductKind::xi: return "xi";
        case ProductKind::delta: return "delta";
        case ProductKind::alpha: return "alpha";
    }
    return "";
}

ProductKind product_kind_from_string(std::string_view s) {
    if (s == "gamma") return ProductKind::gamma;
    if (s == "xi") return ProductKind::xi;
    if (s == "delta") return ProductKind::delta;
    if (s == "alpha") return ProductKind::alpha;
    invalid("product kind must be gamma, xi, delta or alpha");
}

std::string_view to_string(TailVerdict verdict) {
    switch (verdict) {
        case TailVerdict::positive: return "positive";
        case TailVerdict::negative: return "negative";
        case TailVerdict::inconclusive: return "inconclusive";
    }
    return "";
}

Json to_json(const Deficiency& d) {
    return Json{{"sigma", number(d.sigma)}, {"member", d.member}};
}

Json to_json(const Decomposition& d) {
    Json mus = Json::object();
    for (const auto& [k, mu] : d.mus) mus[index_key(k)] = number(mu);
    return Json{{"mu_j", number(d.mu_j)}, {"mus", std::move(mus)}};
}

Json to_json(const ProductParamResult& r) {
    Json out{{"kind", std::string(to_string(r.kind))}, {"printed", number(r.printed_value)}};
    out["derived"] = r.derived_value ? number(*r.derived_value) : Json(nullptr);
    out["attained_k"] = r.attained_k ? Json(*r.attained_k) : Json(nullptr);
    out["feasible"] = r.feasible;
    return out;
}

Json to_json(RadiusKind kind, const RadiusResult& r) {
    return Json{{"kind", std::string(to_string(kind))},
                {"value", number(r.value)},
                {"attained_k", r.attained_k},
                {"scanned_to", r.scanned_to},
                {"clipped", r.clipped}};
}

Json to_json(const DistortionEnvelope& e) {
    return Json{{"lower", number(e.lower)},
                {"upper", number(e.upper)},
                {"r", number(e.r)},
                {"i", e.i},
                {"vacuous_lower", e.vacuous_lower}};
}

Json to_json(const MarginReport& m) {
    return Json{{"margin", number(m.margin)},
                {"worst_z", Json{{"re", number(m.worst_z.real())}, {"im", number(m.worst_z.imag())}}},
                {"degenerate_samples", m.degenerate_samples}};
}

Json to_json(const ValidityReport& v) {
    Json out{{"valid", v.valid}};
    out["first_failure_k"] = v.first_failure_k ? Json(*v.first_failure_k) : Json(nullptr);
    out["scanned_to"] = v.scanned_to;
    out["tail_verdict"] = std::string(to_string(v.tail_verdict));
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) invalid("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        invalid(path + ": " + e.what());
    }
}

std::string dump(const Json& doc) { return doc.dump(); }

}  // namespace tclass::io
