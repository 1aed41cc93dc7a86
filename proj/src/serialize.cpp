#include "egcd/serialize.hpp"

#include <sstream>

namespace egcd {

namespace {

const nlohmann::json& field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw MalformedTrace(std::string("trace JSON: missing field '") + key + "'");
    }
    return j.at(key);
}

std::string text(const nlohmann::json& j, const char* key) {
    const auto& v = field(j, key);
    if (!v.is_string()) throw MalformedTrace(std::string("trace JSON: field '") + key + "' must be a string");
    return v.get<std::string>();
}

template <class T>
T parse_number(const nlohmann::json& j, const char* key) {
    try {
        return T::parse(text(j, key));
    } catch (const InvalidInput& e) {
        throw MalformedTrace(std::string("trace JSON: field '") + key + "': " + e.what());
    }
}

}  // namespace

nlohmann::json to_json(const BezoutTriple& t) {
    return {{"d", t.d.str()}, {"x", t.x.str()}, {"y", t.y.str()}};
}

nlohmann::json to_json(const EgcdTrace& trace) {
    nlohmann::json steps = nlohmann::json::array();
    for (const TraceRow& row : trace.steps) {
        steps.push_back({{"k", row.k},
                         {"q", row.q ? nlohmann::json(row.q->str()) : nlohmann::json(nullptr)},
                         {"a", row.a.str()},
                         {"b", row.b.str()},
                         {"c", row.c.str()},
                         {"d", row.d.str()},
                         {"e", row.e.str()},
                         {"f", row.f.str()}});
    }
    return {{"alpha", trace.alpha.str()},
            {"beta", trace.beta.str()},
            {"steps", std::move(steps)},
            {"result", to_json(trace.result)}};
}

nlohmann::json to_json(const BenchReport& r) {
    return {{"variant", variant_name(r.variant)},
            {"bits", r.bits},
            {"count", r.count},
            {"total_ns", r.total_ns},
            {"iterations_min", r.iterations_min},
            {"iterations_mean", r.iterations_mean},
            {"iterations_max", r.iterations_max},
            {"seed", r.seed}};
}

EgcdTrace trace_from_json(const nlohmann::json& j) {
    EgcdTrace trace;
    trace.alpha = parse_number<Nat>(j, "alpha");
    trace.beta = parse_number<Nat>(j, "beta");
    const auto& steps = field(j, "steps");
    if (!steps.is_array()) throw MalformedTrace("trace JSON: 'steps' must be an array");
    for (const auto& s : steps) {
        TraceRow row;
        const auto& k = field(s, "k");
        if (!k.is_number_unsigned()) throw MalformedTrace("trace JSON: 'k' must be a non-negative integer");
        row.k = k.get<std::size_t>();
        if (!field(s, "q").is_null()) row.q = parse_number<Int>(s, "q");
        row.a = parse_number<Nat>(s, "a");
        row.b = parse_number<Nat>(s, "b");
        row.c = parse_number<Int>(s, "c");
        row.d = parse_number<Int>(s, "d");
        row.e = parse_number<Int>(s, "e");
        row.f = parse_number<Int>(s, "f");
        trace.steps.push_back(std::move(row));
    }
    const auto& result = field(j, "result");
    trace.result = {parse_number<Nat>(result, "d"), parse_number<Int>(result, "x"),
                    parse_number<Int>(result, "y")};
    return trace;
}

std::string trace_to_csv(const EgcdTrace& trace) {
    std::ostringstream os;
    os << "k,q,a,b,c,d,e,f\n";
    for (const TraceRow& row : trace.steps) {
        os << row.k << ',' << (row.q ? row.q->str() : std::string()) << ',' << row.a << ',' << row.b
           << ',' << row.c << ',' << row.d << ',' << row.e << ',' << row.f << '\n';
    }
    return os.str();
}

}  // namespace egcd
