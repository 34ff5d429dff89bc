#include "flatdepth/cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <iostream>
#include <iterator>
#include <limits>
#include <sstream>

namespace flatdepth::cli {

namespace {

void only_keys(const Json& j, const std::string& where, std::initializer_list<std::string_view> allowed) {
    if (!j.is_object()) {
        throw InputError(where, "expected an object");
    }
    for (const auto& item : j.items()) {
        if (std::find(allowed.begin(), allowed.end(), item.key()) == allowed.end()) {
            throw InputError(where.empty() ? item.key() : where + "." + item.key(), "unknown field");
        }
    }
}

const Json& required(const Json& j, const std::string& where, const std::string& key) {
    const auto it = j.find(key);
    if (it == j.end()) {
        throw InputError(where.empty() ? key : where + "." + key, "missing field");
    }
    return *it;
}

std::string join(const std::string& where, const std::string& key) { return where.empty() ? key : where + "." + key; }

std::string index(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

RatVector vector_from_json(const Json& j, const std::string& field, std::optional<std::size_t> arity) {
    if (!j.is_array()) {
        throw InputError(field, "expected an array of numbers");
    }
    if (arity && j.size() != *arity) {
        throw InputError(field, "arity mismatch: got " + std::to_string(j.size()) + " coordinates, expected " +
                                    std::to_string(*arity));
    }
    RatVector out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(rational_from_json(j[i], index(field, i)));
    }
    return out;
}

std::vector<RatVector> vectors_from_json(const Json& j, const std::string& field, std::optional<std::size_t> arity) {
    if (!j.is_array()) {
        throw InputError(field, "expected an array of coordinate arrays");
    }
    std::vector<RatVector> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(vector_from_json(j[i], index(field, i), arity));
    }
    return out;
}

Json vector_to_json(const RatVector& v) {
    Json out = Json::array();
    for (const auto& x : v) {
        out.push_back(rational_to_json(x));
    }
    return out;
}

AffineFlatSpec flat_from_json(const Json& j, const std::string& where, std::size_t d) {
    only_keys(j, where, {"points", "point", "direction", "homogeneous"});
    AffineFlatSpec spec;
    if (j.contains("homogeneous")) {
        if (j.contains("points") || j.contains("point") || j.contains("direction")) {
            throw InputError(where, "homogeneous flats take no affine fields");
        }
        spec.homogeneous = vectors_from_json(j["homogeneous"], join(where, "homogeneous"), d + 1);
        if (spec.homogeneous.empty()) {
            throw InputError(join(where, "homogeneous"), "needs at least one vector");
        }
        return spec;
    }
    if (j.contains("points")) {
        if (j.contains("point") || j.contains("direction")) {
            throw InputError(where, "use either points or point+direction");
        }
        spec.points = vectors_from_json(j["points"], join(where, "points"), d);
        if (spec.points.empty()) {
            throw InputError(join(where, "points"), "needs at least one point");
        }
        return spec;
    }
    spec.points.push_back(vector_from_json(required(j, where, "point"), join(where, "point"), d));
    spec.direction = vector_from_json(required(j, where, "direction"), join(where, "direction"), d);
    return spec;
}

Json flat_to_json(const AffineFlatSpec& spec) {
    Json out = Json::object();
    if (!spec.homogeneous.empty()) {
        Json h = Json::array();
        for (const auto& v : spec.homogeneous) {
            h.push_back(vector_to_json(v));
        }
        out["homogeneous"] = h;
    } else if (spec.direction) {
        out["point"] = vector_to_json(spec.points.front());
        out["direction"] = vector_to_json(*spec.direction);
    } else {
        Json p = Json::array();
        for (const auto& v : spec.points) {
            p.push_back(vector_to_json(v));
        }
        out["points"] = p;
    }
    return out;
}

Query query_from_json(const Json& j, std::size_t d) {
    const std::string where = "query";
    if (!j.is_object()) {
        throw InputError(where, "expected an object");
    }
    const Json& kind = required(j, where, "kind");
    if (!kind.is_string()) {
        throw InputError("query.kind", "expected a string");
    }
    const auto k = parse_kind(kind.get<std::string>());
    if (!k) {
        throw InputError("query.kind", "unknown query kind '" + kind.get<std::string>() + "'");
    }
    Query q;
    q.kind = *k;
    switch (*k) {
    case QueryKind::depth_line3:
    case QueryKind::depth_line2:
        only_keys(j, where, {"kind", "flat"});
        q.flat = flat_from_json(required(j, where, "flat"), "query.flat", d);
        break;
    case QueryKind::tukey2:
        only_keys(j, where, {"kind", "point"});
        q.point = vector_from_json(required(j, where, "point"), "query.point", d);
        break;
    case QueryKind::crossdist:
        only_keys(j, where, {"kind", "flat_a", "flat_b"});
        q.flat_a = flat_from_json(required(j, where, "flat_a"), "query.flat_a", d);
        q.flat_b = flat_from_json(required(j, where, "flat_b"), "query.flat_b", d);
        break;
    }
    return q;
}

Json hyperplane_to_json(const PrimalHyperplane& h) {
    return Json{{"coeffs", vector_to_json(h.coeffs)}, {"rhs", rational_to_json(h.rhs)}, {"is_at_infinity", h.at_infinity}};
}

PrimalHyperplane hyperplane_from_json(const Json& j, const std::string& where) {
    only_keys(j, where, {"coeffs", "rhs", "is_at_infinity"});
    PrimalHyperplane h;
    h.coeffs = vector_from_json(required(j, where, "coeffs"), join(where, "coeffs"), std::nullopt);
    h.rhs = rational_from_json(required(j, where, "rhs"), join(where, "rhs"));
    const Json& inf = required(j, where, "is_at_infinity");
    if (!inf.is_boolean()) {
        throw InputError(join(where, "is_at_infinity"), "expected a boolean");
    }
    h.at_infinity = inf.get<bool>();
    return h;
}

Json circle_to_json(const std::optional<CircleVector>& c) {
    if (!c) {
        return nullptr;
    }
    return Json::array({rational_to_json(Rat(c->alpha())), rational_to_json(Rat(c->beta()))});
}

std::optional<CircleVector> circle_from_json(const Json& j, const std::string& where) {
    if (j.is_null()) {
        return std::nullopt;
    }
    const RatVector v = vector_from_json(j, where, 2);
    if (!v[0].is_integer() || !v[1].is_integer() || (v[0].is_zero() && v[1].is_zero())) {
        throw InputError(where, "factor coordinates must be a nonzero integer pair");
    }
    return CircleVector(v[0].numerator(), v[1].numerator());
}

std::size_t count_from_json(const Json& j, const std::string& where) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
        throw InputError(where, "expected a nonnegative integer");
    }
    return j.get<std::size_t>();
}

} // namespace

std::string_view kind_name(QueryKind k) {
    switch (k) {
    case QueryKind::depth_line3: return "depth-line3";
    case QueryKind::depth_line2: return "depth-line2";
    case QueryKind::tukey2: return "tukey2";
    case QueryKind::crossdist: return "crossdist";
    }
    return "";
}

std::optional<QueryKind> parse_kind(std::string_view name) {
    for (auto k : {QueryKind::depth_line3, QueryKind::depth_line2, QueryKind::tukey2, QueryKind::crossdist}) {
        if (kind_name(k) == name) {
            return k;
        }
    }
    return std::nullopt;
}

Rat rational_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) {
        return j.is_number_unsigned() ? Rat(BigInt(std::to_string(j.get<unsigned long long>())))
                                      : Rat(BigInt(std::to_string(j.get<long long>())));
    }
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw InputError(field, std::string("malformed rational: ") + e.what());
        }
    }
    throw InputError(field, "expected an integer or a \"num/den\" string");
}

Json rational_to_json(const Rat& r) {
    if (r.is_integer() && r.numerator().fits_slong_p()) {
        return r.numerator().get_si();
    }
    return r.str();
}

InstanceFile instance_from_json(const Json& j) {
    only_keys(j, "", {"dimension", "points", "hyperplanes", "query"});
    InstanceFile inst;
    const Json& dim = required(j, "", "dimension");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) {
        throw InputError("dimension", "expected a positive integer");
    }
    inst.dimension = dim.get<std::size_t>();
    const std::size_t d = inst.dimension;
    if (j.contains("points") == j.contains("hyperplanes")) {
        throw InputError("points", "exactly one of points or hyperplanes is required");
    }
    if (j.contains("points")) {
        inst.points = vectors_from_json(j["points"], "points", d);
    } else {
        const Json& hs = j["hyperplanes"];
        if (!hs.is_array()) {
            throw InputError("hyperplanes", "expected an array");
        }
        std::vector<AffineHyperplane> out;
        for (std::size_t i = 0; i < hs.size(); ++i) {
            const std::string where = index("hyperplanes", i);
            only_keys(hs[i], where, {"coeffs", "rhs"});
            AffineHyperplane h{vector_from_json(required(hs[i], where, "coeffs"), where + ".coeffs", d),
                               rational_from_json(required(hs[i], where, "rhs"), where + ".rhs")};
            if (std::all_of(h.a.begin(), h.a.end(), [](const Rat& x) { return x.is_zero(); })) {
                throw InputError(where + ".coeffs", "hyperplane normal must be nonzero");
            }
            out.push_back(std::move(h));
        }
        inst.hyperplanes = std::move(out);
    }
    if (j.contains("query")) {
        inst.query = query_from_json(j["query"], d);
    }
    return inst;
}

Json instance_to_json(const InstanceFile& inst) {
    Json out = Json::object();
    out["dimension"] = inst.dimension;
    if (inst.points) {
        Json pts = Json::array();
        for (const auto& p : *inst.points) {
            pts.push_back(vector_to_json(p));
        }
        out["points"] = pts;
    }
    if (inst.hyperplanes) {
        Json hs = Json::array();
        for (const auto& h : *inst.hyperplanes) {
            hs.push_back(Json{{"coeffs", vector_to_json(h.a)}, {"rhs", rational_to_json(h.b)}});
        }
        out["hyperplanes"] = hs;
    }
    if (inst.query) {
        const Query& q = *inst.query;
        Json jq = Json::object();
        jq["kind"] = std::string(kind_name(q.kind));
        if (q.flat) {
            jq["flat"] = flat_to_json(*q.flat);
        }
        if (q.point) {
            jq["point"] = vector_to_json(*q.point);
        }
        if (q.flat_a) {
            jq["flat_a"] = flat_to_json(*q.flat_a);
        }
        if (q.flat_b) {
            jq["flat_b"] = flat_to_json(*q.flat_b);
        }
        out["query"] = jq;
    }
    return out;
}

InstanceFile parse_instance_text(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
        Json j;
        try {
            j = Json::parse(text.begin(), text.end());
        } catch (const Json::parse_error& e) {
            throw InputError("", std::string("invalid JSON: ") + e.what());
        }
        return instance_from_json(j);
    }
    // CSV point cloud.
    InstanceFile inst;
    std::vector<RatVector> points;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t row = 0;
    while (std::getline(in, line)) {
        ++row;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') {
            continue;
        }
        RatVector p;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            const auto b = cell.find_first_not_of(" \t\r");
            const auto e = cell.find_last_not_of(" \t\r");
            const std::string trimmed = b == std::string::npos ? "" : cell.substr(b, e - b + 1);
            try {
                p.push_back(Rat::parse(trimmed));
            } catch (const std::exception& ex) {
                throw InputError("row " + std::to_string(row), std::string("malformed rational: ") + ex.what());
            }
        }
        if (!points.empty() && p.size() != points.front().size()) {
            throw InputError("row " + std::to_string(row), "arity mismatch");
        }
        points.push_back(std::move(p));
    }
    if (points.empty()) {
        throw InputError("points", "no points in CSV input");
    }
    inst.dimension = points.front().size();
    inst.points = std::move(points);
    return inst;
}

Json result_to_json(const ResultFile& r) {
    Json out = Json::object();
    out["distance"] = r.distance;
    out["strict_min"] = r.strict_min;
    out["incident_count"] = r.incident_count;
    out["witness"] = Json{{"degenerate", r.degenerate},
                          {"u1", vector_to_json(r.u1)},
                          {"u2", vector_to_json(r.u2)},
                          {"factor1", circle_to_json(r.factor1)},
                          {"factor2", circle_to_json(r.factor2)}};
    if (r.primal) {
        out["primal_witness"] = Json{{"first", hyperplane_to_json(r.primal->first)},
                                     {"second", hyperplane_to_json(r.primal->second)},
                                     {"count", r.primal->count}};
    } else {
        out["primal_witness"] = nullptr;
    }
    out["meta"] = Json{{"n", r.n},
                       {"d", r.d},
                       {"kind", r.kind},
                       {"solver", r.solver},
                       {"headline", r.strict_headline ? "strict" : "closed"},
                       {"elapsed_ms", r.elapsed_ms}};
    return out;
}

ResultFile result_from_json(const Json& j) {
    only_keys(j, "", {"distance", "strict_min", "incident_count", "witness", "primal_witness", "meta"});
    ResultFile r;
    r.distance = count_from_json(required(j, "", "distance"), "distance");
    r.strict_min = count_from_json(required(j, "", "strict_min"), "strict_min");
    r.incident_count = count_from_json(required(j, "", "incident_count"), "incident_count");

    const Json& w = required(j, "", "witness");
    only_keys(w, "witness", {"degenerate", "u1", "u2", "factor1", "factor2"});
    const Json& deg = required(w, "witness", "degenerate");
    if (!deg.is_boolean()) {
        throw InputError("witness.degenerate", "expected a boolean");
    }
    r.degenerate = deg.get<bool>();
    r.u1 = vector_from_json(required(w, "witness", "u1"), "witness.u1", std::nullopt);
    r.u2 = vector_from_json(required(w, "witness", "u2"), "witness.u2", std::nullopt);
    if (w.contains("factor1")) {
        r.factor1 = circle_from_json(w["factor1"], "witness.factor1");
    }
    if (w.contains("factor2")) {
        r.factor2 = circle_from_json(w["factor2"], "witness.factor2");
    }

    if (j.contains("primal_witness") && !j["primal_witness"].is_null()) {
        const Json& p = j["primal_witness"];
        only_keys(p, "primal_witness", {"first", "second", "count"});
        r.primal = PrimalWitness{hyperplane_from_json(required(p, "primal_witness", "first"), "primal_witness.first"),
                                 hyperplane_from_json(required(p, "primal_witness", "second"), "primal_witness.second"),
                                 count_from_json(required(p, "primal_witness", "count"), "primal_witness.count")};
    }

    const Json& m = required(j, "", "meta");
    only_keys(m, "meta", {"n", "d", "kind", "solver", "headline", "elapsed_ms"});
    r.n = count_from_json(required(m, "meta", "n"), "meta.n");
    r.d = count_from_json(required(m, "meta", "d"), "meta.d");
    const Json& kind = required(m, "meta", "kind");
    const Json& solver = required(m, "meta", "solver");
    const Json& headline = required(m, "meta", "headline");
    if (!kind.is_string() || !solver.is_string() || !headline.is_string()) {
        throw InputError("meta", "kind, solver and headline must be strings");
    }
    r.kind = kind.get<std::string>();
    r.solver = solver.get<std::string>();
    if (headline != "strict" && headline != "closed") {
        throw InputError("meta.headline", "expected \"closed\" or \"strict\"");
    }
    r.strict_headline = headline == "strict";
    if (m.contains("elapsed_ms") && m["elapsed_ms"].is_number()) {
        r.elapsed_ms = m["elapsed_ms"].get<double>();
    }
    return r;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("--input", "cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InputError("--output", "cannot open '" + path + "' for writing");
    }
    out << text;
}

} // namespace flatdepth::cli
