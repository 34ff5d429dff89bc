#pragma once

// JSON instance and result files.
//
// Instance:
//   {"dimension": d,
//    "points": [[x1, ..., xd], ...]            -- or --
//    "hyperplanes": [{"coeffs": [a1, ..., ad], "rhs": b}, ...],
//    "query": {"kind": "depth-line3" | "depth-line2", "flat": FLAT}
//           | {"kind": "tukey2", "point": [x, y]}
//           | {"kind": "crossdist", "flat_a": FLAT, "flat_b": FLAT}}
//   FLAT = {"points": [P] | [P, Q]} | {"point": P, "direction": V}
//        | {"homogeneous": [U] | [U, W]}
// Numbers are JSON integers or strings "n" / "n/d". Unknown keys are errors.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "flatdepth/depth.hpp"

namespace flatdepth::cli {

using Json = nlohmann::ordered_json;

// Malformed input; `field` names the offending JSON path.
class InputError : public std::runtime_error {
public:
    InputError(std::string field, const std::string& message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field)) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

enum class QueryKind { depth_line3, depth_line2, tukey2, crossdist };

std::string_view kind_name(QueryKind k);
std::optional<QueryKind> parse_kind(std::string_view name);

struct Query {
    QueryKind kind = QueryKind::crossdist;
    std::optional<AffineFlatSpec> flat;    // depth-line3, depth-line2
    std::optional<RatVector> point;        // tukey2
    std::optional<AffineFlatSpec> flat_a;  // crossdist
    std::optional<AffineFlatSpec> flat_b;  // crossdist
};

struct InstanceFile {
    std::size_t dimension = 0;
    std::optional<std::vector<RatVector>> points;
    std::optional<std::vector<AffineHyperplane>> hyperplanes;
    std::optional<Query> query;
};

Rat rational_from_json(const Json& j, const std::string& field);
Json rational_to_json(const Rat& r);

InstanceFile instance_from_json(const Json& j);
Json instance_to_json(const InstanceFile& inst);

// JSON object, or CSV with one point per row when the text does not start
// with '{'. Throws InputError.
InstanceFile parse_instance_text(std::string_view text);

struct ResultFile {
    std::size_t distance = 0;
    std::size_t strict_min = 0;
    std::size_t incident_count = 0;
    bool degenerate = false;
    RatVector u1;
    RatVector u2;
    std::optional<CircleVector> factor1;
    std::optional<CircleVector> factor2;
    std::optional<PrimalWitness> primal;
    std::size_t n = 0;
    std::size_t d = 0;
    std::string kind;
    std::string solver;
    bool strict_headline = false;
    double elapsed_ms = 0.0;
};

Json result_to_json(const ResultFile& r);
ResultFile result_from_json(const Json& j);

// Reads a file, or stdin for "-" or an empty path.
std::string read_input(const std::string& path);
// Writes to a file, or stdout for "-" or an empty path.
void write_output(const std::string& path, const std::string& text);

} // namespace flatdepth::cli
