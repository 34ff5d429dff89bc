#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "flatdepth/cli/io.hpp"

namespace flatdepth::cli {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int input_error = 2;
inline constexpr int verification_failed = 3;
inline constexpr int unsupported = 4;
} // namespace exit_code

// The homogeneous query an instance file describes.
struct QueryPlan {
    QueryKind kind;
    std::size_t d;
    std::vector<ArrangementFunctional> functionals;
    ProjectiveFlat f1;
    ProjectiveFlat f2;
};

// Throws InputError when the instance has no usable query, UnsupportedFlat
// for flats that are neither points nor lines.
QueryPlan plan_query(const InstanceFile& inst);

struct RunOptions {
    bool strict_headline = false;
    bool use_oracle = false;
};

ResultFile run_query(const InstanceFile& inst, const RunOptions& opts = {});

struct Verification {
    bool ok = true;
    std::vector<std::string> problems;
};

// Recounts a result against its instance: witness membership, strict count
// at the witness, incident count, headline arithmetic and the primal wedge.
Verification verify_witness(const InstanceFile& inst, const ResultFile& result);

// The flatdepth command line; args exclude the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& err);

} // namespace flatdepth::cli
