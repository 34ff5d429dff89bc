#include "flatdepth/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flatdepth/cli/generate.hpp"
#include "flatdepth/dual.hpp"
#include "flatdepth/oracle.hpp"
#include "flatdepth/solvers.hpp"

namespace flatdepth::cli {

namespace {

const std::vector<RatVector>& require_points(const InstanceFile& inst, QueryKind k) {
    if (!inst.points) {
        throw InputError("points", std::string(kind_name(k)) + " needs a point set");
    }
    return *inst.points;
}

void require_dimension(const InstanceFile& inst, std::size_t d, QueryKind k) {
    if (inst.dimension != d) {
        throw UnsupportedFlat(std::string(kind_name(k)) + " needs dimension " + std::to_string(d) + ", got " +
                              std::to_string(inst.dimension));
    }
}

std::vector<ArrangementFunctional> instance_functionals(const InstanceFile& inst) {
    if (inst.points) {
        return point_functionals(*inst.points, inst.dimension);
    }
    std::vector<ArrangementFunctional> out;
    for (const auto& h : *inst.hyperplanes) {
        out.push_back(functional_of_affine_hyperplane(h.a, h.b));
    }
    return out;
}

bool vanishes_on(const ArrangementFunctional& h, const ProjectiveFlat& f) {
    return std::all_of(f.basis().begin(), f.basis().end(),
                       [&](const HomogeneousPoint& b) { return sign_of(h, b) == 0; });
}

} // namespace

QueryPlan plan_query(const InstanceFile& inst) {
    if (!inst.query) {
        throw InputError("query", "missing field");
    }
    const Query& q = *inst.query;
    switch (q.kind) {
    case QueryKind::depth_line3: {
        require_dimension(inst, 3, q.kind);
        require_points(inst, q.kind);
        auto flats = line3_flats(*q.flat);
        return {q.kind, 3, instance_functionals(inst), flats.f1, flats.f2};
    }
    case QueryKind::depth_line2: {
        require_dimension(inst, 2, q.kind);
        require_points(inst, q.kind);
        auto flats = line2_flats(*q.flat);
        return {q.kind, 2, instance_functionals(inst), flats.f1, flats.f2};
    }
    case QueryKind::tukey2: {
        require_dimension(inst, 2, q.kind);
        require_points(inst, q.kind);
        auto flats = tukey2_flats(*q.point);
        return {q.kind, 2, instance_functionals(inst), flats.f1, flats.f2};
    }
    case QueryKind::crossdist:
        return {q.kind, inst.dimension, instance_functionals(inst), q.flat_a->lift(inst.dimension),
                q.flat_b->lift(inst.dimension)};
    }
    throw InputError("query.kind", "unknown query kind");
}

ResultFile run_query(const InstanceFile& inst, const RunOptions& opts) {
    const QueryPlan plan = plan_query(inst);
    const auto started = std::chrono::steady_clock::now();

    std::optional<DepthResult> result;
    if (opts.use_oracle) {
        auto built = build_instance(plan.functionals, plan.f1, plan.f2);
        if (const auto* meet = std::get_if<IntersectingFlats>(&built)) {
            result = intersecting_result(*meet);
        } else {
            result = oracle::brute_force_min(std::get<CoveringInstance>(built));
        }
    } else {
        switch (plan.kind) {
        case QueryKind::depth_line3:
            result = regression_depth_line3(*inst.points, *inst.query->flat).result;
            break;
        case QueryKind::depth_line2:
            result = regression_depth_line2(*inst.points, *inst.query->flat).result;
            break;
        case QueryKind::tukey2:
            result = tukey_depth2(*inst.points, *inst.query->point).result;
            break;
        case QueryKind::crossdist:
            result = crossing_distance(plan.functionals, plan.f1, plan.f2);
            break;
        }
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started);

    ResultFile out;
    out.strict_headline = opts.strict_headline;
    out.distance = opts.strict_headline ? result->strict_min : result->distance;
    out.strict_min = result->strict_min;
    out.incident_count = result->incident_count;
    out.degenerate = result->witness.degenerate;
    out.u1 = result->witness.u1.coords();
    out.u2 = result->witness.u2.coords();
    out.factor1 = result->witness.c1;
    out.factor2 = result->witness.c2;
    if (plan.kind != QueryKind::crossdist) {
        out.primal = witness_to_primal(result->witness.u1, result->witness.u2);
        out.primal->count = result->strict_min;
    }
    out.n = plan.functionals.size();
    out.d = plan.d;
    out.kind = std::string(kind_name(plan.kind));
    out.solver = result->solver;
    out.elapsed_ms = elapsed.count();
    return out;
}

Verification verify_witness(const InstanceFile& inst, const ResultFile& r) {
    Verification v;
    auto fail = [&](std::string msg) {
        v.ok = false;
        v.problems.push_back(std::move(msg));
    };
    const QueryPlan plan = plan_query(inst);
    if (r.kind != kind_name(plan.kind)) {
        fail("result kind '" + r.kind + "' does not match instance kind '" + std::string(kind_name(plan.kind)) + "'");
    }
    if (r.n != plan.functionals.size() || r.d != plan.d) {
        fail("result meta n/d does not match the instance");
    }
    const std::size_t size = plan.d + 1;
    if (r.u1.size() != size || r.u2.size() != size) {
        fail("witness points have the wrong number of coordinates");
        return v;
    }
    auto nonzero = [](const RatVector& x) { return std::any_of(x.begin(), x.end(), [](const Rat& c) { return !c.is_zero(); }); };
    if (!nonzero(r.u1) || !nonzero(r.u2)) {
        fail("witness points must be nonzero");
        return v;
    }
    const HomogeneousPoint u1(r.u1);
    const HomogeneousPoint u2(r.u2);

    if (r.degenerate) {
        if (!(u1 == u2) || !plan.f1.contains(u1) || !plan.f2.contains(u1)) {
            fail("degenerate witness is not a common point of both flats");
        }
        if (r.distance != 0 || r.strict_min != 0) {
            fail("intersecting flats must report distance 0");
        }
    } else {
        if (!plan.f1.contains(u1)) {
            fail("witness u1 is not on the first flat");
        }
        if (!plan.f2.contains(u2)) {
            fail("witness u2 is not on the second flat");
        }
        if (flats_intersect(plan.f1, plan.f2)) {
            fail("flats intersect but the result is not marked degenerate");
        }
        const std::size_t recount = oracle::segment_crossings(plan.functionals, u1, u2, oracle::WedgeMode::strict);
        if (recount != r.strict_min) {
            fail("strict recount at the witness is " + std::to_string(recount) + ", result claims " +
                 std::to_string(r.strict_min));
        }
        std::size_t incident = 0;
        for (const auto& h : plan.functionals) {
            incident += (vanishes_on(h, plan.f1) || vanishes_on(h, plan.f2)) ? 1 : 0;
        }
        if (incident != r.incident_count) {
            fail("incident recount is " + std::to_string(incident) + ", result claims " +
                 std::to_string(r.incident_count));
        }
        const std::size_t headline = r.strict_headline ? r.strict_min : r.strict_min + r.incident_count;
        if (r.distance != headline) {
            fail("distance does not equal the headline combination of strict_min and incident_count");
        }
    }

    if (plan.kind != QueryKind::crossdist) {
        if (!r.primal) {
            fail("depth result lacks a primal witness");
            return v;
        }
        const PrimalWitness expect = witness_to_primal(u1, u2);
        const PrimalWitness& got = *r.primal;
        if (got.first.coeffs != expect.first.coeffs || got.first.rhs != expect.first.rhs ||
            got.second.coeffs != expect.second.coeffs || got.second.rhs != expect.second.rhs ||
            got.first.at_infinity != expect.first.at_infinity || got.second.at_infinity != expect.second.at_infinity) {
            fail("primal witness is not the polar pair of the homogeneous witness");
            return v;
        }
        const std::size_t wedge = oracle::double_wedge_count(*inst.points, got.first.functional(),
                                                             got.second.functional(), oracle::WedgeMode::strict);
        if (wedge != r.strict_min || got.count != r.strict_min) {
            fail("primal double wedge holds " + std::to_string(wedge) + " points strictly, result claims " +
                 std::to_string(r.strict_min));
        }
    }
    return v;
}

namespace {

RatVector parse_coords(const std::string& text, const std::string& flag) {
    RatVector out;
    std::istringstream in(text);
    std::string cell;
    while (std::getline(in, cell, ',')) {
        try {
            out.push_back(Rat::parse(cell));
        } catch (const std::exception& e) {
            throw InputError(flag, std::string("malformed rational: ") + e.what());
        }
    }
    return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// Attaches a query given on the command line (needed for CSV input).
void apply_query_flags(InstanceFile& inst, QueryKind kind, const std::vector<std::string>& points,
                       const std::string& direction) {
    if (points.empty() && direction.empty()) {
        if (!inst.query) {
            throw InputError("query", "missing field (give it in the instance or with --point)");
        }
        return;
    }
    std::vector<RatVector> pts;
    for (const auto& p : points) {
        pts.push_back(parse_coords(p, "--point"));
    }
    Query q;
    q.kind = kind;
    if (kind == QueryKind::tukey2) {
        if (pts.size() != 1 || !direction.empty()) {
            throw InputError("--point", "tukey2 takes exactly one --point");
        }
        q.point = pts.front();
    } else if (kind == QueryKind::crossdist) {
        throw InputError("--point", "crossdist flats must be given in the instance file");
    } else {
        if (!direction.empty()) {
            if (pts.size() != 1) {
                throw InputError("--direction", "a direction needs exactly one --point");
            }
            q.flat = AffineFlatSpec::point_direction(pts.front(), parse_coords(direction, "--direction"));
        } else {
            if (pts.size() != 2) {
                throw InputError("--point", "a line needs two --point values or --point with --direction");
            }
            q.flat = AffineFlatSpec::through(pts[0], pts[1]);
        }
    }
    if (q.point && q.point->size() != inst.dimension) {
        throw InputError("--point", "arity mismatch");
    }
    if (q.flat) {
        for (const auto& p : q.flat->points) {
            if (p.size() != inst.dimension) {
                throw InputError("--point", "arity mismatch");
            }
        }
    }
    inst.query = std::move(q);
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const InputError& e) {
        err << "flatdepth: input error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const UnsupportedFlat& e) {
        err << "flatdepth: unsupported: " << e.what() << "\n";
        return exit_code::unsupported;
    } catch (const std::invalid_argument& e) {
        err << "flatdepth: input error: " << e.what() << "\n";
        return exit_code::input_error;
    } catch (const std::domain_error& e) {
        err << "flatdepth: input error: " << e.what() << "\n";
        return exit_code::input_error;
    }
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& err) {
    CLI::App app{"Exact regression depth, Tukey depth and crossing distance of flats"};
    app.require_subcommand(1);

    std::string input;
    std::string output;
    std::string result_path;
    bool strict_headline = false;
    std::vector<std::string> query_points;
    std::string query_direction;
    GenOptions gen;
    std::string gen_kind;

    auto add_query_command = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--input", input, "instance file (JSON or CSV), default stdin");
        sub->add_option("--output", output, "result file, default stdout");
        sub->add_flag("--strict-headline", strict_headline, "report strict_min as distance");
        sub->add_option("--point", query_points, "query point (comma-separated), repeatable");
        sub->add_option("--direction", query_direction, "query line direction (comma-separated)");
        return sub;
    };
    add_query_command("depth-line3", "regression depth of a line in R^3");
    add_query_command("depth-line2", "regression depth of a line in R^2");
    add_query_command("tukey2", "Tukey depth of a point in R^2");
    add_query_command("crossdist", "crossing distance between two flats");
    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force minimum over all cells");
    oracle_cmd->add_option("--input", input, "instance file, default stdin");
    oracle_cmd->add_option("--output", output, "result file, default stdout");
    oracle_cmd->add_flag("--strict-headline", strict_headline, "report strict_min as distance");

    CLI::App* verify_cmd = app.add_subcommand("verify-witness", "recount a result against its instance");
    verify_cmd->add_option("--input", input, "instance file")->required();
    verify_cmd->add_option("--result", result_path, "result file, default stdin");

    CLI::App* gen_cmd = app.add_subcommand("gen", "deterministic random instance");
    gen_cmd->add_option("--seed", gen.seed, "PRNG seed");
    gen_cmd->add_option("--n", gen.n, "number of points or hyperplanes");
    gen_cmd->add_option("--dim", gen.dim, "ambient dimension");
    gen_cmd->add_option("--coord-bound", gen.coord_bound, "coordinates uniform in [-bound, bound]");
    gen_cmd->add_flag("--degenerate", gen.degenerate, "plant duplicates and incidences");
    gen_cmd->add_option("--kind", gen_kind, "depth-line3 | depth-line2 | tukey2 | crossdist");
    gen_cmd->add_option("--output", output, "instance file, default stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        err << app.help();
        return exit_code::ok;
    } catch (const CLI::ParseError& e) {
        err << "flatdepth: " << e.what() << "\n" << app.help();
        return exit_code::input_error;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();

    return guarded(err, [&]() -> int {
        if (name == "gen") {
            if (!gen_kind.empty()) {
                gen.kind = parse_kind(gen_kind);
                if (!gen.kind) {
                    throw InputError("--kind", "unknown query kind '" + gen_kind + "'");
                }
            }
            const InstanceFile inst = generate(gen);
            if (!gen.degenerate && degeneracy_count(inst) > 0) {
                err << "flatdepth: note: instance has " << degeneracy_count(inst) << " accidental incidences\n";
            }
            write_output(output, dump(instance_to_json(inst)));
            return exit_code::ok;
        }
        if (name == "verify-witness") {
            const InstanceFile inst = parse_instance_text(read_input(input));
            Json rj;
            try {
                rj = Json::parse(read_input(result_path));
            } catch (const Json::parse_error& e) {
                throw InputError("--result", std::string("invalid JSON: ") + e.what());
            }
            const Verification v = verify_witness(inst, result_from_json(rj));
            for (const auto& p : v.problems) {
                err << "flatdepth: mismatch: " << p << "\n";
            }
            return v.ok ? exit_code::ok : exit_code::verification_failed;
        }

        InstanceFile inst = parse_instance_text(read_input(input));
        RunOptions opts;
        opts.strict_headline = strict_headline;
        if (name == "oracle") {
            opts.use_oracle = true;
        } else {
            const QueryKind kind = *parse_kind(name);
            apply_query_flags(inst, kind, query_points, query_direction);
            if (inst.query->kind != kind) {
                throw InputError("query.kind", "instance holds a " + std::string(kind_name(inst.query->kind)) +
                                                   " query, not " + name);
            }
        }
        write_output(output, dump(result_to_json(run_query(inst, opts))));
        return exit_code::ok;
    });
}

} // namespace flatdepth::cli
