// Command-line front end: synthesize the invariant Diophantine equation of a
// linear recurrence, run the order-3 decision procedure, render proof
// documents and JSON certificates, walk orbits, brute-force-check results,
// and dump plot data for the plane dynamical system.
//
// Exit codes: 0 success, 2 inadmissible recurrence, 3 method failure (no
// positive minimum, hence no search bound), 4 bad input, 5 brute-force
// verification found unexplained solutions.

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "diorec/certificate.hpp"
#include "diorec/decimal.hpp"
#include "diorec/pipeline.hpp"
#include "diorec/proof.hpp"
#include "diorec/solver.hpp"

namespace {

using namespace diorec;
using nlohmann::ordered_json;

std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t b = item.find_first_not_of(" \t");
        std::size_t e = item.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw std::invalid_argument("empty entry in integer list '" + text + "'");
        std::string entry = item.substr(b, e - b + 1);
        try {
            out.push_back(Int(entry));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("'" + entry + "' is not an integer");
        }
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + path + " for writing");
    f << content;
    if (!f) throw std::runtime_error("short write to " + path);
}

ordered_json tuple_json(const SolutionTuple& t) {
    ordered_json a = ordered_json::array();
    for (const Int& e : t) a.push_back(to_long(e));
    return a;
}

// narrate a failed decision stage on stderr and map it to its exit code
int report_failure(const PipelineResult& pr) {
    if (pr.stage == Stage::inadmissible) {
        for (const std::string& r : pr.admissibility->reasons) std::cerr << "inadmissible: " << r << "\n";
        return 2;
    }
    std::cerr << "method failure: no positive lower bound on the plane cubic over the "
                 "backward-failure regions\n";
    const auto& regions = pr.bound->per_region;
    for (std::size_t i = 0; i < regions.size(); ++i)
        std::cerr << "  region " << i + 1 << " minimum " << dec_render(regions[i].minimum, 10)
                  << (regions[i].positive ? "" : "  (not positive)") << "\n";
    return 3;
}

int cmd_derive(const std::string& coeffs, const std::string& json_path, bool quiet) {
    PipelineResult pr = derive_invariant(parse_int_list(coeffs));
    if (!quiet) std::cout << pr.P.to_string() << "\n";
    if (!json_path.empty()) write_file(json_path, certificate_text(derivation_json(pr)));
    return 0;
}

int cmd_all_solns(const std::string& coeffs, const std::string& json_path, bool quiet) {
    PipelineResult pr = run_decision(parse_int_list(coeffs));
    if (pr.stage != Stage::solved) return report_failure(pr);
    if (!quiet) {
        std::cout << "invariant: " << pr.P.to_string() << " = 1\n";
        std::cout << "search limit: " << pr.bound->search_limit.get_str() << "\n";
        std::cout << "solutions below bound: " << tuple_set(pr.solutions->solutions) << "\n";
        std::cout << "generators: " << tuple_set(pr.generators->generators) << "\n";
    }
    if (!json_path.empty()) write_file(json_path, certificate_text(certificate_json(pr)));
    return 0;
}

int cmd_prove(const std::string& coeffs, const std::string& json_path, const std::string& out_path,
              bool quiet) {
    PipelineResult pr = run_decision(parse_int_list(coeffs));
    std::string doc = render_proof(pr);
    if (!out_path.empty()) {
        write_file(out_path, doc);
        if (!quiet) std::cout << "wrote " << out_path << "\n";
    } else if (!quiet) {
        std::cout << doc;
    }
    if (!json_path.empty() && pr.stage == Stage::solved)
        write_file(json_path, certificate_text(certificate_json(pr)));
    switch (pr.stage) {
        case Stage::solved: return 0;
        case Stage::inadmissible: return 2;
        default: return 3;
    }
}

int cmd_verify(const std::string& coeffs, long radius, const std::string& json_path, bool quiet) {
    PipelineResult pr = run_decision(parse_int_list(coeffs));
    if (pr.stage != Stage::solved) return report_failure(pr);
    VerifyReport vr = brute_force_verify(pr.rec, Int(radius), *pr.generators);
    if (!quiet) {
        std::cout << "search limit: " << pr.bound->search_limit.get_str() << "\n";
        std::cout << "generators: " << tuple_set(pr.generators->generators) << "\n";
        std::cout << "brute force radius: " << radius << "\n";
        std::cout << "cube solutions: " << vr.solutions.size() << "\n";
        std::cout << "matched: " << vr.matches.size() << "\n";
        std::cout << "unexplained: " << vr.unexplained.size() << "\n";
        for (const SolutionTuple& t : vr.unexplained) std::cout << "  " << tuple_to_string(t) << "\n";
    }
    if (!json_path.empty()) {
        ordered_json cert = certificate_json(pr);
        cert.erase("tool_version");  // reattached below so it stays last
        ordered_json v;
        v["radius"] = radius;
        ordered_json matches = ordered_json::array();
        for (const OrbitMatch& m : vr.matches) {
            ordered_json mj;
            mj["solution"] = tuple_json(m.solution);
            mj["generator"] = tuple_json(m.generator);
            mj["step"] = m.step;
            matches.push_back(std::move(mj));
        }
        v["matches"] = std::move(matches);
        ordered_json unexplained = ordered_json::array();
        for (const SolutionTuple& t : vr.unexplained) unexplained.push_back(tuple_json(t));
        v["unexplained"] = std::move(unexplained);
        v["verified"] = vr.verified();
        cert["verification"] = std::move(v);
        cert["tool_version"] = kToolVersion;
        write_file(json_path, certificate_text(cert));
    }
    return vr.verified() ? 0 : 5;
}

int cmd_orbit(const std::string& coeffs, const std::string& seed_text, long back, long forward,
              bool quiet) {
    Recurrence rec = validate(parse_int_list(coeffs));
    SolutionTuple seed = parse_int_list(seed_text);
    if (seed.size() != static_cast<std::size_t>(rec.order))
        throw std::invalid_argument("seed must have one entry per recurrence order");
    std::vector<SolutionTuple> path = orbit(rec, seed, back, forward);
    if (!quiet)
        for (const SolutionTuple& t : path) std::cout << tuple_to_string(t) << "\n";
    return 0;
}

int cmd_plot_data(const std::string& coeffs, long grid, const std::string& out_path, bool quiet) {
    Recurrence rec = validate(parse_int_list(coeffs));
    if (rec.order != 3) throw std::invalid_argument("plot data is defined for order-3 recurrences");
    if (grid < 2) throw std::invalid_argument("--grid needs at least 2 points per axis");

    // one window step (x, y, z) -> (y, z, az + by + x) acts on (t, s) =
    // (x/z, y/z) as t' = s/(a + bs + t), s' = 1/(a + bs + t)
    std::ostringstream os;
    os << "t,s,dt,ds\n";
    const Rat a(rec.a()), b(rec.b());
    const Rat tiny(Int(1), int_pow(Int(10), 9));
    for (long i = 0; i < grid; ++i) {
        Rat t(Int(i), Int(grid - 1));
        t.canonicalize();
        for (long j = 0; j < grid; ++j) {
            Rat s(Int(j), Int(grid - 1));
            s.canonicalize();
            os << dec_render(t, 12) << "," << dec_render(s, 12) << ",";
            Rat den = Rat(a + b * s + t);
            if (abs_rat(den) < tiny) {
                os << ",\n";  // vector field undefined at a pole
                continue;
            }
            Rat dt = Rat(s / den - t);
            Rat ds = Rat(Rat(1) / den - s);
            os << dec_render(dt, 12) << "," << dec_render(ds, 12) << "\n";
        }
    }
    // the attracting fixed point (1/alpha^2, 1/alpha) of the plane map
    UniPoly charpoly(std::vector<Int>{Int(-1), -rec.b(), -rec.a(), Int(1)});
    AlgebraicNumber alpha = isolate_real_roots(charpoly).back();
    os << "# fixed_point," << dec_render(alpha.pow(2).inverse(), 12) << ","
       << dec_render(alpha.inverse(), 12) << "\n";

    if (!out_path.empty()) {
        write_file(out_path, os.str());
        if (!quiet) std::cout << "wrote " << out_path << "\n";
    } else if (!quiet) {
        std::cout << os.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Synthesizes the Diophantine equation whose solutions are the orbits of a linear\n"
        "recurrence, and for third-order recurrences decides it: search bound, full\n"
        "solution list, generator classification, proof document, JSON certificate."};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::string json_path, out_path, coeffs, seed_text;
    bool quiet = false;
    long back = 0, forward = 0, radius = 0, grid = 0;

    app.add_option("--json", json_path,
                   "write the JSON certificate (derive: derivation fragment) to this file");
    app.add_flag("--quiet", quiet, "suppress stdout reporting (files are still written)");

    auto* sub_derive =
        app.add_subcommand("derive", "print the invariant polynomial of a recurrence");
    auto* sub_all =
        app.add_subcommand("all-solns", "decide the equation: search limit and generators");
    auto* sub_prove = app.add_subcommand("prove", "render the proof document (or the exact "
                                                  "failure narrative)");
    auto* sub_verify =
        app.add_subcommand("verify", "cross-check the classification by brute force over a cube");
    auto* sub_orbit = app.add_subcommand("orbit", "walk a solution window under the recurrence");
    auto* sub_plot =
        app.add_subcommand("plot-data", "CSV vector field of the induced plane map on a grid");

    for (CLI::App* sub : {sub_derive, sub_all, sub_prove, sub_verify, sub_orbit, sub_plot}) {
        sub->add_option("--coeffs", coeffs, "recurrence coefficients c1,...,cd")->required();
        sub->fallthrough();
    }
    sub_prove->add_option("--out", out_path, "write the document to this file");
    sub_verify->add_option("--radius", radius, "half-width of the brute-force cube")
        ->required()
        ->check(CLI::NonNegativeNumber);
    sub_orbit->add_option("--seed", seed_text, "starting window x1,...,xd")->required();
    sub_orbit->add_option("--back", back, "backward steps")->check(CLI::NonNegativeNumber);
    sub_orbit->add_option("--forward", forward, "forward steps")->check(CLI::NonNegativeNumber);
    sub_plot->add_option("--grid", grid, "grid points per axis (at least 2)")->required();
    sub_plot->add_option("--out", out_path, "write the CSV to this file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 4;
    }

    try {
        if (app.got_subcommand(sub_derive)) return cmd_derive(coeffs, json_path, quiet);
        if (app.got_subcommand(sub_all)) return cmd_all_solns(coeffs, json_path, quiet);
        if (app.got_subcommand(sub_prove)) return cmd_prove(coeffs, json_path, out_path, quiet);
        if (app.got_subcommand(sub_verify)) return cmd_verify(coeffs, radius, json_path, quiet);
        if (app.got_subcommand(sub_orbit))
            return cmd_orbit(coeffs, seed_text, back, forward, quiet);
        if (app.got_subcommand(sub_plot)) return cmd_plot_data(coeffs, grid, out_path, quiet);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
