#include "ricci/cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "ricci/antitree.hpp"
#include "ricci/curvature.hpp"
#include "ricci/edge_io.hpp"
#include "ricci/errors.hpp"
#include "ricci/families.hpp"
#include "ricci/graph.hpp"
#include "ricci/measure.hpp"
#include "ricci/parallel.hpp"
#include "ricci/report_json.hpp"
#include "ricci/sharpness.hpp"
#include "ricci/transport.hpp"

namespace ricci {
namespace {

// ---------------------------------------------------------------- helpers

struct GraphSource {
    std::string file;
    std::string family;

    Graph load() const {
        const bool has_file = !file.empty();
        const bool has_family = !family.empty();
        if (has_file == has_family)
            throw InputError("exactly one of --graph and --family is required");
        return has_file ? read_edge_list_file(file) : generate(FamilyExpr::parse(family));
    }
};

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::string approx_str(const Rational& r) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.9g", r.approx());
    return buf;
}

// Human-readable rational: exact, with the approximation appended on demand.
std::string show(const Rational& r, bool decimal) {
    return decimal ? r.str() + " ~ " + approx_str(r) : r.str();
}

void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c)
            widths[c] = std::max(widths[c], row[c].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line.append(widths[c] - row[c].size() + 2, ' ');
        }
        out << line << "\n";
    }
}

Json envelope(const std::string& command) {
    Json j;
    j["schema"] = "ricci-sharp/1";
    j["command"] = command;
    return j;
}

void emit_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- curvature

struct CurvatureOpts {
    GraphSource src;
    bool json = false;
    bool explain = false;
    bool decimal = false;
    std::string dump_graph;
    int jobs = 0;
};

int run_curvature(const CurvatureOpts& opt, std::ostream& out) {
    const Graph g = opt.src.load();
    if (!opt.dump_graph.empty()) write_edge_list_file(opt.dump_graph, g);

    const int jobs = resolve_jobs(opt.jobs);
    const CurvatureReport report = curvature_sweep(g, jobs);

    std::vector<TransportResult> transports;
    if (opt.explain) {
        transports.resize(report.edges.size());
        parallel_for(static_cast<long long>(report.edges.size()), jobs, [&](long long i) {
            const EdgeCurvature& ec = report.edges[static_cast<size_t>(i)];
            const ProbabilityMeasure mu1 = vertex_measure(g, ec.edge.first, ec.idleness_used);
            const ProbabilityMeasure mu2 = vertex_measure(g, ec.edge.second, ec.idleness_used);
            TransportResult result = wasserstein1(g, mu1, mu2);
            verify_transport(g, mu1, mu2, result);
            transports[static_cast<size_t>(i)] = std::move(result);
        });
    }

    if (opt.json) {
        Json j = envelope("curvature");
        j["graph"] = graph_json(g);
        j.update(curvature_report_json(report, opt.decimal));
        if (opt.explain) {
            for (size_t i = 0; i < transports.size(); ++i)
                j["edges"][i]["transport"] = transport_json(transports[i], opt.decimal);
        }
        emit_json(out, j);
        return 0;
    }

    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count()
        << " edges, diameter " << report.diameter << "\n";
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"edge", "p*", "kappa_p*", "kappa_lly"});
    for (const EdgeCurvature& ec : report.edges)
        rows.push_back({edge_str(ec.edge), ec.idleness_used.str(), ec.kappa_p.str(),
                        show(ec.kappa_lly, opt.decimal)});
    print_table(out, rows);
    out << "min kappa_lly: " << show(report.min_curvature, opt.decimal) << "\n";

    if (opt.explain) {
        for (size_t i = 0; i < report.edges.size(); ++i) {
            const EdgeCurvature& ec = report.edges[i];
            const TransportResult& tr = transports[i];
            out << "\nedge " << edge_str(ec.edge) << ": transport cost " << tr.value.str()
                << " at idleness " << ec.idleness_used.str()
                << " (plan and certificate re-verified)\n";
            for (const auto& [move, mass] : tr.plan.entries)
                out << "  move " << mass.str() << " from " << move.first << " to "
                    << move.second << "\n";
            std::string pot = "  potential:";
            for (const auto& [v, phi] : tr.certificate.potential)
                pot += " phi(" + std::to_string(v) + ")=" + phi.str();
            out << pot << "\n";
        }
    }
    return 0;
}

// ---------------------------------------------------------------- sharp

struct SharpOpts {
    GraphSource src;
    bool json = false;
    bool decimal = false;
    int jobs = 0;
};

int run_sharp(const SharpOpts& opt, std::ostream& out) {
    const Graph g = opt.src.load();
    const SharpnessVerdict v = is_bm_sharp(g, resolve_jobs(opt.jobs));

    if (opt.json) {
        Json j = envelope("sharp");
        j["graph"] = graph_json(g);
        j.update(sharpness_json(v, opt.decimal));
        emit_json(out, j);
        return 0;
    }

    out << "graph: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
    out << "diameter: " << v.diameter << "\n";
    out << "min kappa_lly: " << show(v.min_curvature, opt.decimal) << " at edge "
        << edge_str(v.witness_edge) << "\n";
    out << "bound 2/diameter: " << show(v.bound, opt.decimal) << "\n";
    out << "sharp: " << (v.is_sharp ? "yes" : "no") << "\n";
    return 0;
}

// ---------------------------------------------------------------- classify

struct ClassifyOpts {
    int n = 0;
    std::string dump_dir;
    bool json = false;
    int jobs = 0;
};

int run_classify(const ClassifyOpts& opt, std::ostream& out) {
    const ClassificationReport report =
        verify_diameter2_classification(opt.n, resolve_jobs(opt.jobs));

    if (!opt.dump_dir.empty() && !report.mismatch_masks.empty()) {
        std::filesystem::create_directories(opt.dump_dir);
        for (std::uint64_t mask : report.mismatch_masks) {
            const std::filesystem::path path =
                std::filesystem::path(opt.dump_dir) /
                ("mismatch-n" + std::to_string(opt.n) + "-mask" + std::to_string(mask) + ".txt");
            write_edge_list_file(path.string(), graph_from_edge_mask(opt.n, mask));
        }
    }

    if (opt.json) {
        Json j = envelope("classify");
        j.update(classification_json(report));
        emit_json(out, j);
    } else {
        out << "n = " << report.n << ": scanned " << report.graphs_scanned
            << " labeled graphs\n";
        out << "connected with diameter 2: " << report.diameter2_count << "\n";
        out << "sharp: " << report.sharp_count << "\n";
        out << "mismatches against the matching-complement family: "
            << report.mismatch_masks.size() << "\n";
        for (std::uint64_t mask : report.mismatch_masks)
            out << "  mismatch mask " << mask << ": "
                << (opt.dump_dir.empty() ? "rerun with --dump-mismatches to export"
                                         : "written to " + opt.dump_dir)
                << "\n";
    }
    return report.mismatch_masks.empty() ? 0 : 1;
}

// ---------------------------------------------------------------- scan

struct ScanOpts {
    bool even = false;
    int from = 8;
    int to = 200;
    int diameter = 0;
    long max_b = 10;
    bool json = false;
    bool decimal = false;
};

// Members of a one-parameter family with parameter at most max_t, obtained
// by evaluating the trace at each admitted integer.
std::vector<AntitreeSequence> family_members(const ScanResult& r, long max_t) {
    std::vector<AntitreeSequence> out;
    if (r.outcome != ScanResult::Outcome::Family) return out;
    const std::optional<BigInt> first = r.admissible.smallest();
    if (!first) return out;
    for (BigInt t = *first; t <= max_t; t += r.admissible.modulus()) {
        if (!r.admissible.admits(t)) break;  // upper-bounded classes stop early
        std::vector<long> sizes;
        sizes.reserve(r.trace.size());
        for (const AffineForm& f : r.trace) {
            const Rational v = f.eval(Rational(t));
            if (!v.is_integer() || v.sign() <= 0 || !v.numerator().fits_slong_p())
                throw InternalError("scan: admitted parameter fails to give integer sizes");
            sizes.push_back(v.numerator().get_si());
        }
        out.push_back(AntitreeSequence(std::move(sizes)));
    }
    return out;
}

void print_scan_human(std::ostream& out, const ScanResult& r, long max_b, bool decimal) {
    out << "diameter " << r.diameter << ": ";
    switch (r.outcome) {
        case ScanResult::Outcome::Family: out << "one-parameter family\n"; break;
        case ScanResult::Outcome::FiniteList: out << "finite list\n"; break;
        case ScanResult::Outcome::Empty: out << "empty\n"; break;
    }
    if (!r.trace.empty()) {
        std::string levels;
        for (size_t k = 0; k < r.trace.size(); ++k) {
            if (k) levels += ", ";
            levels += r.trace[k].str();
        }
        out << "  trace: " << levels << "\n";
        out << "  admissible t: " << r.admissible.str() << "\n";
    }
    if (!r.region.empty()) {
        out << "  region (" << r.region.size() << " candidates):\n";
        std::vector<std::vector<std::string>> rows;
        for (const ScanCandidate& cand : r.region)
            rows.push_back({"    " + cand.seq.str(), "min " + show(cand.min_curvature, decimal),
                            cand.sharp ? "sharp" : "not sharp"});
        print_table(out, rows);
    }
    if (r.outcome == ScanResult::Outcome::Family) {
        const std::vector<AntitreeSequence> members = family_members(r, max_b);
        out << "  members with t <= " << max_b << ":";
        for (const AntitreeSequence& seq : members) out << " " << seq.str();
        out << "\n";
    } else if (r.outcome == ScanResult::Outcome::FiniteList) {
        out << "  solutions:";
        for (const AntitreeSequence& seq : r.solutions) out << " " << seq.str();
        out << "\n";
    }
}

int run_scan(const ScanOpts& opt, std::ostream& out) {
    if (opt.even == (opt.diameter != 0))
        throw InputError("scan: choose exactly one of --even and --diameter");
    if (opt.max_b < 1) throw InputError("scan: --max-b must be positive");

    std::vector<ScanResult> results;
    if (opt.even) {
        if (opt.from > opt.to) throw InputError("scan: --from must be at most --to");
        int L = opt.from + (opt.from % 2 != 0 ? 1 : 0);
        if (L < 4) throw InputError("scan: even scans start at diameter 4");
        for (; L <= opt.to; L += 2) results.push_back(scan_even_diameter(L));
    } else {
        switch (opt.diameter) {
            case 3:
            case 5: results.push_back(scan_odd_small(opt.diameter)); break;
            case 4:
            case 6: results.push_back(scan_even_diameter(opt.diameter)); break;
            default: throw InputError("scan: --diameter must be 3, 4, 5 or 6");
        }
    }

    if (opt.json) {
        Json j = envelope("scan");
        Json arr = Json::array();
        for (const ScanResult& r : results) {
            Json entry = scan_json(r, opt.decimal);
            if (r.outcome == ScanResult::Outcome::Family) {
                Json members = Json::array();
                for (const AntitreeSequence& seq : family_members(r, opt.max_b))
                    members.push_back(seq.str());
                entry["members_preview_max_t"] = opt.max_b;
                entry["members_preview"] = std::move(members);
            }
            arr.push_back(std::move(entry));
        }
        j["results"] = std::move(arr);
        emit_json(out, j);
        return 0;
    }

    for (size_t i = 0; i < results.size(); ++i) {
        if (i) out << "\n";
        print_scan_human(out, results[i], opt.max_b, opt.decimal);
    }
    return 0;
}

// ---------------------------------------------------------------- verify-lemmas

struct VerifyLemmasOpts {
    long max_b = 10;
    bool json = false;
};

int run_verify_lemmas(const VerifyLemmasOpts& opt, std::ostream& out) {
    const FamilyLemmaReport report = verify_family_lemmas(opt.max_b);

    if (opt.json) {
        Json j = envelope("verify-lemmas");
        j.update(family_lemma_json(report));
        emit_json(out, j);
    } else {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"t", "diam-4 sharp", "diam-6 sharp", "perturbed not sharp",
                        "transport cross-check"});
        auto yn = [](bool b) { return std::string(b ? "yes" : "NO"); };
        for (const FamilyCheck& c : report.entries)
            rows.push_back({std::to_string(c.t), yn(c.diam4_sharp), yn(c.diam6_sharp),
                            yn(c.perturbations_not_sharp),
                            c.lp_checked ? (c.lp_agrees ? "agrees" : "DISAGREES") : "-"});
        print_table(out, rows);
        out << (report.all_pass ? "all family checks passed" : "FAMILY CHECKS FAILED") << "\n";
    }
    return report.all_pass ? 0 : 1;
}

// ---------------------------------------------------------------- cross-validate

struct CrossValidateOpts {
    int max_levels = 5;
    long max_size = 4;
    bool json = false;
    int jobs = 0;
};

int run_cross_validate(const CrossValidateOpts& opt, std::ostream& out) {
    const CrossValidationReport report =
        cross_validate_antitrees(opt.max_levels, opt.max_size, resolve_jobs(opt.jobs));

    if (opt.json) {
        Json j = envelope("cross-validate");
        j.update(cross_validation_json(report));
        emit_json(out, j);
    } else {
        out << "sequences checked: " << report.sequences_checked << "\n";
        out << "edges checked: " << report.edges_checked << "\n";
        out << "disagreements: " << report.disagreements.size() << "\n";
        for (const std::string& d : report.disagreements) out << "  " << d << "\n";
        out << (report.all_agree ? "closed forms and transport solver agree"
                                 : "CLOSED FORMS AND TRANSPORT SOLVER DISAGREE")
            << "\n";
    }
    return report.all_agree ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Ollivier curvature and Bonnet-Myers sharpness toolkit"};
    app.name("ricci-sharp");
    app.require_subcommand(1);

    auto add_source = [](CLI::App* cmd, GraphSource& src) {
        cmd->add_option("--graph", src.file, "Edge-list file to analyze");
        cmd->add_option("--family", src.family,
                        "Family expression, e.g. \"Q:3\", \"G:1,2\", \"AT:1,3,3,1\", \"CP:3*CP:3\"");
    };

    CurvatureOpts curvature_opts;
    CLI::App* curvature_cmd =
        app.add_subcommand("curvature", "Exact edge curvatures of a graph");
    add_source(curvature_cmd, curvature_opts.src);
    curvature_cmd->add_flag("--json", curvature_opts.json, "Machine-readable output");
    curvature_cmd->add_flag("--explain", curvature_opts.explain,
                            "Attach verified transport plans and dual certificates");
    curvature_cmd->add_flag("--decimal", curvature_opts.decimal,
                            "Also show approximate decimal values");
    curvature_cmd->add_option("--dump-graph", curvature_opts.dump_graph,
                              "Write the analyzed graph to this edge-list file");
    curvature_cmd->add_option("--jobs", curvature_opts.jobs,
                              "Worker threads (default: all available)");

    SharpOpts sharp_opts;
    CLI::App* sharp_cmd =
        app.add_subcommand("sharp", "Bonnet-Myers sharpness verdict for a graph");
    add_source(sharp_cmd, sharp_opts.src);
    sharp_cmd->add_flag("--json", sharp_opts.json, "Machine-readable output");
    sharp_cmd->add_flag("--decimal", sharp_opts.decimal, "Also show approximate decimal values");
    sharp_cmd->add_option("--jobs", sharp_opts.jobs, "Worker threads (default: all available)");

    ClassifyOpts classify_opts;
    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "Scan all labeled n-vertex graphs and verify the diameter-2 classification");
    classify_cmd->add_option("--n", classify_opts.n, "Number of vertices (3..7)")->required();
    classify_cmd->add_option("--dump-mismatches", classify_opts.dump_dir,
                             "Directory for edge lists of any mismatching graphs");
    classify_cmd->add_flag("--json", classify_opts.json, "Machine-readable output");
    classify_cmd->add_option("--jobs", classify_opts.jobs,
                             "Worker threads (default: all available)");

    ScanOpts scan_opts;
    CLI::App* scan_cmd = app.add_subcommand(
        "scan", "Solve for sharp palindromic antitrees of a given diameter");
    scan_cmd->add_flag("--even", scan_opts.even, "Scan a range of even diameters");
    scan_cmd->add_option("--from", scan_opts.from, "First even diameter (default 8)");
    scan_cmd->add_option("--to", scan_opts.to, "Last even diameter (default 200)");
    scan_cmd->add_option("--diameter", scan_opts.diameter, "Single diameter: 3, 4, 5 or 6");
    scan_cmd->add_option("--max-b", scan_opts.max_b,
                         "List family members with parameter up to this bound (default 10)");
    scan_cmd->add_flag("--json", scan_opts.json, "Machine-readable output");
    scan_cmd->add_flag("--decimal", scan_opts.decimal, "Also show approximate decimal values");

    VerifyLemmasOpts verify_opts;
    CLI::App* verify_cmd = app.add_subcommand(
        "verify-lemmas", "Recheck the two infinite sharp families and their perturbations");
    verify_cmd->add_option("--max-b", verify_opts.max_b,
                           "Largest family parameter to check (default 10)");
    verify_cmd->add_flag("--json", verify_opts.json, "Machine-readable output");

    CrossValidateOpts cross_opts;
    CLI::App* cross_cmd = app.add_subcommand(
        "cross-validate", "Compare closed-form antitree curvatures against the transport solver");
    cross_cmd->add_option("--max-levels", cross_opts.max_levels,
                          "Largest number of levels (default 5)");
    cross_cmd->add_option("--max-size", cross_opts.max_size,
                          "Largest level size (default 4)");
    cross_cmd->add_flag("--json", cross_opts.json, "Machine-readable output");
    cross_cmd->add_option("--jobs", cross_opts.jobs, "Worker threads (default: all available)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ricci-sharp");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(curvature_cmd)) return run_curvature(curvature_opts, out);
        if (app.got_subcommand(sharp_cmd)) return run_sharp(sharp_opts, out);
        if (app.got_subcommand(classify_cmd)) return run_classify(classify_opts, out);
        if (app.got_subcommand(scan_cmd)) return run_scan(scan_opts, out);
        if (app.got_subcommand(verify_cmd)) return run_verify_lemmas(verify_opts, out);
        if (app.got_subcommand(cross_cmd)) return run_cross_validate(cross_opts, out);
        throw InternalError("cli: no subcommand dispatched");
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace ricci
