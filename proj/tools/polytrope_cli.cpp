// Command-line driver: exact enumeration of polytrope types and the
// supporting min-plus utilities.

#include "polytrope/fans.hpp"
#include "polytrope/geometry.hpp"
#include "polytrope/io.hpp"
#include "polytrope/util.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

namespace {

constexpr const char* kVersion = "polytropes 1.0.0";

using namespace polytrope;

std::string matrix_table(const WeightMatrix& m) {
    std::ostringstream out;
    for (int i = 0; i < m.n(); ++i) {
        for (int j = 0; j < m.n(); ++j) out << (j ? " " : "") << format_rational(m.at(i, j));
        out << "\n";
    }
    return out.str();
}

WeightMatrix load_matrix(const std::string& path) {
    return WeightMatrix::from_json_text(read_file(path));
}

int run_kleene(const std::string& input, bool as_json) {
    const WeightMatrix c = load_matrix(input);
    const WeightMatrix star = kleene_star(c);
    if (as_json)
        std::cout << star.to_json_text() << "\n";
    else
        std::cout << matrix_table(star);
    return 0;
}

int run_eigen(const std::string& input, bool as_json) {
    const WeightMatrix c = load_matrix(input);
    const Rational lambda = min_mean_cycle(c);
    const auto tropical = tropical_vertices(c);
    if (as_json) {
        nlohmann::json verts = nlohmann::json::array();
        for (const auto& v : tropical) {
            nlohmann::json pt = nlohmann::json::array();
            for (const auto& x : v) pt.push_back(format_rational(x));
            verts.push_back(std::move(pt));
        }
        std::cout << nlohmann::json{{"lambda", format_rational(lambda)}, {"tropical_vertices", verts}}
                  << "\n";
    } else {
        std::cout << "lambda = " << format_rational(lambda) << "\n";
        for (std::size_t j = 0; j < tropical.size(); ++j) {
            std::cout << "v" << j + 1 << " =";
            for (const auto& x : tropical[j]) std::cout << " " << format_rational(x);
            std::cout << "\n";
        }
    }
    return 0;
}

nlohmann::json sparse_normal(int n, const std::vector<int>& normal) {
    nlohmann::json entries = nlohmann::json::array();
    for (int e = 0; e < edge_count(n); ++e) {
        if (normal[e] == 0) continue;
        auto [i, j] = edge_at(n, e);
        entries.push_back(nlohmann::json{
            {"edge", std::to_string(i + 1) + "," + std::to_string(j + 1)}, {"coef", normal[e]}});
    }
    return entries;
}

std::string node_list(const std::vector<int>& nodes) {
    std::string out = "{";
    for (std::size_t i = 0; i < nodes.size(); ++i)
        out += (i ? "," : "") + std::to_string(nodes[i] + 1);
    return out + "}";
}

int run_binomials(int n, int m, bool as_json) {
    const auto monomials = enumerate_monomials(n, m);
    const auto binomials = enumerate_binomials(n, m);
    if (as_json) {
        nlohmann::json out;
        out["n"] = n;
        out["m"] = m;
        out["monomial_count"] = monomials.size();
        nlohmann::json list = nlohmann::json::array();
        for (const auto& b : binomials)
            list.push_back(nlohmann::json{{"sources", node_list(b.sources)},
                                          {"sinks", node_list(b.sinks)},
                                          {"rotation_plus", b.rot_plus},
                                          {"rotation_minus", b.rot_minus},
                                          {"normal", sparse_normal(n, b.normal)}});
        out["binomials"] = std::move(list);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << monomials.size() << " monomials, " << binomials.size() << " binomials (n=" << n
                  << ", m=" << m << ")\n";
        for (const auto& b : binomials) {
            std::cout << "K=" << node_list(b.sources) << " L=" << node_list(b.sinks) << " r+="
                      << b.rot_plus << " r-=" << b.rot_minus << " normal=";
            for (int e = 0; e < edge_count(n); ++e) {
                if (b.normal[e] == 0) continue;
                auto [i, j] = edge_at(n, e);
                std::cout << (b.normal[e] > 0 ? "+" : "-") << i + 1 << j + 1;
            }
            std::cout << "\n";
        }
    }
    return 0;
}

int run_relations(int n, bool as_json) {
    const CircuitReport report = relation_circuits(n);
    if (as_json) {
        nlohmann::json out{{"n", n},
                           {"binomials", report.num_binomials},
                           {"rank", report.rank},
                           {"kernel_dimension", report.kernel_dimension},
                           {"circuit_classes", report.classes.size()},
                           {"circuits", report.total_circuits()}};
        nlohmann::json classes = nlohmann::json::array();
        for (const auto& cls : report.classes) {
            nlohmann::json c{{"orbit_size", cls.size()},
                             {"support", cls[0].support},
                             {"coefficients", nlohmann::json::array()}};
            for (const auto& z : cls[0].coefficients) c["coefficients"].push_back(z.get_str());
            classes.push_back(std::move(c));
        }
        out["classes"] = std::move(classes);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << report.num_binomials << " binomial normals, rank " << report.rank
                  << ", kernel dimension " << report.kernel_dimension << "\n";
        if (report.classes.empty() && n >= 6) {
            std::cout << "(circuit enumeration is reported for n <= 5; kernel dimension only)\n";
        } else {
            std::cout << report.classes.size() << " circuit classes, " << report.total_circuits()
                      << " circuits\n";
            for (const auto& cls : report.classes) {
                std::cout << "  orbit " << cls.size() << " support";
                for (std::size_t i = 0; i < cls[0].support.size(); ++i)
                    std::cout << " " << cls[0].coefficients[i].get_str() << "*b" << cls[0].support[i];
                std::cout << "\n";
            }
        }
    }
    return 0;
}

struct EnumerateArgs {
    int n = 4;
    std::string mode = "maximal";
    std::string winner = "min";
    bool filter = false;
    bool undirected = false;
    std::string out_dir;
    std::string resume_dir;
    std::uint64_t seed = 1;
    int max_waves = -1;
    long long cadence = 10000;
};

void write_summary(const std::string& path, const nlohmann::json& summary) {
    write_file(path, summary.dump(2) + "\n");
}

int run_enumerate(const EnumerateArgs& args, const std::string& command_line) {
    const std::string dir = args.resume_dir.empty() ? args.out_dir : args.resume_dir;
    const std::string manifest_path = dir + "/manifest.json";
    const std::string records_path = dir + "/records.jsonl";
    const std::string summary_path = dir + "/summary.json";
    const std::string checkpoint_path = dir + "/checkpoint.json";

    const EnumMode mode = args.mode == "maximal" ? EnumMode::Maximal : EnumMode::All;
    const WinnerRule winner = args.winner == "min" ? WinnerRule::Min : WinnerRule::Max;

    // completed runs are a no-op when their outputs still verify
    if (file_exists(manifest_path)) {
        RunManifest old = RunManifest::from_json(read_file(manifest_path));
        if (old.completed) {
            for (const auto& [name, hash] : old.output_hashes) {
                const std::string path = dir + "/" + name;
                if (!file_exists(path) || file_hash(path) != hash)
                    throw CorruptCheckpoint("recorded output " + name + " is missing or modified");
            }
            std::cout << "run already complete: " << dir << "\n";
            return 0;
        }
    }

    RunManifest manifest;
    manifest.tool_version = kVersion;
    manifest.command = command_line;
    manifest.n = args.n;
    manifest.mode = args.mode;
    manifest.flags = {{"winner", args.winner},
                      {"filter_boundary", args.filter ? "true" : "false"},
                      {"undirected_filter", args.undirected ? "true" : "false"}};
    manifest.seed = args.seed;
    manifest.started = iso_timestamp();

    FanContext ctx(args.n);
    EnumerateOptions opt;
    opt.seed = args.seed;
    opt.winner = winner;
    opt.max_waves = args.max_waves;
    opt.checkpoint_cadence = args.cadence;
    opt.on_checkpoint = [&](const BfsState& s) {
        save_checkpoint(checkpoint_path, args.n, mode, winner, s);
    };

    BfsState state;
    if (checkpoint_exists(checkpoint_path))
        state = load_checkpoint(checkpoint_path, args.n, mode, winner);

    EnumerationResult result;
    if (mode == EnumMode::Maximal) {
        result = enumerate_maximal(ctx, opt, &state);
    } else {
        result = enumerate_all_cones(ctx, opt);
    }

    if (!result.stats.completed) {
        save_checkpoint(checkpoint_path, args.n, mode, winner, state);
        manifest.completed = false;
        manifest.finished = iso_timestamp();
        manifest.counts = {{"visited_classes", result.stats.classes},
                           {"expanded", result.stats.expanded}};
        write_file(manifest_path, manifest.to_json() + "\n");
        std::cout << "interrupted after " << result.stats.waves << " waves; state checkpointed in "
                  << checkpoint_path << "\n";
        return 0;
    }

    write_records_file(records_path, result.records);
    // summary holds only run-independent content; schedule-dependent
    // statistics go to the manifest so resumed runs stay bit-identical
    nlohmann::json summary{{"n", args.n},
                           {"mode", args.mode},
                           {"winner", args.winner},
                           {"classes", result.stats.classes},
                           {"raw_cones", result.stats.raw_cones}};
    manifest.counts["classes"] = result.stats.classes;
    manifest.counts["raw_cones"] = result.stats.raw_cones;
    manifest.counts["lp_calls"] = result.stats.lp_calls;
    manifest.counts["filter_rejects"] = result.stats.filter_rejects;
    manifest.counts["waves"] = result.stats.waves;

    if (mode == EnumMode::Maximal && args.n == 4) {
        std::string csv = "representative,orbit_size\n";
        for (const auto& rec : result.records)
            csv += encode_sign_vector(rec.sign) + "," + std::to_string(rec.orbit_size) + "\n";
        write_file(dir + "/table2.csv", csv);
        manifest.output_hashes["table2.csv"] = file_hash(dir + "/table2.csv");
    }

    if (args.filter) {
        const BoundaryPartition split = filter_boundary(result.records, args.undirected);
        write_records_file(dir + "/kept.jsonl", split.kept);
        write_records_file(dir + "/removed.jsonl", split.removed);
        summary["boundary_removed"] = split.removed.size();
        summary["kept"] = split.kept.size();
        manifest.counts["boundary_removed"] = static_cast<long long>(split.removed.size());
        manifest.counts["kept"] = static_cast<long long>(split.kept.size());
        manifest.output_hashes["kept.jsonl"] = file_hash(dir + "/kept.jsonl");
        manifest.output_hashes["removed.jsonl"] = file_hash(dir + "/removed.jsonl");
        if (mode == EnumMode::All) {
            const LinearityGroups groups = group_by_linearity(ctx, split.kept);
            summary["linearity_groups"] = groups.groups.size();
            nlohmann::json hist = nlohmann::json::object();
            std::string csv = "group_size,num_groups\n";
            for (const auto& [size, count] : groups.size_histogram) {
                hist[std::to_string(size)] = count;
                csv += std::to_string(size) + "," + std::to_string(count) + "\n";
            }
            summary["group_size_histogram"] = std::move(hist);
            write_file(dir + "/table3.csv", csv);
            manifest.output_hashes["table3.csv"] = file_hash(dir + "/table3.csv");
            manifest.counts["linearity_groups"] = static_cast<long long>(groups.groups.size());
        }
    }

    write_summary(summary_path, summary);
    manifest.output_hashes["records.jsonl"] = file_hash(records_path);
    manifest.output_hashes["summary.json"] = file_hash(summary_path);
    manifest.finished = iso_timestamp();
    manifest.completed = true;
    write_file(manifest_path, manifest.to_json() + "\n");

    std::cout << "classes " << result.stats.classes << " (raw " << result.stats.raw_cones << ")";
    if (summary.contains("kept"))
        std::cout << ", boundary removed " << summary["boundary_removed"] << ", kept "
                  << summary["kept"];
    if (summary.contains("linearity_groups"))
        std::cout << ", linearity groups " << summary["linearity_groups"];
    std::cout << "\n";
    return 0;
}

int run_classify(int n, const std::string& records_path, const std::string& out_path, bool as_json) {
    const auto records = read_records_file(records_path);
    for (const auto& r : records)
        if (r.n != n) throw std::runtime_error("record n mismatch: file has n=" + std::to_string(r.n));
    const std::vector<int> counts = classify_counts(records);
    std::map<int, long long> hist;
    for (int c : counts) ++hist[c];

    std::string csv = "vertices,classes\n";
    for (const auto& [v, c] : hist) csv += std::to_string(v) + "," + std::to_string(c) + "\n";
    write_file(out_path, csv);

    nlohmann::json per_class = nlohmann::json::array();
    const long long max_count = binomial_coefficient(2 * n - 2, n - 1);
    for (std::size_t i = 0; i < records.size(); ++i)
        per_class.push_back(nlohmann::json{{"id", records[i].id},
                                           {"vertex_count", counts[i]},
                                           {"maximal", counts[i] == max_count}});
    write_file(out_path + ".classes.json", per_class.dump(2) + "\n");

    if (as_json) {
        nlohmann::json out{{"n", n}, {"classes", records.size()}};
        for (const auto& [v, c] : hist) out["histogram"][std::to_string(v)] = c;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "vertices classes\n";
        for (const auto& [v, c] : hist) std::cout << v << " " << c << "\n";
    }
    return 0;
}

int run_resume(const std::string& dir, const std::string& command_line) {
    const std::string manifest_path = dir + "/manifest.json";
    if (!file_exists(manifest_path)) throw CorruptCheckpoint("no manifest in " + dir);
    const RunManifest manifest = RunManifest::from_json(read_file(manifest_path));
    EnumerateArgs args;
    args.n = manifest.n;
    args.mode = manifest.mode;
    args.winner = manifest.flags.count("winner") ? manifest.flags.at("winner") : "min";
    args.filter = manifest.flags.count("filter_boundary") &&
                  manifest.flags.at("filter_boundary") == "true";
    args.undirected = manifest.flags.count("undirected_filter") &&
                      manifest.flags.at("undirected_filter") == "true";
    args.seed = manifest.seed;
    args.resume_dir = dir;
    return run_enumerate(args, command_line);
}

struct CheckReport {
    int failures = 0;
    void expect(const std::string& name, bool ok, const std::string& detail = "") {
        std::cout << (ok ? "PASS " : "FAIL ") << name;
        if (!detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        if (!ok) ++failures;
    }
};

template <typename T>
std::string versus(const T& got, const T& want) {
    std::ostringstream out;
    out << "got " << got << ", want " << want;
    return out.str();
}

int run_verify(int n, const std::string& level, std::uint64_t seed) {
    CheckReport report;
    const bool full = level == "full";
    if (n == 4) {
        report.expect("catalog: 12 monomials", enumerate_monomials(4, 2).size() == 12);
        report.expect("catalog: 6 binomials", enumerate_binomials(4, 2).size() == 6);
        const CircuitReport rels = relation_circuits(4);
        report.expect("relations: kernel dimension 1", rels.kernel_dimension == 1,
                      versus(rels.kernel_dimension, 1));
        FanContext ctx(4);
        report.expect("brute force: 62 open chambers", brute_force_chambers(ctx).size() == 62);
        EnumerateOptions opt;
        opt.seed = seed;
        const auto maximal = enumerate_maximal(ctx, opt);
        report.expect("maximal: 6 classes", maximal.stats.classes == 6,
                      versus(maximal.stats.classes, 6LL));
        report.expect("maximal: orbit sizes sum to 62", maximal.stats.raw_cones == 62,
                      versus(maximal.stats.raw_cones, 62LL));
        if (full) {
            const auto all = enumerate_all_cones(ctx, opt);
            report.expect("all cones: 1026 classes", all.stats.classes == 1026,
                          versus(all.stats.classes, 1026LL));
            const auto split = filter_boundary(all.records);
            report.expect("boundary: 13 removed", split.removed.size() == 13,
                          versus(split.removed.size(), std::size_t{13}));
            report.expect("boundary: 1013 kept", split.kept.size() == 1013,
                          versus(split.kept.size(), std::size_t{1013}));
            const auto groups = group_by_linearity(ctx, split.kept);
            report.expect("linearity: 273 groups", groups.groups.size() == 273,
                          versus(groups.groups.size(), std::size_t{273}));
            const std::map<int, int> expected_groups{{1, 123}, {2, 10}, {3, 89}, {5, 19},
                                                     {6, 2},   {9, 19}, {15, 2}, {18, 3},
                                                     {27, 3},  {37, 1}, {42, 1}, {81, 1}};
            report.expect("linearity: group histogram", groups.size_histogram == expected_groups);
            const auto hist = classify(split.kept);
            const std::map<int, long long> expected_hist{
                {4, 1},    {5, 1},    {6, 5},    {7, 6},   {8, 34},  {9, 38},
                {10, 81},  {11, 101}, {12, 151}, {13, 144}, {14, 154}, {15, 116},
                {16, 92},  {17, 46},  {18, 28},  {19, 9},  {20, 6}};
            report.expect("classify: vertex histogram", hist == expected_hist);
        }
    } else if (n == 5) {
        report.expect("catalog: 30 binomials", enumerate_binomials(5, 2).size() == 30);
        if (full) {
            FanContext ctx(5);
            EnumerateOptions opt;
            opt.seed = seed;
            const auto maximal = enumerate_maximal(ctx, opt);
            report.expect("maximal: 27248 classes", maximal.stats.classes == 27248,
                          versus(maximal.stats.classes, 27248LL));
        } else {
            std::cout << "NOTE n=5 maximal enumeration runs at --level full\n";
        }
    } else if (n == 6) {
        report.expect("catalog: 90 two-block binomials", enumerate_binomials(6, 2).size() == 90);
        report.expect("catalog: 60 three-block binomials", enumerate_binomials(6, 3).size() == 60);
        std::cout << "NOTE the n=6 chamber count (target 22770) is a long run; use "
                     "'enumerate --n 6 --mode maximal' with checkpoints\n";
    } else {
        std::cout << "NOTE verify supports n in {4, 5, 6}\n";
    }
    std::cout << (report.failures ? "VERIFY FAILED\n" : "VERIFY OK\n");
    return report.failures ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration of combinatorial tropical types of polytropes"};
    app.set_version_flag("--version", kVersion);
    app.fallthrough(); // global flags may follow the subcommand

    std::uint64_t seed = 1;
    int threads = 0;
    app.add_option("--seed", seed, "random seed for enumeration starts");
    app.add_option("--threads", threads, "worker threads (0 = library default)");

    std::string input;
    bool as_json = false;

    auto* kleene_cmd = app.add_subcommand("kleene", "all-pairs shortest-path closure of a matrix");
    kleene_cmd->add_option("--input", input, "weight matrix JSON file")->required();
    kleene_cmd->add_flag("--json", as_json, "JSON output");

    auto* eigen_cmd = app.add_subcommand("eigen", "cycle-mean eigenvalue and tropical vertices");
    eigen_cmd->add_option("--input", input, "weight matrix JSON file")->required();
    eigen_cmd->add_flag("--json", as_json, "JSON output");

    int bn = 4, bm = 2;
    auto* binomials_cmd = app.add_subcommand("binomials", "bipartite monomial/binomial catalog");
    binomials_cmd->add_option("--n", bn, "node count")->required();
    binomials_cmd->add_option("--m", bm, "block size")->required();
    binomials_cmd->add_flag("--json", as_json, "JSON output");

    int rn = 4;
    auto* relations_cmd = app.add_subcommand("relations", "relation circuits among binomial normals");
    relations_cmd->add_option("--n", rn, "node count")->required();
    relations_cmd->add_flag("--json", as_json, "JSON output");

    EnumerateArgs eargs;
    auto* enum_cmd = app.add_subcommand("enumerate", "enumerate cone classes");
    enum_cmd->add_option("--n", eargs.n, "node count (3..6)")->required();
    enum_cmd->add_option("--mode", eargs.mode, "maximal|all")
        ->check(CLI::IsMember({"maximal", "all"}));
    enum_cmd->add_option("--winner", eargs.winner, "min|max block-winner convention")
        ->check(CLI::IsMember({"min", "max"}));
    enum_cmd->add_flag("--filter-boundary", eargs.filter, "split away boundary cones");
    enum_cmd->add_flag("--undirected-filter", eargs.undirected,
                       "use the undirected cycle reading of the boundary test");
    enum_cmd->add_option("--out", eargs.out_dir, "output directory");
    enum_cmd->add_option("--resume", eargs.resume_dir, "existing run directory to continue");
    enum_cmd->add_option("--max-waves", eargs.max_waves)->group(""); // test hook
    enum_cmd->add_option("--checkpoint-cadence", eargs.cadence, "expansions between checkpoints");

    int cn = 4;
    std::string records_path, out_path;
    auto* classify_cmd = app.add_subcommand("classify", "vertex-count histogram of record witnesses");
    classify_cmd->add_option("--n", cn, "node count")->required();
    classify_cmd->add_option("--records", records_path, "records.jsonl to classify")->required();
    classify_cmd->add_option("--out", out_path, "CSV output path")->required();
    classify_cmd->add_flag("--json", as_json, "JSON output");

    int vn = 4;
    std::string level = "quick";
    auto* verify_cmd = app.add_subcommand("verify", "re-derive the published counts");
    verify_cmd->add_option("--n", vn, "node count")->required();
    verify_cmd->add_option("--level", level, "quick|full")->check(CLI::IsMember({"quick", "full"}));

    std::string resume_dir;
    auto* resume_cmd = app.add_subcommand("resume", "continue an interrupted enumeration run");
    resume_cmd->add_option("dir", resume_dir, "run directory")->required();

    app.require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    }

#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif

    std::string command_line;
    for (int i = 0; i < argc; ++i) command_line += std::string(i ? " " : "") + argv[i];

    try {
        if (*kleene_cmd) return run_kleene(input, as_json);
        if (*eigen_cmd) return run_eigen(input, as_json);
        if (*binomials_cmd) return run_binomials(bn, bm, as_json);
        if (*relations_cmd) return run_relations(rn, as_json);
        if (*enum_cmd) {
            if (eargs.out_dir.empty() && eargs.resume_dir.empty())
                throw CLI::ValidationError("--out or --resume is required");
            eargs.seed = seed;
            return run_enumerate(eargs, command_line);
        }
        if (*classify_cmd) return run_classify(cn, records_path, out_path, as_json);
        if (*verify_cmd) return run_verify(vn, level, seed);
        if (*resume_cmd) return run_resume(resume_dir, command_line);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const CorruptCheckpoint& e) {
        std::cerr << "corrupt checkpoint: " << e.what() << "\n";
        return 2;
    } catch (const BadBlockSize& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
