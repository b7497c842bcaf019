// Command-line front end: one subcommand per verified statement, with text
// or JSON output and CI-friendly exit codes:
//   0 all assertions passed, 1 verification failure, 2 usage error,
//   3 resource limit.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ekr/cliques.hpp"
#include "ekr/ekrverify.hpp"
#include "ekr/parallel.hpp"
#include "ekr/report.hpp"
#include "ekr/scheme.hpp"

namespace {

using namespace ekr;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Options {
    int n = 5;
    std::string format = "text";
    std::string cache_dir;
    bool long_running = false;
    int threads = 0;
    std::string partition;
    std::string dot_path, bin_path;
    bool with_spectrum = false;
    std::string dump_dir;
};

void dump_matrix(const Options& opt, const std::string& name, const IntMatrix& m) {
    if (opt.dump_dir.empty()) return;
    std::filesystem::create_directories(opt.dump_dir);
    std::ofstream out(std::filesystem::path(opt.dump_dir) / name);
    write_matrix_text(out, m);
}

std::filesystem::path resolve_cache_dir(const Options& opt) {
    if (const char* env = std::getenv("EKR_CACHE_DIR"); env && *env) return env;
    if (!opt.cache_dir.empty()) return opt.cache_dir;
    return ".ekr-cache";
}

void print_report_text(const CheckReport& rep) {
    std::cout << (rep.pass ? "[PASS] " : "[FAIL] ") << rep.check << " (n=" << rep.n
              << ", anchor=" << rep.anchor << ", " << std::fixed << std::setprecision(1) << rep.ms
              << " ms)\n";
    if (!rep.pass || !rep.witnesses.empty()) std::cout << "  " << rep.witnesses.dump() << "\n";
}

int emit_reports(const Options& opt, const std::vector<CheckReport>& reps) {
    bool all_pass = true;
    for (const auto& r : reps) all_pass &= r.pass;
    if (opt.format == "json") {
        if (reps.size() == 1) {
            std::cout << reps.front().to_json().dump(2) << "\n";
        } else {
            json out;
            out["status"] = all_pass ? "pass" : "fail";
            out["checks"] = json::array();
            for (const auto& r : reps) out["checks"].push_back(r.to_json());
            std::cout << out.dump(2) << "\n";
        }
    } else {
        for (const auto& r : reps) print_report_text(r);
        std::cout << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
    }
    return all_pass ? kExitPass : kExitFail;
}

void require_n(int n, int lo, int hi, const std::string& what) {
    if (n < lo || n > hi)
        throw CLI::ValidationError(what + " requires --n in [" + std::to_string(lo) + "," +
                                   std::to_string(hi) + "]");
}

// --- char-table ------------------------------------------------------------

int run_char_table(const Options& opt) {
    require_n(opt.n, 3, 12, "char-table");
    const CharacterTable t = alt_character_table(opt.n);
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& r : t.rows) rows.push_back(r.str());
        json cols = json::array();
        for (const auto& c : t.cols)
            cols.push_back({{"cycle_type", c.cycle_type.lengths.str()},
                            {"split_tag", to_string(c.split_tag)},
                            {"size", c.size.str()}});
        json values = json::array();
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            json row = json::array();
            for (std::size_t c = 0; c < t.cols.size(); ++c) {
                const QuadraticNumber& q = t.at(r, c);
                row.push_back({{"a", rat_string(q.rational_part())},
                               {"b", rat_string(q.radical_coeff())},
                               {"d", q.radicand()}});
            }
            values.push_back(row);
        }
        std::cout << json{{"n", opt.n}, {"rows", rows}, {"classes", cols}, {"values", values}}.dump(2)
                  << "\n";
        return kExitPass;
    }
    std::vector<std::size_t> width(t.cols.size());
    std::vector<std::string> head(t.cols.size());
    for (std::size_t c = 0; c < t.cols.size(); ++c) {
        head[c] = t.cols[c].cycle_type.lengths.str();
        if (t.cols[c].split_tag == SplitTag::Prime) head[c] += "'";
        if (t.cols[c].split_tag == SplitTag::DoublePrime) head[c] += "\"";
        width[c] = head[c].size();
    }
    std::vector<std::vector<std::string>> cells(t.rows.size());
    std::size_t label_w = 0;
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        label_w = std::max(label_w, t.rows[r].str().size());
        for (std::size_t c = 0; c < t.cols.size(); ++c) {
            cells[r].push_back(t.at(r, c).str());
            width[c] = std::max(width[c], cells[r][c].size());
        }
    }
    std::cout << std::left << std::setw(static_cast<int>(label_w) + 2) << "";
    for (std::size_t c = 0; c < t.cols.size(); ++c)
        std::cout << std::right << std::setw(static_cast<int>(width[c]) + 2) << head[c];
    std::cout << "\n";
    for (std::size_t r = 0; r < t.rows.size(); ++r) {
        std::cout << std::left << std::setw(static_cast<int>(label_w) + 2) << t.rows[r].str();
        for (std::size_t c = 0; c < t.cols.size(); ++c)
            std::cout << std::right << std::setw(static_cast<int>(width[c]) + 2) << cells[r][c];
        std::cout << "\n";
    }
    return kExitPass;
}

// --- dims ------------------------------------------------------------------

int run_dims(const Options& opt) {
    if (!opt.partition.empty()) {
        const Partition p = parse_partition(opt.partition);
        json j{{"partition", p.str()},
               {"weight", p.weight()},
               {"conjugate", conjugate(p).str()},
               {"symmetric", is_symmetric(p)},
               {"shape", to_string(classify_shape(p))},
               {"hook_length_product", hook_length_product(p).str()},
               {"dimension", specht_dimension(p).str()}};
        if (is_symmetric(p))
            j["split_class"] = symmetric_partition_class(p).lengths.str();
        if (opt.format == "json") std::cout << j.dump(2) << "\n";
        else
            for (auto& [k, v] : j.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        return kExitPass;
    }
    require_n(opt.n, 1, 20, "dims");
    json rows = json::array();
    for (const auto& p : partitions_of(opt.n)) {
        rows.push_back({{"partition", p.str()},
                        {"dimension", specht_dimension(p).str()},
                        {"shape", to_string(classify_shape(p))},
                        {"symmetric", is_symmetric(p)}});
    }
    if (opt.format == "json") {
        std::cout << json{{"n", opt.n}, {"partitions", rows}}.dump(2) << "\n";
    } else {
        for (const auto& r : rows)
            std::cout << std::left << std::setw(20) << r["partition"].get<std::string>() << std::right
                      << std::setw(12) << r["dimension"].get<std::string>() << "  "
                      << r["shape"].get<std::string>() << (r["symmetric"].get<bool>() ? "  symmetric" : "")
                      << "\n";
    }
    return kExitPass;
}

// --- split-classes ----------------------------------------------------------

int run_split_classes(const Options& opt) {
    require_n(opt.n, 3, 12, "split-classes");
    const auto classes = conjugacy_classes(opt.n, GroupKind::Alt);
    json rows = json::array();
    for (const auto& c : classes) {
        json j{{"cycle_type", c.cycle_type.lengths.str()},
               {"split_tag", to_string(c.split_tag)},
               {"size", c.size.str()}};
        if (c.split_tag != SplitTag::NonSplit) {
            j["representative"] = c.representative.cycle_string();
            j["symmetric_partition"] = split_class_partition(c.cycle_type).str();
        }
        rows.push_back(std::move(j));
    }
    if (opt.format == "json") {
        std::cout << json{{"n", opt.n}, {"classes", rows}}.dump(2) << "\n";
        return kExitPass;
    }
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(24) << r["cycle_type"].get<std::string>() << std::setw(14)
                  << r["split_tag"].get<std::string>() << std::right << std::setw(10)
                  << r["size"].get<std::string>();
        if (r.contains("symmetric_partition"))
            std::cout << "   <-> " << r["symmetric_partition"].get<std::string>() << "   rep "
                      << r["representative"].get<std::string>();
        std::cout << "\n";
    }
    return kExitPass;
}

// --- clique ------------------------------------------------------------------

int run_clique(const Options& opt, bool odd) {
    CliqueWitness w;
    if (odd) {
        require_n(opt.n, 5, 11, "clique odd");
        if (opt.n % 2 == 0) throw CLI::ValidationError("clique odd requires odd --n");
        w = odd_clique(opt.n);
    } else {
        require_n(opt.n, 6, 10, "clique even");
        if (opt.n % 2 == 1) throw CLI::ValidationError("clique even requires even --n");
        w = even_clique(opt.n, resolve_cache_dir(opt));
    }
    const CheckReport rep = validate_clique_witness(w);
    if (opt.format == "json") {
        json out = witness_to_json(w);
        out["provenance"] = to_string(w.provenance);
        out["validation"] = rep.to_json();
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "clique witness, n=" << w.n << ", kind=" << to_string(w.kind) << ", provenance="
                  << to_string(w.provenance) << "\n";
        for (const auto& m : w.members) std::cout << "  " << m.cycle_string() << "\n";
        print_report_text(rep);
    }
    return rep.pass ? kExitPass : kExitFail;
}

// --- graph export -------------------------------------------------------------

int run_graph(const Options& opt) {
    // Character-based spectrum needs no adjacency matrix and reaches n = 9.
    if (opt.with_spectrum && opt.dot_path.empty() && opt.bin_path.empty() && opt.n == 9) {
        const Spectrum sp = graph_spectrum(opt.n);
        if (opt.format == "json") {
            json lines = json::array();
            for (const auto& l : sp.lines)
                lines.push_back({{"eigenvalue", l.eigenvalue.str()}, {"multiplicity", l.multiplicity.str()}});
            std::cout << json{{"n", opt.n}, {"spectrum", lines}}.dump(2) << "\n";
        } else {
            for (const auto& l : sp.lines)
                std::cout << "  eigenvalue " << l.eigenvalue << "  multiplicity " << l.multiplicity << "\n";
        }
        return kExitPass;
    }
    // Out-of-range n surfaces as a resource error (exit 3): the adjacency
    // bitset is the memory-bound object here.
    const DerangementGraph g = build_derangement_graph(opt.n);
    std::vector<CheckReport> reps;
    if (!opt.dot_path.empty()) {
        std::ofstream out(opt.dot_path);
        if (!out) throw CLI::ValidationError("cannot open " + opt.dot_path);
        write_dot(out, g);
    }
    if (!opt.bin_path.empty()) {
        std::ofstream out(opt.bin_path, std::ios::binary);
        if (!out) throw CLI::ValidationError("cannot open " + opt.bin_path);
        write_graph_binary(out, g);
    }
    if (opt.with_spectrum) {
        const Spectrum sp = graph_spectrum(opt.n);
        if (opt.format == "text") {
            std::cout << "vertices " << g.vertex_count() << ", valency " << g.valency() << "\n";
            for (const auto& l : sp.lines)
                std::cout << "  eigenvalue " << l.eigenvalue << "  multiplicity " << l.multiplicity << "\n";
        }
        if (opt.n <= 6) reps.push_back(certify_spectrum(g, sp));
    }
    if (reps.empty()) {
        if (opt.format == "text") std::cout << "graph on " << g.vertex_count() << " vertices written\n";
        return kExitPass;
    }
    return emit_reports(opt, reps);
}

// --- verify -------------------------------------------------------------------

std::vector<int> witness_indices(const GroupTable& g, const CliqueWitness& w) {
    std::vector<int> idx;
    for (const auto& m : w.members) idx.push_back(g.index_of(m));
    return idx;
}

CheckReport verify_clique_chars(const Options& opt) {
    require_n(opt.n, 5, 9, "verify clique-chars");
    const CliqueWitness w = maximum_clique(opt.n, resolve_cache_dir(opt));
    CheckReport rep = verify_clique_character_nonvanishing(w);
    if (opt.n % 2 == 1) {
        const CheckReport ineq = hook_split_inequality_check(opt.n);
        rep.pass = rep.pass && ineq.pass;
        rep.witnesses["hook_split_inequality"] = ineq.to_json();
    }
    return rep;
}

CheckReport verify_coclique(const Options& opt) {
    require_n(opt.n, 5, 8, "verify coclique");
    const auto g = make_group(opt.n, GroupKind::Alt);
    const CliqueWitness w = maximum_clique(opt.n, resolve_cache_dir(opt));
    return clique_coclique_check(*g, witness_indices(*g, w), g->coset_indices(1, 1));
}

CheckReport verify_basis_cmd(const Options& opt) {
    require_n(opt.n, 4, 7, "verify basis");
    CheckReport rep = verify_standard_basis(opt.n);
    if (opt.n <= 6) {
        const auto g = make_group(opt.n, GroupKind::Alt);
        const CheckReport mem = verify_standard_module_membership(g, g->coset_indices(1, 1));
        rep.pass = rep.pass && mem.pass;
        rep.witnesses["membership_S11"] = mem.to_json();
    }
    return rep;
}

CheckReport verify_reconstruct_cmd(const Options& opt) {
    require_n(opt.n, 5, 6, "verify reconstruct");
    Stopwatch sw;
    CheckReport rep;
    rep.check = "reconstruct";
    rep.n = opt.n;
    rep.anchor = "sec6:reconstruction";
    const auto g = make_group(opt.n, GroupKind::Alt);
    json cosets = json::array();
    if (opt.n == 5) {
        const EnumerationResult en = enumerate_max_independent_sets(g);
        if (!en.report.pass) {
            rep.pass = false;
            rep.witnesses["enumeration"] = en.report.to_json();
            return rep;
        }
        for (const auto& s : en.sets) {
            const ReconstructionResult r = reconstruct_any(g, s);
            if (!r.report.pass) {
                rep.fail("reconstruction", r.report.to_json());
                break;
            }
            cosets.push_back({r.coset_i, r.coset_j});
        }
    } else {
        for (int i = 1; i <= opt.n; ++i)
            for (int j = 1; j <= opt.n; ++j) {
                const ReconstructionResult r = reconstruct_any(g, g->coset_indices(i, j));
                if (!r.report.pass) {
                    rep.fail("reconstruction", r.report.to_json());
                    break;
                }
                if (r.coset_i != i || r.coset_j != j) {
                    rep.fail("wrong_coset", json{{"expected", {i, j}}, {"got", {r.coset_i, r.coset_j}}});
                    break;
                }
                cosets.push_back({r.coset_i, r.coset_j});
            }
    }
    rep.witnesses["cosets"] = cosets;
    rep.ms = sw.ms();
    return rep;
}

CheckReport verify_enumerate_cmd(const Options& opt) {
    require_n(opt.n, 5, 6, "verify enumerate");
    if (opt.n == 6 && !opt.long_running)
        throw CLI::ValidationError("verify enumerate --n 6 is long-running; pass --long");
    const auto g = make_group(opt.n, GroupKind::Alt);
    return enumerate_max_independent_sets(g).report;
}

CheckReport verify_two_layer_cmd(const Options& opt) {
    if (opt.n % 2 != 0) throw CLI::ValidationError("verify two-layer requires even --n");
    require_n(opt.n, 8, 14, "verify two-layer");
    Stopwatch sw;
    const TwoLayerScanReport scan = two_layer_minus_two_classification(opt.n);
    CheckReport rep;
    rep.check = "two-layer-classification";
    rep.n = opt.n;
    rep.anchor = "sec4:minus-two-cases";
    rep.pass = scan.pass();
    json minus_two = json::array();
    for (const auto& row : scan.rows)
        if (row.value == -2)
            minus_two.push_back({{"partition", row.lambda.str()},
                                 {"shape", to_string(row.shape)},
                                 {"symmetric", row.symmetric},
                                 {"dimension", row.dimension.str()}});
    rep.witnesses["partitions_scanned"] = scan.rows.size();
    rep.witnesses["minus_two_cases"] = minus_two;
    if (!scan.value_violations.empty()) rep.witnesses["value_violations"] = scan.value_violations.size();
    if (!scan.shape_violations.empty()) rep.witnesses["shape_violations"] = scan.shape_violations.size();
    if (!scan.dimension_violations.empty())
        rep.witnesses["dimension_violations"] = scan.dimension_violations.size();
    rep.ms = sw.ms();
    return rep;
}

void dump_for(const Options& opt, const std::string& what) {
    if (opt.dump_dir.empty()) return;
    const auto g = make_group(opt.n, GroupKind::Alt);
    if (what == "basis") {
        const IntMatrix h = standard_basis_matrix(*g);
        dump_matrix(opt, "H-n" + std::to_string(opt.n) + ".txt", h);
        dump_matrix(opt, "HtH-n" + std::to_string(opt.n) + ".txt", h.transpose() * h);
    } else if (what == "abar" || what == "rank-m") {
        const BlockSystem bs = build_block_system(g);
        dump_matrix(opt, "Abar-n" + std::to_string(opt.n) + ".txt", bs.abar);
        dump_matrix(opt, "M-n" + std::to_string(opt.n) + ".txt", bs.m_block);
    }
}

std::vector<CheckReport> run_verify(const Options& opt, const std::string& what) {
    std::vector<CheckReport> reps;
    if (what == "clique-chars") reps.push_back(verify_clique_chars(opt));
    else if (what == "coclique") reps.push_back(verify_coclique(opt));
    else if (what == "basis") { reps.push_back(verify_basis_cmd(opt)); dump_for(opt, what); }
    else if (what == "abar") { require_n(opt.n, 4, 7, "verify abar"); reps.push_back(verify_abar_reduction(opt.n)); dump_for(opt, what); }
    else if (what == "rank-m") { require_n(opt.n, 5, 7, "verify rank-m"); reps.push_back(verify_M_fullrank(opt.n)); dump_for(opt, what); }
    else if (what == "x-bound") { require_n(opt.n, 5, 8, "verify x-bound"); reps.push_back(verify_X_bound(opt.n)); }
    else if (what == "reconstruct") reps.push_back(verify_reconstruct_cmd(opt));
    else if (what == "enumerate") reps.push_back(verify_enumerate_cmd(opt));
    else if (what == "transfer") { require_n(opt.n, 5, 7, "verify transfer"); reps.push_back(transfer_strict_ekr_check(opt.n, opt.n <= 6)); }
    else if (what == "two-layer") reps.push_back(verify_two_layer_cmd(opt));
    else if (what == "all") {
        const int n = opt.n;
        if (n % 2 == 0 && n >= 8 && n <= 14) reps.push_back(verify_two_layer_cmd(opt));
        if (n >= 5 && n <= 9) reps.push_back(verify_clique_chars(opt));
        if (n >= 5 && n <= 8) reps.push_back(verify_coclique(opt));
        if (n >= 4 && n <= 7) reps.push_back(verify_basis_cmd(opt));
        if (n >= 4 && n <= 7) reps.push_back(verify_abar_reduction(n));
        if (n >= 5 && n <= 7) reps.push_back(verify_M_fullrank(n));
        if (n >= 5 && n <= 8) reps.push_back(verify_X_bound(n));
        if (n >= 5 && n <= 6) reps.push_back(verify_reconstruct_cmd(opt));
        if (n == 5 || (n == 6 && opt.long_running)) reps.push_back(verify_enumerate_cmd(opt));
        if (n >= 5 && n <= 7) reps.push_back(transfer_strict_ekr_check(n, n <= 6));
        if (n >= 4 && n <= 6) {
            const Spectrum sp = graph_spectrum(n);
            reps.push_back(certify_spectrum(build_derangement_graph(n), sp));
        }
        if (reps.empty())
            throw CLI::ValidationError("verify all: no applicable checks for this n");
    } else {
        throw CLI::ValidationError("unknown verify target '" + what + "'");
    }
    return reps;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for intersecting families in the alternating group"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--threads", opt.threads, "thread budget (0 = hardware)");

    auto add_common = [&](CLI::App* cmd, bool needs_n = true) {
        if (needs_n) {
            cmd->add_option("--n", opt.n, "number of points");
            cmd->add_option("n_pos", opt.n, "number of points (positional)");
        }
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--cache-dir", opt.cache_dir, "witness cache directory");
        cmd->add_flag("--long", opt.long_running, "allow long-running searches");
        cmd->add_option("--dump-dir", opt.dump_dir, "write matrices as text for external cross-checks");
    };

    auto* ct = app.add_subcommand("char-table", "irreducible character table of Alt(n)");
    add_common(ct);
    auto* dims = app.add_subcommand("dims", "partition shapes and Specht dimensions");
    add_common(dims);
    dims->add_option("--partition", opt.partition, "single partition, e.g. 4,2^2,1^2");
    auto* sc = app.add_subcommand("split-classes", "conjugacy classes with split tags");
    add_common(sc);

    auto* clique = app.add_subcommand("clique", "construct a maximum clique witness");
    auto* clique_odd = clique->add_subcommand("odd", "odd n: Hamiltonian-cycle decomposition");
    add_common(clique_odd);
    auto* clique_even = clique->add_subcommand("even", "even n: half-cycle-pair decomposition");
    add_common(clique_even);
    clique->require_subcommand(1);

    auto* graph = app.add_subcommand("graph", "derangement graph exports");
    add_common(graph);
    graph->add_option("--dot", opt.dot_path, "write DOT file");
    graph->add_option("--bin", opt.bin_path, "write binary bitset file");
    graph->add_flag("--spectrum", opt.with_spectrum, "print exact spectrum (certified for n <= 6)");

    auto* verify = app.add_subcommand("verify", "run a verification check");
    std::string target;
    verify->add_option("target", target,
                       "clique-chars | coclique | basis | abar | rank-m | x-bound | reconstruct | "
                       "enumerate | transfer | two-layer | all")
        ->required();
    add_common(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitPass : kExitUsage;
    }

    thread_budget() = opt.threads;

    try {
        if (ct->parsed()) return run_char_table(opt);
        if (dims->parsed()) return run_dims(opt);
        if (sc->parsed()) return run_split_classes(opt);
        if (clique->parsed()) return run_clique(opt, clique_odd->parsed());
        if (graph->parsed()) return run_graph(opt);
        if (verify->parsed()) return emit_reports(opt, run_verify(opt, target));
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const resource_error& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
