#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "tcg/graph.hpp"
#include "tcg/kuratowski.hpp"
#include "tcg/numtheory.hpp"
#include "tcg/spectral.hpp"
#include "tcg/verify.hpp"

using nlohmann::ordered_json;

namespace {

struct RunConfig {
    int n = 0;
    int from = 0, to = 0;
    std::string format = "text";
    std::string out;
    double tol = 1e-12;
    std::uint64_t seed = tcg::kDefaultSeed;
    int max_exact_clique = 64;
    int max_exact_kappa = 128;
    int max_matrix = tcg::kMaxMatrixOrder;
    int threads = 0;

    tcg::VerifyCaps caps() const {
        tcg::VerifyCaps c;
        c.max_exact_clique = max_exact_clique;
        c.max_exact_kappa = max_exact_kappa;
        c.max_matrix = max_matrix;
        c.eigen_tol = tol;
        c.seed = seed;
        return c;
    }
};

void add_common_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--out", cfg.out, "Write output to this path instead of stdout");
    cmd->add_option("--tol", cfg.tol, "Eigensolver convergence factor")
        ->envname("TCG_TOL")
        ->check(CLI::Range(1e-300, 1e-3));
    cmd->add_option("--seed", cfg.seed, "Seed for the modular-rank primes")->envname("TCG_SEED");
    cmd->add_option("--max-exact-clique", cfg.max_exact_clique,
                    "Largest n for the exact clique search")
        ->envname("TCG_MAX_EXACT_CLIQUE")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-exact-kappa", cfg.max_exact_kappa,
                    "Largest n for exact vertex connectivity")
        ->envname("TCG_MAX_EXACT_KAPPA")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-matrix", cfg.max_matrix, "Largest matrix order for spectra")
        ->envname("TCG_MAX_MATRIX")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--threads", cfg.threads, "Worker threads (0 = library default)")
        ->envname("TCG_THREADS");
}

void apply_threads(const RunConfig& cfg) {
#ifdef _OPENMP
    if (cfg.threads > 0)
        omp_set_num_threads(cfg.threads);
#else
    (void)cfg;
#endif
}

int emit(const RunConfig& cfg, const std::string& text) {
    if (cfg.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(cfg.out);
    if (!f) {
        std::cerr << "error: cannot open " << cfg.out << " for writing\n";
        return 1;
    }
    f << text;
    if (!f.good()) {
        std::cerr << "error: failed writing " << cfg.out << "\n";
        return 1;
    }
    return 0;
}

std::string json_dump(const ordered_json& j) { return j.dump(2) + "\n"; }

// ---- analyze ----

ordered_json analyze_json(const RunConfig& cfg) {
    const int n = cfg.n;
    const auto g = tcg::CoprimeGraph::build(static_cast<std::uint32_t>(n));
    const auto tables = tcg::PrimeTables::build(static_cast<std::uint32_t>(std::max(n, 2)));

    ordered_json j;
    j["schema"] = 1;
    j["n"] = n;
    j["edges"] = g.edge_count();
    auto d = tcg::diameter(g);
    j["diameter"] = d ? ordered_json(*d) : ordered_json("infinity");
    auto gi = tcg::girth(g);
    j["girth"] = gi ? ordered_json(*gi) : ordered_json("infinity");
    j["complete"] = g.is_complete();
    auto b = tcg::is_bipartite(g);
    j["bipartite"] = b.bipartite;
    if (!b.bipartite)
        j["odd_cycle"] = b.odd_cycle;
    if (n >= 3) {
        j["triangulated"] = tcg::every_vertex_on_triangle(g).covered;
        auto ch = tcg::is_chordal(g);
        j["chordal"] = ch.chordal;
        if (!ch.chordal)
            j["chordless_cycle"] = ch.hole;
    }

    ordered_json clique;
    clique["expected_size"] = tables.pi(static_cast<std::uint32_t>(n)) + 1;
    if (n <= cfg.max_exact_clique) {
        auto best = tcg::max_clique_exact(g, cfg.max_exact_clique);
        clique["size"] = best.vertices.size();
        clique["vertices"] = best.vertices;
        clique["exact"] = true;
    } else if (n >= 2) {
        auto w = tcg::prime_clique(g, tables);
        clique["size"] = w.vertices.size();
        clique["maximal"] = w.is_maximal;
        clique["exact"] = false;
    }
    j["clique"] = clique;

    auto p = tcg::planarity_status(g);
    j["planar"] = p.planar;
    if (!p.planar)
        j["k5_witness"] = p.k5_witness;

    if (n >= 4) {
        auto cut = tcg::primorial_cut(g);
        j["kappa_upper_bound"] = cut.removed.size();
        j["cut"] = {{"removed", cut.removed}, {"isolated", cut.isolated_vertex}};
        if (n <= cfg.max_exact_kappa)
            j["kappa_exact"] = tcg::vertex_connectivity_exact(g, cfg.max_exact_kappa);
    }

    if (n == 7) {
        auto w = tcg::tcg7_crossing_witnesses(g);
        j["crossing"] = {{"edge_count", w.edge_count},
                         {"planar_edge_bound", w.planar_edge_bound},
                         {"edge_bound_exceeded", w.edge_bound_exceeded},
                         {"k5_a_complete", w.k5_a_complete},
                         {"k5_b_complete", w.k5_b_complete},
                         {"k33_present", w.k33_present}};
    }
    return j;
}

std::string analyze_text(const ordered_json& j) {
    std::ostringstream os;
    os << "coprime graph on 1.." << j["n"].get<int>() << "\n";
    for (const auto& [key, value] : j.items()) {
        if (key == "schema" || key == "n")
            continue;
        os << "  " << key << ": " << value.dump() << "\n";
    }
    return os.str();
}

int cmd_analyze(const RunConfig& cfg) {
    apply_threads(cfg);
    ordered_json j = analyze_json(cfg);
    return emit(cfg, cfg.format == "json" ? json_dump(j) : analyze_text(j));
}

// ---- spectrum ----

int cmd_spectrum(const RunConfig& cfg) {
    apply_threads(cfg);
    const int n = cfg.n;
    if (n > cfg.max_matrix) {
        std::cerr << "error: n = " << n << " exceeds --max-matrix = " << cfg.max_matrix << "\n";
        return 1;
    }
    const auto g = tcg::CoprimeGraph::build(static_cast<std::uint32_t>(n));
    const auto tables = tcg::PrimeTables::build(static_cast<std::uint32_t>(std::max(n, 2)));
    const auto A = tcg::SymmetricIntMatrix::adjacency(g);
    const auto spec = tcg::eigenvalues(A, cfg.tol);

    const int mult_zero = tcg::exact_eigen_multiplicity(A, 0, cfg.seed);
    const int mult_minus_one = tcg::exact_eigen_multiplicity(A, -1, cfg.seed);
    const auto dom = tcg::dominating_primes(tables, static_cast<std::uint32_t>(n));
    const int nullity_bound =
        n >= 2 ? static_cast<int>(tcg::nullity_lower_bound(tables, static_cast<std::uint32_t>(n)))
               : 0;

    if (cfg.format == "csv")
        return emit(cfg, tcg::spectrum_csv_row(n, spec) + "\n");
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["n"] = n;
        j["seed"] = cfg.seed;
        j["spectrum"] = tcg::spectrum_json(spec);
        j["exact_multiplicity"] = {{"zero", mult_zero}, {"minus_one", mult_minus_one}};
        j["bounds"] = {{"dominating_primes", dom.size()}, {"nullity_lower_bound", nullity_bound}};
        j["spectral_radius"] = tcg::spectral_radius(spec);
        return emit(cfg, json_dump(j));
    }
    std::ostringstream os;
    os << "adjacency spectrum, n = " << n << "\n  eigenvalues:";
    char buf[32];
    auto print4 = [&](double v) {
        double r = std::round(v * 1e4) / 1e4;
        if (r == 0.0)
            r = 0.0; // avoid "-0.0000"
        std::snprintf(buf, sizeof buf, " %.4f", r);
        os << buf;
    };
    for (double v : spec.values)
        print4(v);
    os << "\n  clusters:";
    for (const auto& c : spec.clusters) {
        print4(c.value);
        os << " (x" << c.multiplicity << ")";
    }
    os << "\n  exact multiplicity of 0: " << mult_zero
       << " (lower bound " << nullity_bound << ")\n"
       << "  exact multiplicity of -1: " << mult_minus_one
       << " (lower bound " << dom.size() << ")\n"
       << "  spectral radius: " << tcg::spectral_radius(spec) << "\n";
    return emit(cfg, os.str());
}

// ---- verify ----

int cmd_verify(RunConfig cfg) {
    apply_threads(cfg);
    if (cfg.from < 1) {
        std::cerr << "warning: clamping --from to 1\n";
        cfg.from = 1;
    }
    if (cfg.to < cfg.from) {
        std::cerr << "error: --to must be >= --from\n";
        return 2;
    }
    auto reports = tcg::range_verify(cfg.from, cfg.to, cfg.caps());
    const bool cover_table = cfg.from <= 3 && cfg.to >= 15;
    tcg::SpectrumTableResult table;
    if (cover_table)
        table = tcg::verify_reference_spectra(0.01, cfg.caps());

    int failures = 0;
    std::ostringstream os;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["from"] = cfg.from;
        j["to"] = cfg.to;
        j["reports"] = ordered_json::array();
        for (const auto& r : reports) {
            failures += r.failures();
            j["reports"].push_back(r.to_json());
        }
        if (cover_table) {
            j["reference_spectra"] = table.to_json();
            failures += table.all_pass ? 0 : 1;
        }
        j["failures"] = failures;
        os << j.dump(2) << "\n";
    } else {
        for (const auto& r : reports) {
            failures += r.failures();
            os << "n = " << r.n << ": ";
            if (r.all_passed())
                os << "all checks pass\n";
            else {
                os << r.failures() << " FAILED\n";
                for (const auto& c : r.checks)
                    if (c.status == tcg::CheckStatus::fail)
                        os << "  FAIL " << c.name << ": computed " << c.computed.dump()
                           << " vs " << c.bound_or_expected.dump() << "\n";
            }
        }
        if (cover_table) {
            os << "reference spectra 3..15: " << (table.all_pass ? "match" : "MISMATCH") << "\n";
            for (const auto& r : table.rows)
                if (!r.pass)
                    os << "  n=" << r.n << " deviation " << r.max_deviation << "\n";
            failures += table.all_pass ? 0 : 1;
        }
        os << (failures == 0 ? "OK" : "FAILURES: " + std::to_string(failures)) << "\n";
    }
    int rc = emit(cfg, os.str());
    return rc != 0 ? rc : (failures == 0 ? 0 : 1);
}

// ---- export ----

int cmd_export(const RunConfig& cfg) {
    apply_threads(cfg);
    const auto g = tcg::CoprimeGraph::build(static_cast<std::uint32_t>(cfg.n));
    if (cfg.format == "dot")
        return emit(cfg, tcg::to_dot(g));
    if (cfg.format == "csv") {
        if (cfg.n > cfg.max_matrix) {
            std::cerr << "error: n exceeds --max-matrix\n";
            return 1;
        }
        auto spec = tcg::eigenvalues(tcg::SymmetricIntMatrix::adjacency(g), cfg.tol);
        return emit(cfg, tcg::spectrum_csv_row(cfg.n, spec) + "\n");
    }
    std::cerr << "error: export supports --format dot or csv\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"coprime graph laboratory: structure, spectra, and theorem checks"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* analyze = app.add_subcommand("analyze", "Structural invariants of the graph on 1..n");
    analyze->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    analyze->add_option("--format", cfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    add_common_flags(analyze, cfg);

    auto* spectrum = app.add_subcommand("spectrum", "Adjacency eigenvalues and multiplicities");
    spectrum->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--format", cfg.format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    add_common_flags(spectrum, cfg);

    auto* verify = app.add_subcommand("verify", "Check every claim over a range of n");
    verify->add_option("--from", cfg.from, "First n")->required();
    verify->add_option("--to", cfg.to, "Last n")->required();
    verify->add_option("--format", cfg.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    add_common_flags(verify, cfg);

    auto* exp = app.add_subcommand("export", "DOT of the graph or CSV of the spectrum");
    exp->add_option("--n", cfg.n, "Vertex count")->required()->check(CLI::PositiveNumber);
    exp->add_option("--format", cfg.format, "dot|csv")
        ->check(CLI::IsMember({"dot", "csv"}));
    add_common_flags(exp, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(cfg);
        if (spectrum->parsed())
            return cmd_spectrum(cfg);
        if (verify->parsed())
            return cmd_verify(cfg);
        if (exp->parsed())
            return cmd_export(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
