#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "estrada/bounds.hpp"
#include "estrada/compare.hpp"
#include "estrada/errors.hpp"
#include "estrada/graph.hpp"
#include "estrada/graph6.hpp"
#include "estrada/invariants.hpp"
#include "estrada/matrix_io.hpp"
#include "estrada/render.hpp"
#include "estrada/scan.hpp"

namespace {

using namespace estrada;

constexpr int kExitPartial = 1;
constexpr int kExitUsage = 2;
constexpr int kExitViolations = 3;

struct Range {
    int lo = 0;
    int hi = 0;
};

std::optional<Range> parse_range(const std::string& text) {
    try {
        const auto dots = text.find("..");
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return Range{n, n};
        }
        const int lo = std::stoi(text.substr(0, dots));
        const int hi = std::stoi(text.substr(dots + 2));
        if (lo > hi) return std::nullopt;
        return Range{lo, hi};
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

Format parse_format(const std::string& name) {
    return name == "json" ? Format::json : Format::csv;
}

DasVariant parse_variant(const std::string& name) {
    return name == "as_printed" ? DasVariant::as_printed : DasVariant::corrected;
}

// Reads graph6 lines from `in`, invoking `handle` per graph. Malformed lines
// are skipped with a warning; returns the number of skipped lines.
template <typename Handler>
int for_each_graph(std::istream& in, const Handler& handle) {
    std::string line;
    int lineno = 0;
    int skipped = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            handle(parse_graph6(line));
        } catch (const std::exception& e) {
            std::cerr << "warning: line " << lineno << ": " << e.what() << '\n';
            ++skipped;
        }
    }
    return skipped;
}

struct InputStream {
    std::istream* stream = nullptr;
    std::ifstream file;

    bool open(const std::string& path) {
        if (path.empty()) {
            stream = &std::cin;
            return true;
        }
        file.open(path);
        if (!file) return false;
        stream = &file;
        return true;
    }
};

int run_gen(const std::string& family_arg, const std::string& params) {
    const auto family = family_from_name(family_arg);
    if (!family) {
        std::cerr << "error: unknown family '" << family_arg << "'\n";
        return kExitUsage;
    }
    try {
        if (*family == Family::complete_bipartite) {
            const auto comma = params.find(',');
            if (comma == std::string::npos) {
                std::cerr << "error: complete_bipartite takes parameters p,q\n";
                return kExitUsage;
            }
            const int p = std::stoi(params.substr(0, comma));
            const int q = std::stoi(params.substr(comma + 1));
            std::cout << encode_graph6(generate(FamilySpec::complete_bipartite(p, q))) << '\n';
            return 0;
        }
        const auto range = parse_range(params);
        if (!range) {
            std::cerr << "error: bad range '" << params << "' (expected N or LO..HI)\n";
            return kExitUsage;
        }
        for (int n = range->lo; n <= range->hi; ++n) {
            FamilySpec spec;
            spec.kind = *family;
            spec.size = n;
            std::cout << encode_graph6(generate(spec)) << '\n';
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

int run_invariants(const std::string& input, Format format) {
    InputStream in;
    if (!in.open(input)) {
        std::cerr << "error: cannot open '" << input << "'\n";
        return kExitUsage;
    }
    if (format == Format::csv) std::cout << kInvariantsCsvHeader << '\n';
    const int skipped = for_each_graph(*in.stream, [&](const Graph& g) {
        const InvariantSet inv = compute_invariants(g);
        const std::string token = encode_graph6(g);
        if (format == Format::csv) {
            render_invariants_csv(std::cout, token, inv);
        } else {
            render_invariants_json(std::cout, token, inv);
        }
    });
    return skipped ? kExitPartial : 0;
}

int run_bounds(const std::string& input, Format format, DasVariant variant,
               BoundTolerances tols) {
    InputStream in;
    if (!in.open(input)) {
        std::cerr << "error: cannot open '" << input << "'\n";
        return kExitUsage;
    }
    if (format == Format::csv) std::cout << kBoundsCsvHeader << '\n';
    const int skipped = for_each_graph(*in.stream, [&](const Graph& g) {
        const BoundReport report = evaluate_all(g, variant, tols);
        if (format == Format::csv) {
            render_bounds_csv(std::cout, report);
        } else {
            render_bounds_json(std::cout, report);
        }
    });
    return skipped ? kExitPartial : 0;
}

int run_compare(const std::string& families_arg, const std::string& range_arg, Format format) {
    std::vector<Family> families;
    std::string token;
    std::istringstream split(families_arg);
    while (std::getline(split, token, ',')) {
        const auto family = family_from_name(token);
        if (!family || (*family != Family::star && *family != Family::path &&
                        *family != Family::complete && *family != Family::cycle)) {
            std::cerr << "error: unknown comparison family '" << token
                      << "' (expected star, path, complete, cycle)\n";
            return kExitUsage;
        }
        families.push_back(*family);
    }
    const auto range = parse_range(range_arg);
    if (families.empty() || !range) {
        std::cerr << "error: usage: compare FAMILY[,FAMILY...] N|LO..HI\n";
        return kExitUsage;
    }
    if (format == Format::csv) std::cout << kCompareCsvHeader << '\n';
    for (Family family : families) {
        for (int n = range->lo; n <= range->hi; ++n) {
            try {
                const CompareRow row = compare_row(family, n);
                if (format == Format::csv) {
                    render_compare_csv(std::cout, row);
                } else {
                    render_compare_json(std::cout, row);
                }
            } catch (const OverflowGuard& e) {
                std::cerr << "note: " << family_name(family) << " stopped at n = " << n << ": "
                          << e.what() << '\n';
                break;
            } catch (const InvalidFamilyParam& e) {
                std::cerr << "error: " << family_name(family) << " n = " << n << ": " << e.what()
                          << '\n';
                return kExitUsage;
            }
        }
    }
    return 0;
}

int run_scan(const std::string& input, int exhaustive, bool force, Format format,
             DasVariant variant, BoundTolerances tols, int jobs) {
    ScanOptions opts;
    opts.variant = variant;
    opts.tols = tols;
    opts.jobs = jobs;

    ScanSummary summary;
    int skipped = 0;
    if (exhaustive > 0) {
        if (exhaustive > 8 || (exhaustive > 6 && !force)) {
            std::cerr << "error: exhaustive scan capped at n = 6 (n = 7, 8 with --force; "
                         "larger is unsupported)\n";
            return kExitUsage;
        }
        summary = scan_exhaustive(exhaustive, opts);
    } else {
        InputStream in;
        if (!in.open(input)) {
            std::cerr << "error: cannot open '" << input << "'\n";
            return kExitUsage;
        }
        std::vector<Graph> graphs;
        skipped = for_each_graph(*in.stream, [&](const Graph& g) { graphs.push_back(g); });
        summary = scan_graphs(graphs, opts);
    }

    if (format == Format::csv) {
        render_scan_csv(std::cout, summary);
    } else {
        render_scan_json(std::cout, summary);
    }
    std::cerr << "scan: " << summary.graphs_scanned << " graphs in "
              << format_double(summary.duration_seconds) << " s\n";
    if (summary.has_real_violations()) return kExitViolations;
    return skipped ? kExitPartial : 0;
}

int run_matrix(const std::string& path, Format format, BoundTolerances tols) {
    std::ifstream file(path);
    if (!file) {
        std::cerr << "error: cannot open '" << path << "'\n";
        return kExitUsage;
    }
    try {
        const SymMatrix m = parse_matrix_text(file);
        const MatrixReport report = evaluate_matrix(m, tols);
        if (format == Format::csv) {
            render_matrix_csv(std::cout, report);
        } else {
            render_matrix_json(std::cout, report);
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral graph invariants, Estrada-type indices, and bound verification"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string variant = "corrected";
    BoundTolerances tols;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"csv", "json"}));
    };
    auto add_variant = [&](CLI::App* cmd) {
        cmd->add_option("--variant", variant, "determinant-bound sign variant")
            ->check(CLI::IsMember({"corrected", "as_printed"}));
    };
    auto add_tols = [&](CLI::App* cmd) {
        cmd->add_option("--holds-tol", tols.holds_rel, "relative slack for holds checks");
        cmd->add_option("--eq-tol", tols.eq_rel, "relative window for equality flags");
    };

    auto* gen = app.add_subcommand("gen", "emit graph6 tokens for a named family");
    std::string gen_family, gen_params;
    gen->add_option("family", gen_family,
                    "empty|complete|star|path|cycle|complete_bipartite")
        ->required();
    gen->add_option("params", gen_params, "N, LO..HI, or P,Q for complete_bipartite")->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "per-graph spectral invariants");
    std::string invariants_input;
    invariants_cmd->add_option("input", invariants_input, "graph6 file (default: stdin)");
    add_format(invariants_cmd);

    auto* bounds_cmd = app.add_subcommand("bounds", "per-graph bound catalog evaluation");
    std::string bounds_input;
    bounds_cmd->add_option("input", bounds_input, "graph6 file (default: stdin)");
    add_format(bounds_cmd);
    add_variant(bounds_cmd);
    add_tols(bounds_cmd);

    auto* compare_cmd =
        app.add_subcommand("compare", "family comparison table (estrada vs J vs CP)");
    std::string compare_families, compare_range;
    compare_cmd->add_option("families", compare_families, "comma list of star,path,complete,cycle")
        ->required();
    compare_cmd->add_option("range", compare_range, "N or LO..HI")->required();
    add_format(compare_cmd);

    auto* scan_cmd = app.add_subcommand("scan", "bound soundness sweep over a corpus");
    std::string scan_input;
    int scan_exhaustive_n = 0;
    int scan_jobs = 0;
    bool scan_force = false;
    scan_cmd->add_option("input", scan_input, "graph6 file");
    scan_cmd->add_option("--exhaustive", scan_exhaustive_n,
                         "scan all labeled graphs on N vertices instead of a file");
    scan_cmd->add_option("--jobs", scan_jobs, "worker threads (default: all; 1 = serial)");
    scan_cmd->add_flag("--force", scan_force, "allow exhaustive N of 7 or 8");
    add_format(scan_cmd);
    add_variant(scan_cmd);
    add_tols(scan_cmd);

    auto* matrix_cmd = app.add_subcommand("matrix", "row-sum bound report for a matrix file");
    std::string matrix_path;
    matrix_cmd->add_option("file", matrix_path, "whitespace-separated symmetric matrix")
        ->required();
    add_format(matrix_cmd);
    add_tols(matrix_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    const Format fmt = parse_format(format);
    const DasVariant das = parse_variant(variant);

    if (gen->parsed()) return run_gen(gen_family, gen_params);
    if (invariants_cmd->parsed()) return run_invariants(invariants_input, fmt);
    if (bounds_cmd->parsed()) return run_bounds(bounds_input, fmt, das, tols);
    if (compare_cmd->parsed()) return run_compare(compare_families, compare_range, fmt);
    if (scan_cmd->parsed()) {
        if (scan_input.empty() && scan_exhaustive_n == 0) {
            std::cerr << "error: scan needs an input file or --exhaustive N\n";
            return kExitUsage;
        }
        if (!scan_input.empty() && scan_exhaustive_n != 0) {
            std::cerr << "error: scan takes either an input file or --exhaustive N, not both\n";
            return kExitUsage;
        }
        return run_scan(scan_input, scan_exhaustive_n, scan_force, fmt, das, tols, scan_jobs);
    }
    if (matrix_cmd->parsed()) return run_matrix(matrix_path, fmt, tols);
    return kExitUsage;
}
