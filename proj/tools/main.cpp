#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "examples_fixture.hpp"
#include "examples_table.hpp"
#include "mvd/canonical.hpp"
#include "mvd/errors.hpp"
#include "mvd/matrix_io.hpp"
#include "mvd/patterns.hpp"
#include "mvd/reducer.hpp"
#include "mvd/serialize.hpp"
#include "mvd/star_pattern.hpp"
#include "mvd/sweep.hpp"
#include "mvd/tangent.hpp"

namespace {

using namespace mvd;

// exit codes: 0 success, 1 analysis failure, 2 input error
constexpr int kExitOk = 0;
constexpr int kExitAnalysis = 1;
constexpr int kExitInput = 2;

struct LoadedStructure {
    CanonicalStructure structure;  // canonicalized
    std::vector<int> permutation;
    bool reordered = false;
};

double parse_exact_double(const std::string& s) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size())
        throw std::invalid_argument("malformed number '" + s + "'");
    return v;
}

// Compact structure shorthand: blocks separated by spaces or '+', e.g.
//   "H1(2) G2 J3"  or  "H2(0.5,-1) + J1"
// H lambdas are "re" or "re,im" pairs; the excluded-value checks run on the
// exactly parsed values.
CanonicalStructure parse_shorthand(const std::string& text) {
    CanonicalStructure s;
    std::string cleaned = text;
    for (char& c : cleaned)
        if (c == '+') c = ' ';
    std::istringstream in(cleaned);
    std::string tok;
    while (in >> tok) {
        size_t p = 0;
        const char kind = static_cast<char>(std::toupper(tok[p++]));
        if (kind == 'G' && tok.rfind("Gamma", 0) == 0) p = 5;
        if (kind == 'J' && p < tok.size() && tok[p] == '0' && p + 1 < tok.size() &&
            std::isdigit(static_cast<unsigned char>(tok[p + 1])))
            ++p;  // allow "J0<k>"
        size_t digits = p;
        while (digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[digits])))
            ++digits;
        if (digits == p) throw std::invalid_argument("block '" + tok + "' is missing its size");
        const int size = std::stoi(tok.substr(p, digits - p));
        if (kind == 'H') {
            if (digits >= tok.size() || tok[digits] != '(' || tok.back() != ')')
                throw std::invalid_argument("H block '" + tok +
                                            "' needs a lambda, e.g. H1(2) or H1(0,1)");
            const std::string args = tok.substr(digits + 1, tok.size() - digits - 2);
            const size_t comma = args.find(',');
            const double re = parse_exact_double(args.substr(0, comma));
            const double im =
                comma == std::string::npos ? 0.0 : parse_exact_double(args.substr(comma + 1));
            s.blocks.push_back(CanonicalBlock::h(size, cplx(re, im)));
        } else if (kind == 'G') {
            s.blocks.push_back(CanonicalBlock::gamma(size));
        } else if (kind == 'J') {
            s.blocks.push_back(CanonicalBlock::jordan_zero(size));
        } else {
            throw std::invalid_argument("unknown block kind in '" + tok + "'");
        }
    }
    if (s.blocks.empty()) throw std::invalid_argument("empty structure description");
    return s;
}

LoadedStructure load_structure(const std::string& arg) {
    CanonicalStructure raw;
    std::string trimmed = arg;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\n"));
    if (!trimmed.empty() && trimmed.front() == '{') {
        raw = structure_from_json(json::parse(trimmed));
    } else if (std::ifstream in(arg); in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        raw = structure_from_json(json::parse(buf.str()));
    } else if (arg.find('/') != std::string::npos ||
               (arg.size() > 5 && arg.compare(arg.size() - 5, 5, ".json") == 0)) {
        throw std::invalid_argument("cannot open structure file '" + arg + "'");
    } else {
        raw = parse_shorthand(arg);
    }
    LoadedStructure out;
    auto [canon, perm] = canonicalize(raw);
    out.structure = std::move(canon);
    out.permutation = std::move(perm);
    for (size_t k = 0; k < out.permutation.size(); ++k)
        if (out.permutation[k] != static_cast<int>(k)) out.reordered = true;
    out.structure.validate();
    return out;
}

// A_can entries and the star grid, row by row.
std::string side_by_side(const ComplexMatrix& a, const StarPattern& d) {
    std::ostringstream os;
    size_t width = 1;
    std::vector<std::string> cells(static_cast<size_t>(a.rows()) * a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            std::string& cell = cells[static_cast<size_t>(i * a.cols() + j)];
            cell = format_entry(a(i, j));
            if (cell.size() > 3 && cell.compare(cell.size() - 3, 3, "+0j") == 0)
                cell.resize(cell.size() - 3);  // compact pure-real entries
            width = std::max(width, cell.size());
        }
    for (int i = 0; i < a.rows(); ++i) {
        os << "  ";
        for (int j = 0; j < a.cols(); ++j) {
            const std::string& cell = cells[static_cast<size_t>(i * a.cols() + j)];
            os << std::string(width - cell.size(), ' ') << cell;
            if (j + 1 < a.cols()) os << ' ';
        }
        os << "  |  ";
        for (int j = 1; j <= d.cols(); ++j) {
            os << (d.contains(i + 1, j) ? '*' : '0');
            if (j < d.cols()) os << ' ';
        }
        os << '\n';
    }
    return os.str();
}

json structure_note(const LoadedStructure& ls) {
    json j = structure_to_json(ls.structure);
    if (ls.reordered) j["canonical_order_permutation"] = ls.permutation;
    return j;
}

int cmd_pattern(const LoadedStructure& ls, const std::string& format, double lambda_tol) {
    PatternOptions opts;
    opts.lambda_tol = lambda_tol;
    const ComplexMatrix a = assemble(ls.structure);
    const StarPattern d = full_pattern(ls.structure, opts);
    if (format == "json") {
        json out = structure_note(ls);
        out["a_can"] = write_matrix_text(a);
        out["pattern"] = pattern_to_json(d);
        out["codimension"] = d.size();
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << ls.structure.label() << "   (codim " << d.size() << ")\n";
        if (ls.reordered) std::cout << "note: blocks reordered into canonical order\n";
        std::cout << side_by_side(a, d);
    }
    return kExitOk;
}

int cmd_codim(const LoadedStructure& ls, const std::string& format) {
    const int codim = codimension(ls.structure);
    if (format == "json") {
        json out = structure_note(ls);
        out["codimension"] = codim;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << codim << '\n';
    }
    return kExitOk;
}

void print_report_line(const std::string& label, const TransversalityReport& r) {
    std::cout << label << ": " << to_string(r.verdict) << "  (dim " << r.dim << ", tangent rank "
              << r.tangent_rank << ", stars " << r.pattern_stars << ", combined rank "
              << r.combined_rank << ")\n";
    for (const std::string& w : r.warnings) std::cout << "  warning: " << w << '\n';
}

int cmd_verify_one(const LoadedStructure& ls, double tol, const std::string& format) {
    const ComplexMatrix a = assemble(ls.structure);
    const StarPattern d = full_pattern(ls.structure);
    TransversalityReport r = check_transversality(a, d, tol);
    r.warnings = lambda_warnings(ls.structure);
    if (format == "json") {
        json out = structure_note(ls);
        out["report"] = report_to_json(r);
        std::cout << out.dump(2) << '\n';
    } else {
        print_report_line(ls.structure.label(), r);
    }
    return r.verdict == Verdict::DirectSum ? kExitOk : kExitAnalysis;
}

int cmd_verify_sweep(int n_max, int cases, std::uint64_t seed, double tol,
                     const std::string& format) {
    int failures = 0;
    json all = json::array();
    for (int c = 0; c < cases; ++c) {
        const CanonicalStructure s = sweep_structure(seed, c, n_max);
        const ComplexMatrix a = assemble(s);
        const StarPattern d = full_pattern(s);
        TransversalityReport r = check_transversality(a, d, tol);
        r.warnings = lambda_warnings(s);
        const bool ok = r.verdict == Verdict::DirectSum;
        if (!ok) ++failures;
        if (format == "json") {
            all.push_back(json{{"case", c},
                               {"structure", structure_to_json(s)},
                               {"report", report_to_json(r)}});
        } else if (!ok) {
            print_report_line("case " + std::to_string(c) + "  " + s.label(), r);
        }
    }
    if (format == "json") {
        std::cout << json{{"cases", cases}, {"failures", failures}, {"reports", all}}.dump(2)
                  << '\n';
    } else {
        std::cout << cases << " cases, " << failures << " failures\n";
    }
    return failures == 0 ? kExitOk : kExitAnalysis;
}

int cmd_greedy(const LoadedStructure& ls, double tol, const std::string& format) {
    const ComplexMatrix a = assemble(ls.structure);
    const StarPattern g = greedy_miniversal(a, tol);
    const int codim = codimension(ls.structure);
    const bool match = g.size() == codim;
    if (format == "json") {
        json out = structure_note(ls);
        out["greedy_pattern"] = pattern_to_json(g);
        out["greedy_stars"] = g.size();
        out["codimension"] = codim;
        out["count_matches"] = match;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << ls.structure.label() << ": greedy keeps " << g.size()
                  << " units, table codimension " << codim << (match ? "" : "  MISMATCH") << '\n'
                  << g.render() << '\n';
    }
    return match ? kExitOk : kExitAnalysis;
}

int cmd_split(const LoadedStructure& ls, const std::string& format) {
    const ComplexMatrix a = assemble(ls.structure);
    const StarPattern d = full_pattern(ls.structure);
    const SymSkewPair p = split_sym_skew(a);
    // a star parameter at (i,j) feeds both (i,j) and (j,i) of each part
    StarPattern spread(d.rows(), d.cols());
    for (const auto& [i, j] : d.stars()) {
        spread.add(i, j);
        spread.add(j, i);
    }
    if (format == "json") {
        json out = structure_note(ls);
        out["sym"] = write_matrix_text(p.sym);
        out["skew"] = write_matrix_text(p.skew);
        out["pattern"] = pattern_to_json(d);
        out["symmetrized_pattern"] = pattern_to_json(spread);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "symmetric part  (star parameters spread to (i,j) and (j,i)):\n"
                  << side_by_side(p.sym, spread) << "skew-symmetric part:\n"
                  << side_by_side(p.skew, spread);
    }
    return kExitOk;
}

int cmd_reduce(const LoadedStructure& ls, const std::string& e_path, const ReduceOptions& opts,
               double tol, const std::string& trace_path, const std::string& format) {
    const ComplexMatrix a = assemble(ls.structure);
    const StarPattern d = full_pattern(ls.structure);
    const ComplexMatrix e = load_matrix_file(e_path);
    if (e.rows() != a.rows() || e.cols() != a.cols())
        throw std::invalid_argument("E must be " + std::to_string(a.rows()) + "x" +
                                    std::to_string(a.cols()) + " to match the structure");
    const ReducerSetup setup = prepare(a, d, tol);
    const ReductionResult r = reduce(setup, e, opts);

    if (!trace_path.empty()) {
        std::ofstream out(trace_path);
        if (!out) throw std::runtime_error("cannot write trace file '" + trace_path + "'");
        for (const TraceRecord& rec : r.trace.records)
            out << trace_record_to_json(rec).dump() << '\n';
    }
    if (format == "json") {
        json out = structure_note(ls);
        out["eps_max"] = setup.eps_max;
        out["result"] = result_to_json(r);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << (r.converged ? "converged" : "did not converge") << " after "
                  << r.trace.iterations << " iterations, masked residual " << r.residual << '\n'
                  << (r.in_certified_basin ? "inside" : "outside") << " the certified basin (eps "
                  << r.eps << ", eps_max " << setup.eps_max << ")\n"
                  << "deformation D:\n"
                  << write_matrix_text(r.d);
    }
    return r.converged ? kExitOk : kExitAnalysis;
}

int cmd_examples() {
    const std::string table = examples_table();
    std::cout << table;
    if (table != kExamplesFixture) {
        std::cerr << "error: regenerated table differs from the vendored fixture\n";
        return kExitAnalysis;
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "mvd - deformation patterns of complex matrices under congruence.\n"
        "Builds congruence canonical forms, their minimal deformation star\n"
        "patterns, verifies transversality by rank tests, and reduces\n"
        "perturbed matrices onto the pattern by an explicit congruence.\n"};
    app.require_subcommand(1);

    std::string structure_arg, format = "text", e_path, trace_path;
    double tol = kDefaultRankTol, lambda_tol = 0.0;
    ReduceOptions ropts;
    int sweep_dim = 0, sweep_cases = 100;
    std::uint64_t seed = 0;

    const auto add_structure = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--structure,-s", structure_arg,
                                    "structure as inline JSON, a JSON file path, or shorthand "
                                    "like \"H1(2) G2 J1\" (H lambdas take re or re,im)");
        if (required) opt->required();
        return opt;
    };
    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* pattern = app.add_subcommand("pattern", "print A_can and its deformation pattern");
    add_structure(pattern);
    add_format(pattern);
    pattern->add_option("--lambda-tol", lambda_tol,
                        "tolerance for lambda coincidence tests (default exact)");

    auto* codim = app.add_subcommand("codim", "print the codimension (star count)");
    add_structure(codim);
    add_format(codim);

    auto* verify = app.add_subcommand(
        "verify", "rank-test that tangent space and pattern span the matrix space directly");
    add_structure(verify, false);
    add_format(verify);
    verify->add_option("--tol", tol, "rank tolerance");
    verify->add_option("--sweep", sweep_dim, "sweep random structures up to this dimension");
    verify->add_option("--cases", sweep_cases, "number of sweep cases");
    verify->add_option("--seed", seed, "sweep seed");

    auto* greedy = app.add_subcommand("greedy", "greedy unit-completion pattern and star count");
    add_structure(greedy);
    add_format(greedy);
    greedy->add_option("--tol", tol, "rank tolerance");

    auto* reduce_cmd = app.add_subcommand(
        "reduce", "reduce A_can + E onto the pattern by the congruence iteration");
    add_structure(reduce_cmd);
    add_format(reduce_cmd);
    reduce_cmd->add_option("--e", e_path, "perturbation matrix file (text format)")->required();
    reduce_cmd->add_option("--eps", ropts.eps, "certificate epsilon (default: just below eps_max)");
    reduce_cmd->add_option("--stop-tol", ropts.stop_tol,
                           "stop when the masked residual drops below this");
    reduce_cmd->add_option("--max-iter", ropts.max_iter, "iteration cap");
    reduce_cmd->add_option("--tol", tol, "solver tolerance for the F precomputation");
    reduce_cmd->add_option("--trace", trace_path, "write per-iteration JSON lines here");

    auto* examples = app.add_subcommand(
        "examples", "print the 2x2 and 3x3 deformation table and diff it against the fixture");

    auto* split = app.add_subcommand(
        "split", "symmetric/skew-symmetric split of A_can with the pattern spread over both");
    add_structure(split);
    add_format(split);

    CLI11_PARSE(app, argc, argv);

    try {
        if (examples->parsed()) return cmd_examples();
        if (verify->parsed()) {
            if (sweep_dim > 0) return cmd_verify_sweep(sweep_dim, sweep_cases, seed, tol, format);
            if (structure_arg.empty())
                throw std::invalid_argument("verify needs --structure or --sweep");
            return cmd_verify_one(load_structure(structure_arg), tol, format);
        }
        const LoadedStructure ls = load_structure(structure_arg);
        if (pattern->parsed()) return cmd_pattern(ls, format, lambda_tol);
        if (codim->parsed()) return cmd_codim(ls, format);
        if (greedy->parsed()) return cmd_greedy(ls, tol, format);
        if (split->parsed()) return cmd_split(ls, format);
        if (reduce_cmd->parsed()) return cmd_reduce(ls, e_path, ropts, tol, trace_path, format);
    } catch (const NotSpanning& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitInput;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << '\n';
        return kExitInput;
    }
    return kExitOk;
}
