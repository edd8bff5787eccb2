// Command-line front end: counting, expansion, verification, fitting, and
// catalog inspection over graph6 files.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jnorm/names.hpp"
#include "jnorm/parse.hpp"
#include "jnorm/verify.hpp"

#ifndef JNORM_GOLDEN_DIR
#define JNORM_GOLDEN_DIR "golden"
#endif

namespace {

using namespace jnorm;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct Options {
    std::string input;
    std::string output;
    std::string format = "text";
    std::string data_dir = default_data_dir();
    std::string golden_dir = JNORM_GOLDEN_DIR;
    std::uint64_t seed = 1;
    int max_n = 7;
    int random_count = 50;
    int jobs = 1;
    int degree = 6;
    int fit_max_n = 6;
};

void write_out(const Options& opt, const std::string& text) {
    if (opt.output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(opt.output);
    if (!out) throw std::runtime_error("cannot open output path: " + opt.output);
    out << text;
}

SmallGraph parse_pattern(const std::string& text) {
    try {
        return named(text);
    } catch (const std::invalid_argument&) {
        return parse_graph6(text);
    }
}

std::vector<std::pair<std::string, SmallGraph>> read_graph6_file(const std::string& path) {
    std::istream* in = &std::cin;
    std::ifstream file;
    if (!path.empty() && path != "-") {
        file.open(path);
        if (!file) throw std::runtime_error("cannot open input file: " + path);
        in = &file;
    }
    std::vector<std::pair<std::string, SmallGraph>> out;
    std::string line;
    int lineno = 0;
    while (std::getline(*in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            out.emplace_back(line, parse_graph6(line));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

CatalogAssignment load_or_resolve_catalog(const Options& opt) {
    std::ifstream in(opt.golden_dir + "/catalog.golden");
    if (in.good()) {
        std::stringstream buffer;
        buffer << in.rdbuf();
        return CatalogAssignment::from_golden(buffer.str());
    }
    return resolve_catalog(load_table(opt.data_dir + "/table.json"));
}

std::string render_jexpr(const JExpr& e, const CatalogAssignment* catalog) {
    std::ostringstream os;
    if (e.is_zero()) {
        os << "0\n";
        return os.str();
    }
    for (const auto& [g, c] : e.terms()) {
        std::string label = emit_graph6(g);
        if (g.n_vertices() == 0) label = "1";
        if (catalog != nullptr) {
            int index = catalog->index_of(g);
            if (index >= 0) label = "g_" + std::to_string(index);
        }
        os << "  (" << c.to_falling_string() << ") * " << label << "\n";
    }
    return os.str();
}

json jexpr_report(const JExpr& e, const CatalogAssignment* catalog) {
    json terms = json::object();
    for (const auto& [g, c] : e.terms()) {
        json entry;
        json monomial = json::array();
        for (const auto& x : c.coefficients()) monomial.push_back(to_string(x));
        json falling = json::array();
        for (const auto& x : c.to_falling_basis()) falling.push_back(to_string(x));
        entry["monomial"] = std::move(monomial);
        entry["falling"] = std::move(falling);
        if (catalog != nullptr) {
            int index = catalog->index_of(g);
            if (index >= 0) entry["index"] = index;
        }
        terms[emit_graph6(g)] = std::move(entry);
    }
    return terms;
}

int run_count(const Options& opt, const std::string& pattern_text) {
    SmallGraph pattern = parse_pattern(pattern_text);
    auto hosts = read_graph6_file(opt.input);
    std::ostringstream os;
    json rows = json::array();
    for (const auto& [line, host] : hosts) {
        auto s = s_count(pattern, host);
        auto j = j_count(pattern, host);
        if (opt.format == "json") {
            rows.push_back({{"graph6", line}, {"s", s}, {"j", j}});
        } else {
            os << line << "\ts=" << s << "\tj=" << j << "\n";
        }
    }
    write_out(opt, opt.format == "json" ? rows.dump(2) + "\n" : os.str());
    return kExitOk;
}

int run_expand(const Options& opt, const std::string& spec_text) {
    TermSpec term = parse_term_spec(spec_text);
    if (term.vertex_budget() > 6)
        throw std::invalid_argument("factor vertex budget over 5");
    JExpr e = expand_term(term);
    CatalogAssignment catalog;
    const CatalogAssignment* catalog_ptr = nullptr;
    try {
        catalog = load_or_resolve_catalog(opt);
        catalog_ptr = &catalog;
    } catch (const std::exception&) {
        // No golden and no data; print plain graph6 keys instead.
    }
    if (opt.format == "json") {
        write_out(opt, jexpr_report(e, catalog_ptr).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "normal form of sum over v of " << spec_text << ":\n"
           << render_jexpr(e, catalog_ptr);
        write_out(opt, os.str());
    }
    return kExitOk;
}

int run_verify_table(const Options& opt) {
    auto lines = load_table(opt.data_dir + "/table.json");
    CatalogAssignment assignment = resolve_catalog(lines);
    auto reports = verify_table(lines, assignment);
    std::ostringstream os;
    json entries = json::array();
    int failed = 0;
    for (const auto& rep : reports) {
        if (!rep.pass) ++failed;
        if (opt.format == "json") {
            entries.push_back({{"line", rep.id},
                               {"lhs", rep.lhs_text},
                               {"pass", rep.pass},
                               {"detail", rep.detail}});
        } else {
            os << "line " << rep.id << ": " << (rep.pass ? "PASS" : "FAIL");
            if (!rep.pass) os << "  " << rep.detail;
            os << "\n";
        }
    }
    if (opt.format == "json") {
        json doc = {{"lines", entries}, {"failed", failed}, {"total", reports.size()}};
        write_out(opt, doc.dump(2) + "\n");
    } else {
        os << (failed == 0 ? "all lines check out" : "FAILURES: " + std::to_string(failed))
           << " (" << (reports.size() - failed) << "/" << reports.size() << ")\n";
        write_out(opt, os.str());
    }
    return failed == 0 ? kExitOk : kExitVerificationFailure;
}

int run_verify_identity(const Options& opt, bool symbolic, bool numeric) {
    if (!symbolic && !numeric) symbolic = numeric = true;
    IdentitySpec identity = load_identity(opt.data_dir + "/identity.json");
    bool ok = true;
    std::ostringstream os;
    json doc;
    if (symbolic) {
        JExpr total = verify_identity_symbolic(identity);
        bool zero = total.is_zero();
        ok = ok && zero;
        if (opt.format == "json") {
            doc["symbolic"] = {{"zero", zero}, {"residual_terms", total.term_count()}};
        } else {
            os << "symbolic: " << (zero ? "PASS (all terms cancel)" : "FAIL") << "\n";
            if (!zero) os << render_jexpr(total, nullptr);
        }
    }
    if (numeric) {
        NumericReport report =
            verify_identity_numeric(identity, opt.max_n, opt.random_count, opt.seed, opt.jobs);
        ok = ok && report.nonzero == 0;
        if (opt.format == "json") {
            doc["numeric"] = {{"hosts", report.hosts_checked},
                              {"nonzero", report.nonzero},
                              {"failures", report.failures},
                              {"max_n", opt.max_n},
                              {"random_count", opt.random_count},
                              {"seed", opt.seed}};
        } else {
            os << "numeric: " << report.nonzero << " nonzero residuals over "
               << report.hosts_checked << " hosts ("
               << (report.nonzero == 0 ? "PASS" : "FAIL") << ")\n";
            for (const auto& f : report.failures) os << "  nonzero on " << f << "\n";
        }
    }
    write_out(opt, opt.format == "json" ? doc.dump(2) + "\n" : os.str());
    return ok ? kExitOk : kExitVerificationFailure;
}

int run_fit(const Options& opt, const std::string& spec_text) {
    TermSpec term = parse_term_spec(spec_text);
    JExpr fitted = fit_coefficients(term, opt.fit_max_n, opt.degree, opt.seed);
    JExpr expanded = expand_term(term);
    bool agree = fitted == expanded;
    CatalogAssignment catalog;
    const CatalogAssignment* catalog_ptr = nullptr;
    try {
        catalog = load_or_resolve_catalog(opt);
        catalog_ptr = &catalog;
    } catch (const std::exception&) {
    }
    if (opt.format == "json") {
        json doc = {{"fit", jexpr_report(fitted, catalog_ptr)}, {"matches_expansion", agree}};
        write_out(opt, doc.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "fitted normal form of sum over v of " << spec_text << ":\n"
           << render_jexpr(fitted, catalog_ptr)
           << (agree ? "matches the expansion engine\n"
                     : "DISAGREES with the expansion engine\n");
        write_out(opt, os.str());
    }
    return agree ? kExitOk : kExitVerificationFailure;
}

int run_catalog(const Options& opt, bool write_golden) {
    auto lines = load_table(opt.data_dir + "/table.json");
    CatalogAssignment assignment = resolve_catalog(lines);
    if (write_golden) {
        std::string path = opt.golden_dir + "/catalog.golden";
        std::ofstream out(path);
        if (!out) throw std::runtime_error("cannot write golden file: " + path);
        out << assignment.to_golden();
        std::cout << "wrote " << path << "\n";
        return kExitOk;
    }
    if (opt.format == "json") {
        json rows = json::array();
        for (const auto& e : assignment.entries) {
            rows.push_back({{"index", e.index},
                            {"graph6", emit_graph6(e.graph)},
                            {"provenance", e.provenance == Provenance::named_in_text
                                               ? "named-in-text"
                                               : "resolved-by-matching"},
                            {"name", e.name}});
        }
        write_out(opt, rows.dump(2) + "\n");
    } else {
        write_out(opt, assignment.to_golden());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact expansions of neighborhood subgraph counts into the "
                 "signed injection count basis"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--output", opt.output, "write the report to this path");
    app.add_option("--data-dir", opt.data_dir, "directory with table.json and identity.json");
    app.add_option("--golden-dir", opt.golden_dir, "directory with catalog.golden");
    app.add_option("--seed", opt.seed, "random seed for generated hosts");
    app.add_option("--jobs", opt.jobs, "worker threads for verification sweeps");

    std::string pattern_text, spec_text;
    auto add_subcommand = [&app](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->fallthrough();  // global options may follow the subcommand
        return sub;
    };
    auto* count = add_subcommand("count", "s and j counts of a pattern in graph6 hosts");
    count->add_option("pattern", pattern_text, "graph name or graph6")->required();
    count->add_option("--input", opt.input, "graph6 file, one host per line (- for stdin)");

    auto* expand = add_subcommand("expand", "normal form of a term spec");
    expand->add_option("spec", spec_text, "e.g. \"s(K_1,+) s(K_2,-)\"");

    auto* vtable = add_subcommand("verify-table", "check the tabulated expansions");

    bool symbolic = false, numeric = false;
    auto* videntity = add_subcommand("verify-identity", "check the subgraph counting identity");
    videntity->add_flag("--symbolic", symbolic, "symbolic cancellation only");
    videntity->add_flag("--numeric", numeric, "brute-force evaluation only");
    videntity->add_option("--max-n", opt.max_n, "exhaustive host size bound");
    videntity->add_option("--random-count", opt.random_count, "number of random 12-vertex hosts");

    auto* fit = add_subcommand("fit", "recover the normal form by exact linear fitting");
    fit->add_option("spec", spec_text, "term spec to fit");
    fit->add_option("--max-n", opt.fit_max_n, "exhaustive host size bound for equations");
    fit->add_option("--degree", opt.degree, "degree bound for the coefficients");

    bool write_golden = false;
    auto* catalog = add_subcommand("catalog", "resolved catalog of graph classes");
    catalog->add_flag("--write-golden", write_golden, "write catalog.golden and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (count->parsed()) return run_count(opt, pattern_text);
        if (expand->parsed()) return run_expand(opt, spec_text);
        if (vtable->parsed()) return run_verify_table(opt);
        if (videntity->parsed()) return run_verify_identity(opt, symbolic, numeric);
        if (fit->parsed()) return run_fit(opt, spec_text);
        if (catalog->parsed()) return run_catalog(opt, write_golden);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
