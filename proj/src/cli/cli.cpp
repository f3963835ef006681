#include "spectree/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "spectree/checks.hpp"
#include "spectree/closedform.hpp"
#include "spectree/families.hpp"
#include "spectree/io.hpp"
#include "spectree/spectra.hpp"
#include "spectree/trees.hpp"

namespace spectree::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string sig6(double x) {
    if (std::abs(x) < 1e-12) x = 0.0;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

struct GraphSource {
    std::string family;
    std::string file;
    bool line = false;

    void attach(CLI::App* cmd, bool allow_line) {
        cmd->add_option("--family", family, "family descriptor, e.g. tkst:1,2,2 or book:3");
        cmd->add_option("--file", file, "graph JSON file");
        if (allow_line) cmd->add_flag("--line", line, "use the line graph");
    }

    Graph load() const {
        if (family.empty() == file.empty()) throw UsageError("give exactly one of --family or --file");
        Graph g = family.empty() ? read_file() : build(parse_family(family));
        return line ? line_graph(g).graph : g;
    }

private:
    Graph read_file() const {
        std::ifstream in(file);
        if (!in) throw UsageError("cannot open " + file);
        std::stringstream buf;
        buf << in.rdbuf();
        return graph_from_json(buf.str());
    }
};

NumericOptions numeric_options(double tol_flag) {
    NumericOptions opt;
    if (const char* env = std::getenv("SPECTREE_TOL"); env && *env) {
        char* end = nullptr;
        const double v = std::strtod(env, &end);
        if (*end != '\0' || !(v > 0.0)) throw UsageError("SPECTREE_TOL must be a positive number");
        opt.jacobi_tol = v;
    }
    if (tol_flag > 0.0) opt.jacobi_tol = tol_flag;
    return opt;
}

void print_spectrum(const Spectrum& s, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << to_json(s) << '\n';
        return;
    }
    if (format == "csv") out << "value,multiplicity\n";
    for (const auto& p : s.pairs()) {
        if (format == "csv") {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.17g", p.value);
            out << buf << ',' << p.multiplicity << '\n';
        } else {
            out << sig6(p.value) << "  x" << p.multiplicity << '\n';
        }
    }
}

int emit_report(const VerificationReport& r, const std::string& format, std::ostream& out) {
    out << (format == "json" ? to_json(r) + "\n" : to_text(r));
    return r.ok() ? kExitOk : kExitCheckFailed;
}

std::string csv_real(double x) {
    if (std::abs(x) < 1e-12) x = 0.0;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

void export_double_star(std::size_t max, const NumericOptions& opt, std::ostream& out) {
    out << "s,t,m,a_beta,integral\n";
    for (std::size_t s = 1; s <= max; ++s) {
        for (std::size_t t = 1; t <= s; ++t) {
            const Graph tree = double_broom(1, s, t);
            for (std::size_t m = 2; m <= 7; ++m) {
                const double a = a_beta_m(tree, m, opt);
                const bool integral = all_integral(laplacian_spectrum(beta_m(tree, m), opt));
                out << s << ',' << t << ',' << m << ',' << csv_real(a) << ',' << (integral ? 1 : 0) << '\n';
            }
        }
    }
}

void export_trees(std::size_t max, const NumericOptions& opt, std::ostream& out) {
    out << "n,index,code,a";
    for (std::size_t m = 2; m <= 7; ++m) out << ",beta_" << m;
    out << '\n';
    for (std::size_t n = 3; n <= max; ++n) {
        const auto trees = enumerate_free_trees(n);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            out << n << ',' << i << ',' << tree_canonical_form(trees[i]) << ','
                << csv_real(algebraic_connectivity(trees[i], opt));
            for (std::size_t m = 2; m <= 7; ++m) out << ',' << csv_real(a_beta_m(trees[i], m, opt));
            out << '\n';
        }
    }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Laplacian spectra of line graphs of trees and their tensor products with complete graphs",
                 "spectree"};
    app.require_subcommand(1);

    std::string format = "text";
    double tol = 0.0;
    std::size_t m = 2;
    auto common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        cmd->add_option("--tol", tol, "eigensolver tolerance")->check(CLI::PositiveNumber);
    };

    GraphSource source;

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Laplacian or Q_{m-1} spectrum of a graph");
    std::string matrix = "laplacian";
    source.attach(spectrum_cmd, true);
    spectrum_cmd->add_option("--matrix", matrix, "laplacian or q")->check(CLI::IsMember({"laplacian", "q"}));
    spectrum_cmd->add_option("--m", m, "m for Q_{m-1}")->check(CLI::Range(2, 1000));
    common(spectrum_cmd);

    auto* aconn_cmd = app.add_subcommand("aconn", "algebraic connectivity");
    source.attach(aconn_cmd, true);
    common(aconn_cmd);

    auto* beta_cmd = app.add_subcommand("beta", "a(L(X) x K_m) of a tree X by both routes");
    source.attach(beta_cmd, false);
    beta_cmd->add_option("--m", m, "order of the complete factor")->check(CLI::Range(2, 1000));
    common(beta_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "run a claim check");
    std::string claim;
    ClaimParams params;
    verify_cmd->add_option("claim", claim, "claim id")->required()->check(CLI::IsMember(claim_ids()));
    verify_cmd->add_option("--max-n", params.max_n, "largest tree order")->check(CLI::Range(3, 10));
    verify_cmd->add_option("--m", params.m, "order of the complete factor")->check(CLI::Range(2, 7));
    verify_cmd->add_option("--check-tol", params.tol, "comparison tolerance")->check(CLI::PositiveNumber);
    common(verify_cmd);

    auto* table_cmd = app.add_subcommand("table2", "recompute the reference table");
    common(table_cmd);

    auto* enum_cmd = app.add_subcommand("enumerate", "free trees on n vertices");
    std::size_t order = 0;
    enum_cmd->add_option("--n", order, "tree order")->required()->check(CLI::Range(1, 10));
    common(enum_cmd);

    auto* export_cmd = app.add_subcommand("export", "CSV of a parameter sweep");
    std::string sweep;
    std::size_t max = 6;
    export_cmd->add_option("--sweep", sweep, "double-star or trees")
        ->required()
        ->check(CLI::IsMember({"double-star", "trees"}));
    export_cmd->add_option("--max", max, "largest s (double-star) or n (trees)")->check(CLI::Range(1, 10));
    export_cmd->add_option("--tol", tol, "eigensolver tolerance")->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    try {
        const NumericOptions opt = numeric_options(tol);
        params.numeric = opt;

        if (*spectrum_cmd) {
            const Graph g = source.load();
            print_spectrum(matrix == "q" ? q_spectrum(g, m, opt) : laplacian_spectrum(g, opt), format, out);
        } else if (*aconn_cmd) {
            const double a = algebraic_connectivity(source.load(), opt);
            if (format == "json") {
                out << nlohmann::json{{"aconn", a}}.dump() << '\n';
            } else {
                out << (format == "csv" ? csv_real(a) : sig6(a)) << '\n';
            }
        } else if (*beta_cmd) {
            const auto b = beta_connectivity(source.load(), m, opt);
            if (format == "json") {
                nlohmann::ordered_json j{{"m", m},           {"a", b.value},    {"scaled_line", b.scaled_line},
                                         {"q_min", b.q_min}, {"direct", b.direct}, {"connected", b.connected}};
                out << j.dump() << '\n';
            } else if (format == "csv") {
                out << "m,a,scaled_line,q_min,direct,connected\n"
                    << m << ',' << csv_real(b.value) << ',' << csv_real(b.scaled_line) << ',' << csv_real(b.q_min)
                    << ',' << csv_real(b.direct) << ',' << (b.connected ? 1 : 0) << '\n';
            } else {
                out << sig6(b.value) << '\n'
                    << "decomposed " << sig6(b.value) << " (scaled line " << sig6(b.scaled_line) << ", q_min "
                    << sig6(b.q_min) << ")\n"
                    << "direct     " << sig6(b.direct) << '\n'
                    << "connected  " << (b.connected ? "yes" : "no") << '\n';
            }
        } else if (*verify_cmd) {
            return emit_report(run_claim(claim, params), format, out);
        } else if (*table_cmd) {
            return emit_report(reproduce_reference_table(kTableTol, opt), format, out);
        } else if (*enum_cmd) {
            const auto trees = enumerate_free_trees(order);
            if (format == "json") {
                out << '[';
                for (std::size_t i = 0; i < trees.size(); ++i) out << (i ? "," : "") << to_json(trees[i]);
                out << "]\n";
            } else {
                if (format == "csv") out << "index,edges\n";
                for (std::size_t i = 0; i < trees.size(); ++i) {
                    std::string edges;
                    for (const auto& e : trees[i].edges())
                        edges += (edges.empty() ? "" : " ") + std::to_string(e.u) + "-" + std::to_string(e.v);
                    out << (format == "csv" ? std::to_string(i) + "," : "") << edges << '\n';
                }
            }
        } else if (*export_cmd) {
            if (sweep == "double-star") {
                export_double_star(max, opt, out);
            } else {
                if (max > 8) throw UsageError("tree sweep supports --max up to 8");
                export_trees(max, opt, out);
            }
        }
    } catch (const UsageError& e) {
        err << "spectree: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "spectree: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "spectree: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitOk;
}

}  // namespace spectree::cli
