#include "hpi/errors.hpp"
#include "hpi/json_io.hpp"
#include "hpi/tables.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace hpi;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitUnsupportedModify = 3;
constexpr int kExitInternal = 4;

struct Options {
    std::string format = "text";
};

void print_expansion(const SchurExpansion& f, const std::string& format) {
    if (format == "json")
        std::cout << to_json(f) << "\n";
    else
        std::cout << f.str() << "\n";
}

int run_series(const std::string& name, int degree, std::optional<int> max_length,
               const std::string& format) {
    TruncatedSeries s = series_coeffs(SeriesId::parse(name), degree);
    if (max_length) s.body = s.body.filtered_max_length(*max_length);
    if (format == "json")
        std::cout << to_json(s) << "\n";
    else
        std::cout << s.body.str() << "\n";
    return 0;
}

int run_pleth(const std::string& base, const std::string& exp, const std::string& format) {
    SchurExpansion r = plethysm(SchurExpansion::basis(Partition::parse(base)),
                                SchurExpansion::basis(Partition::parse(exp)));
    print_expansion(r, format);
    return 0;
}

FormalCharacter apply_modification(const FormalCharacter& f, const Partition& pi,
                                   std::optional<int> n) {
    if (pi == Partition{1, 1, 1} && n && *n == 3) return sl3_modify(f);
    if (pi == Partition{1, 1, 1} && n && *n == 4) return h13_4_modify(f);
    throw unsupported_pi("--modify supports (pi,n) = ([1,1,1],3) and ([1,1,1],4)");
}

void print_character(const FormalCharacter& f, const std::string& format) {
    if (format == "json")
        std::cout << to_json(f) << "\n";
    else if (format == "paper-table")
        std::cout << f.paper_str(f.n().has_value()) << "\n";
    else
        std::cout << f.str(f.n().has_value()) << "\n";
}

int run_branch(const std::string& lambda, const std::string& pi, std::optional<int> n,
               bool modify, const std::string& format) {
    FormalCharacter f =
        branch_gl_to_hpi(Partition::parse(lambda), Partition::parse(pi), n);
    if (modify) f = apply_modification(f, f.pi(), n);
    print_character(f, format);
    return 0;
}

int run_product(const std::string& mu, const std::string& nu, const std::string& pi,
                std::optional<int> n, bool modify, const std::string& format) {
    FormalCharacter f = product_hpi(Partition::parse(mu), Partition::parse(nu),
                                    Partition::parse(pi), n);
    if (modify) f = apply_modification(f, f.pi(), n);
    print_character(f, format);
    return 0;
}

int run_table(const std::string& which, int rows, const std::string& format) {
    if (format == "json") {
        const BranchTableSpec& spec = branch_table_spec(which);
        std::cout << "[";
        bool first = true;
        for (const auto& row : branch_table_rows(spec, rows)) {
            if (!first) std::cout << ",";
            first = false;
            std::cout << "{\"lambda\":" << to_json(SchurExpansion::basis(row.lambda))
                      << ",\"dim\":" << row.dim
                      << ",\"branched\":" << to_json(row.branched) << "}";
        }
        std::cout << "]\n";
        return 0;
    }
    std::cout << render_branch_table(which, rows);
    return 0;
}

int run_dim(const std::string& mu, const std::string& pi, int n) {
    std::cout << dim_formal(Partition::parse(mu), Partition::parse(pi), n) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Schur-function series, plethysms and GL(n) > H_pi branchings"};
    app.require_subcommand(1);

    std::string format = "text";

    auto* series = app.add_subcommand("series", "expand a Schur function series");
    std::string series_name;
    int series_degree = 10;
    std::optional<int> series_max_length;
    series->add_option("--name", series_name, "L..W, Mpi:[parts] or Lpi:[parts]")
        ->required();
    series->add_option("--degree", series_degree, "weight cutoff");
    series->add_option("--max-length", series_max_length,
                       "keep only terms of at most this length");
    series->add_option("--format", format, "text|json");

    auto* pleth = app.add_subcommand("pleth", "plethysm of two Schur functions");
    std::string pleth_base, pleth_exp;
    pleth->add_option("--base", pleth_base)->required();
    pleth->add_option("--exp", pleth_exp)->required();
    pleth->add_option("--format", format, "text|json");

    auto* branch = app.add_subcommand("branch", "branch a GL character to H_pi");
    std::string br_lambda, br_pi;
    std::optional<int> br_n;
    bool br_modify = false;
    branch->add_option("--lambda", br_lambda)->required();
    branch->add_option("--pi", br_pi)->required();
    branch->add_option("--n", br_n, "matrix size; enables dimension subscripts");
    branch->add_flag("--modify", br_modify, "apply modification rules");
    branch->add_option("--format", format, "text|json|paper-table");

    auto* product = app.add_subcommand("product", "pi-Newell-Littlewood product");
    std::string pr_mu, pr_nu, pr_pi;
    std::optional<int> pr_n;
    bool pr_modify = false;
    product->add_option("--mu", pr_mu)->required();
    product->add_option("--nu", pr_nu)->required();
    product->add_option("--pi", pr_pi)->required();
    product->add_option("--n", pr_n);
    product->add_flag("--modify", pr_modify);
    product->add_option("--format", format, "text|json|paper-table");

    auto* table = app.add_subcommand("table", "reproduce a published branching table");
    std::string tb_which;
    int tb_rows = -1;
    table->add_option("--which", tb_which, "h13_3|h13_4|h3_4|h21_4|h13_4_appendix")
        ->required();
    table->add_option("--rows", tb_rows, "number of rows (default: all)");
    table->add_option("--format", format, "paper-table|json");

    auto* dim = app.add_subcommand("dim", "dimension of a formal character");
    std::string dim_mu, dim_pi;
    int dim_n = 0;
    dim->add_option("--mu", dim_mu)->required();
    dim->add_option("--pi", dim_pi)->required();
    dim->add_option("--n", dim_n)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (series->parsed())
            return run_series(series_name, series_degree, series_max_length, format);
        if (pleth->parsed()) return run_pleth(pleth_base, pleth_exp, format);
        if (branch->parsed())
            return run_branch(br_lambda, br_pi, br_n, br_modify, format);
        if (product->parsed())
            return run_product(pr_mu, pr_nu, pr_pi, pr_n, pr_modify, format);
        if (table->parsed()) return run_table(tb_which, tb_rows, format);
        if (dim->parsed()) return run_dim(dim_mu, dim_pi, dim_n);
    } catch (const unsupported_pi& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedModify;
    } catch (const unsupported_length& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedModify;
    } catch (const no_known_rule& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupportedModify;
    } catch (const internal_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
