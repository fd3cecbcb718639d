#include "hpi/tables.hpp"

#include "hpi/errors.hpp"

#include <sstream>

namespace hpi {

namespace {

std::vector<Partition> parse_rows(const char* const* labels, std::size_t count) {
    std::vector<Partition> rows;
    rows.reserve(count);
    for (std::size_t i = 0; i < count; ++i) rows.push_back(Partition::parse(labels[i]));
    return rows;
}

// Row orders as published.
const char* const kRows13[] = {
    "[0]", "[1]", "[1,1]", "[1,1,1]", "[1^4]",
    "[2]", "[2,1]", "[2,1,1]", "[2,1,1,1]",
    "[2,2]", "[2,2,1]", "[2,2,1,1]", "[2,2,2]", "[2,2,2,1]", "[2,2,2,2]",
    "[3]", "[3,1]", "[3,1,1]", "[3,1,1,1]", "[3,2]",
};

const char* const kRowsH3[] = {
    "[0]", "[1]", "[1,1]", "[1,1,1]", "[1^4]", "[1^5]", "[1^6]",
    "[2]", "[2,1]", "[2,1,1]", "[2,1,1,1]", "[2,1^4]",
    "[2,2]", "[2,2,1]", "[2,2,1,1]", "[2,2,1,1,1]",
    "[3]", "[3,1]", "[3,1,1]", "[3,1,1,1]", "[3,1^4]",
    "[3,2]", "[3,2,1]", "[3,2,1,1]", "[3,2,1,1,1]",
    "[3,3]", "[3,3,1]", "[3,3,1,1]", "[3,3,1,1,1]", "[3,3,1^4]",
    "[4]", "[4,1]", "[4,1,1]", "[4,1,1,1]", "[4,1^4]", "[4,2]",
};

const char* const kRowsH21[] = {
    "[0]", "[1]", "[1,1]", "[1,1,1]", "[1^4]",
    "[2]", "[2,1]", "[2,1,1]", "[2,1,1,1]", "[2,1^4]", "[2,1^5]",
    "[2,2]", "[2,2,1]", "[2,2,1,1]", "[2,2,1,1,1]", "[2,2,1^4]", "[2,2,1^5]", "[2,2,1^6]",
    "[3]", "[3,1]", "[3,1,1]", "[3,1,1,1]", "[3,1^4]", "[3,1^5]",
    "[3,2]", "[3,2,1]", "[3,2,1,1]", "[3,2,1,1,1]", "[3,2,1^4]", "[3,2,1^5]", "[3,2,1^6]",
    "[3,3]",
};

const char* const kRowsH13App[] = {
    "[0]", "[1]", "[1,1]", "[1,1,1]", "[1^4]", "[1^5]", "[1^6]", "[1^7]",
    "[2]", "[2,1]", "[2,1,1]", "[2,1,1,1]", "[2,1^4]", "[2,1^5]", "[2,1^6]",
    "[2,2]", "[2,2,1]", "[2,2,1,1]", "[2,2,1,1,1]", "[2,2,1^4]", "[2,2,1^5]", "[2,2,1^6]",
    "[2,2,2]", "[2,2,2,1]", "[2,2,2,1,1]", "[2,2,2,1,1,1]", "[2,2,2,2]",
};

std::vector<BranchTableSpec> build_specs() {
    std::vector<BranchTableSpec> specs;
    specs.push_back({"h13_3", Partition{1, 1, 1}, 3, false,
                     parse_rows(kRows13, std::size(kRows13))});
    specs.push_back({"h13_4", Partition{1, 1, 1}, 4, false,
                     parse_rows(kRows13, std::size(kRows13))});
    specs.push_back({"h3_4", Partition{3}, 4, false,
                     parse_rows(kRowsH3, std::size(kRowsH3))});
    specs.push_back({"h21_4", Partition{2, 1}, 4, true,
                     parse_rows(kRowsH21, std::size(kRowsH21))});
    specs.push_back({"h13_4_appendix", Partition{1, 1, 1}, 4, false,
                     parse_rows(kRowsH13App, std::size(kRowsH13App))});
    return specs;
}

const std::vector<BranchTableSpec>& specs() {
    static const std::vector<BranchTableSpec> s = build_specs();
    return s;
}

} // namespace

const BranchTableSpec& branch_table_spec(const std::string& id) {
    for (const auto& s : specs())
        if (s.id == id) return s;
    throw unknown_series("unknown table '" + id + "'");
}

std::vector<std::string> branch_table_ids() {
    std::vector<std::string> ids;
    for (const auto& s : specs()) ids.push_back(s.id);
    return ids;
}

std::vector<BranchTableRow> branch_table_rows(const BranchTableSpec& spec, int max_rows) {
    std::vector<BranchTableRow> rows;
    int count = max_rows < 0 ? static_cast<int>(spec.rows.size())
                             : std::min<int>(max_rows, spec.rows.size());
    for (int i = 0; i < count; ++i) {
        const Partition& lambda = spec.rows[i];
        BranchTableRow row;
        row.lambda = lambda;
        row.dim = lambda.dim_gl(spec.n);
        FormalCharacter full = branch_gl_to_hpi(lambda, spec.pi, spec.n);
        row.branched = FormalCharacter(spec.pi, spec.n);
        for (const auto& [key, c] : full.terms()) {
            if (spec.drop_zero_dims && dim_formal(key.mu, spec.pi, spec.n) == 0) continue;
            row.branched.add(key.mu, c, key.eps);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string render_branch_row(const BranchTableSpec& spec, const BranchTableRow& row) {
    std::ostringstream os;
    os << "{" << row.lambda.paper_label() << "}_" << row.dim << " | "
       << row.branched.paper_str(true);
    (void)spec;
    return os.str();
}

std::string render_branch_table(const std::string& id, int max_rows) {
    const BranchTableSpec& spec = branch_table_spec(id);
    std::ostringstream os;
    os << "# " << id << ": GL(" << spec.n << ") > H_" << spec.pi.paper_label() << "("
       << spec.n << ")\n";
    for (const auto& row : branch_table_rows(spec, max_rows))
        os << render_branch_row(spec, row) << "\n";
    return os.str();
}

const std::vector<std::pair<Partition, Partition>>& product_table_pairs() {
    static const std::vector<std::pair<Partition, Partition>> pairs = [] {
        std::vector<Partition> heads = {Partition{1},       Partition{2},
                                        Partition{1, 1},    Partition{3},
                                        Partition{2, 1},    Partition{1, 1, 1}};
        std::vector<std::pair<Partition, Partition>> out;
        for (std::size_t j = 0; j < heads.size(); ++j)
            for (std::size_t i = j; i < heads.size(); ++i)
                out.push_back({heads[i], heads[j]});
        return out;
    }();
    return pairs;
}

std::vector<ProductCell> product_table_cells(const Partition& pi, int n) {
    std::vector<ProductCell> cells;
    for (const auto& [mu, nu] : product_table_pairs()) {
        FormalCharacter raw = product_hpi(mu, nu, pi, n);
        ProductCell cell;
        cell.mu = mu;
        cell.nu = nu;
        cell.product = FormalCharacter(pi, n);
        for (const auto& [key, c] : raw.terms()) {
            if (dim_formal(key.mu, pi, n) == 0) continue;
            cell.product.add(key.mu, c, key.eps);
        }
        cells.push_back(std::move(cell));
    }
    return cells;
}

} // namespace hpi
