#pragma once

#include "hpi/modify.hpp"

#include <string>
#include <vector>

namespace hpi {

/// Branching tables GL(n) > H_pi as published: fixed row order, dimension
/// subscripts, and (for h21_4) suppression of zero-dimensional terms.
struct BranchTableSpec {
    std::string id;           // h13_3, h13_4, h3_4, h21_4, h13_4_appendix
    Partition pi;
    int n = 0;
    bool drop_zero_dims = false;
    std::vector<Partition> rows;
};

const BranchTableSpec& branch_table_spec(const std::string& id);
std::vector<std::string> branch_table_ids();

struct BranchTableRow {
    Partition lambda;
    Int dim = 0;
    FormalCharacter branched; // after any zero-dimension suppression
};

std::vector<BranchTableRow> branch_table_rows(const BranchTableSpec& spec, int max_rows);

/// "{211}_15 | ((211))_11+((1))_4"
std::string render_branch_row(const BranchTableSpec& spec, const BranchTableRow& row);
std::string render_branch_table(const std::string& id, int max_rows);

/// Product tables of unmodified H_pi(4) characters; zero-dimensional terms
/// are suppressed as in the published tables.
struct ProductCell {
    Partition mu, nu;
    FormalCharacter product;
};

const std::vector<std::pair<Partition, Partition>>& product_table_pairs();
std::vector<ProductCell> product_table_cells(const Partition& pi, int n);

} // namespace hpi
