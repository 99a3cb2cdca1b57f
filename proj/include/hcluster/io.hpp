#pragma once

#include <string>
#include <string_view>

#include "hcluster/ahc.hpp"
#include "hcluster/data_matrix.hpp"
#include "hcluster/dendro.hpp"

namespace hcluster {

struct CsvSchema {
    char delimiter = ',';
    bool has_header = true;          // header row carries course codes
    bool first_column_is_id = true;  // first field of each row is the respondent id
};

// Parses a Table-style CSV into a validated DataMatrix. Field whitespace is
// trimmed. Throws ParseError (with row/column in the message) for ragged rows
// or non-numeric frequencies, ValidationError for duplicate labels or an
// empty body.
DataMatrix parse_csv(std::string_view text, const CsvSchema& schema = {});

// Inverse of parse_csv; values serialized with shortest round-trip decimals.
std::string matrix_to_csv(const DataMatrix& m, const CsvSchema& schema = {});

// {"n_leaves":int,"labels":[...],"merges":[[left,right,height,size],...]}
// Keys in that order, numbers with full round-trip precision.
std::string dendrogram_to_json(const Dendrogram& d);

// Reconstructs a dendrogram and checks every Dendrogram invariant.
// Throws ParseError naming the violated rule.
Dendrogram json_to_dendrogram(std::string_view text);

// Ultrametric Newick with branch lengths (parent height - child height,
// leaves at height 0), ";"-terminated. Labels containing Newick
// metacharacters are single-quoted.
std::string dendrogram_to_newick(const Dendrogram& d);

enum class SvgOrientation { Vertical, Horizontal };

struct SvgOptions {
    int width = 800;
    int height = 600;
    SvgOrientation orientation = SvgOrientation::Vertical;
};

// Plain SVG 1.1 document: one <text> per leaf label, one merge <polyline>
// per merge, linear height axis from 0 to root height.
std::string render_svg(const Dendrogram& d, const SvgOptions& opts = {});

// ComparisonReport as JSON (the "report" output format).
std::string report_to_json(const ComparisonReport& r);

// Shortest decimal representation that round-trips the double ("1" for 1.0).
std::string format_double(double v);

}  // namespace hcluster
