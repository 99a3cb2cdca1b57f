#include "hcluster/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "hcluster/errors.hpp"

namespace hcluster {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_fields(std::string_view line, char delim) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == delim) {
            out.push_back(trim(line.substr(start, i - start)));
            start = i + 1;
        }
    }
    return out;
}

}  // namespace

DataMatrix parse_csv(std::string_view text, const CsvSchema& schema) {
    DataMatrix m;
    std::size_t expected_fields = 0;
    std::size_t line_no = 0;
    std::size_t data_row = 0;
    bool header_done = !schema.has_header;

    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) eol = text.size();
        std::string_view line = text.substr(pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        pos = eol + 1;
        ++line_no;
        if (trim(line).empty()) {
            if (pos > text.size()) break;
            continue;
        }

        auto fields = split_fields(line, schema.delimiter);
        if (!header_done) {
            if (schema.first_column_is_id) fields.erase(fields.begin());
            m.col_labels = std::move(fields);
            expected_fields = m.col_labels.size() + (schema.first_column_is_id ? 1 : 0);
            header_done = true;
            continue;
        }

        if (expected_fields == 0) expected_fields = fields.size();
        if (fields.size() != expected_fields)
            throw ParseError("row " + std::to_string(line_no) + ": expected " +
                             std::to_string(expected_fields) + " fields, got " +
                             std::to_string(fields.size()));

        std::size_t first_value = 0;
        if (schema.first_column_is_id) {
            m.row_labels.push_back(fields[0]);
            first_value = 1;
        } else {
            m.row_labels.push_back("r" + std::to_string(data_row + 1));
        }

        std::vector<double> row;
        row.reserve(fields.size() - first_value);
        for (std::size_t c = first_value; c < fields.size(); ++c) {
            const std::string& field = fields[c];
            double v = 0.0;
            const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
            if (res.ec != std::errc{} || res.ptr != field.data() + field.size())
                throw ParseError("row " + std::to_string(line_no) + ", column " +
                                 std::to_string(c + 1) + ": not a number: '" + field + "'");
            row.push_back(v);
        }
        m.values.push_back(std::move(row));
        ++data_row;
        if (pos > text.size()) break;
    }

    if (m.values.empty()) throw ValidationError("empty CSV body");
    if (!schema.has_header)
        for (std::size_t c = 0; c < m.cols(); ++c)
            m.col_labels.push_back("c" + std::to_string(c + 1));
    validate(m);
    return m;
}

std::string matrix_to_csv(const DataMatrix& m, const CsvSchema& schema) {
    std::string out;
    const char d = schema.delimiter;
    if (schema.has_header) {
        if (schema.first_column_is_id) out += "id";
        for (std::size_t c = 0; c < m.col_labels.size(); ++c) {
            if (c > 0 || schema.first_column_is_id) out += d;
            out += m.col_labels[c];
        }
        out += '\n';
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (schema.first_column_is_id) out += m.row_labels[r];
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c > 0 || schema.first_column_is_id) out += d;
            out += format_double(m.values[r][c]);
        }
        out += '\n';
    }
    return out;
}

std::string dendrogram_to_json(const Dendrogram& d) {
    nlohmann::ordered_json j;
    j["n_leaves"] = d.n_leaves;
    j["labels"] = d.labels;
    auto merges = nlohmann::ordered_json::array();
    for (const Merge& m : d.merges)
        merges.push_back({m.left, m.right, m.height, m.size});
    j["merges"] = std::move(merges);
    return j.dump();
}

Dendrogram json_to_dendrogram(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n_leaves") || !j.contains("labels") ||
        !j.contains("merges"))
        throw ParseError("dendrogram JSON must have n_leaves, labels, merges");
    if (!j["n_leaves"].is_number_unsigned())
        throw ParseError("n_leaves must be a non-negative integer");

    Dendrogram d;
    d.n_leaves = j["n_leaves"].get<std::size_t>();
    if (d.n_leaves < 1) throw ParseError("n_leaves must be >= 1");
    if (!j["labels"].is_array() || j["labels"].size() != d.n_leaves)
        throw ParseError("labels must be an array of n_leaves strings");
    for (const auto& l : j["labels"]) {
        if (!l.is_string()) throw ParseError("labels must be strings");
        d.labels.push_back(l.get<std::string>());
    }
    if (!j["merges"].is_array() || j["merges"].size() != d.n_leaves - 1)
        throw ParseError("merges must contain exactly n_leaves - 1 entries");

    const std::size_t n = d.n_leaves;
    std::vector<std::size_t> leaf_count(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) leaf_count[i] = 1;
    std::vector<bool> used(2 * n - 1, false);
    double prev_height = 0.0;
    for (std::size_t t = 0; t < d.n_leaves - 1; ++t) {
        const auto& e = j["merges"][t];
        if (!e.is_array() || e.size() != 4)
            throw ParseError("merge " + std::to_string(t) + " must be [left,right,height,size]");
        if (!e[0].is_number_unsigned() || !e[1].is_number_unsigned() ||
            !e[2].is_number() || !e[3].is_number_unsigned())
            throw ParseError("merge " + std::to_string(t) + " has wrong field types");
        Merge m;
        m.left = e[0].get<std::size_t>();
        m.right = e[1].get<std::size_t>();
        m.height = e[2].get<double>();
        m.size = e[3].get<std::size_t>();
        if (m.left == m.right)
            throw ParseError("merge " + std::to_string(t) + ": identical children");
        for (std::size_t child : {m.left, m.right}) {
            if (child >= n + t)
                throw ParseError("merge " + std::to_string(t) + ": unknown cluster id " +
                                 std::to_string(child));
            if (used[child])
                throw ParseError("merge " + std::to_string(t) + ": cluster " +
                                 std::to_string(child) + " already consumed");
            used[child] = true;
        }
        if (!std::isfinite(m.height) || m.height < 0.0)
            throw ParseError("merge " + std::to_string(t) + ": height must be finite and >= 0");
        if (m.height < prev_height)
            throw ParseError("merge " + std::to_string(t) + ": heights must be non-decreasing");
        prev_height = m.height;
        leaf_count[n + t] = leaf_count[m.left] + leaf_count[m.right];
        if (m.size != leaf_count[n + t])
            throw ParseError("merge " + std::to_string(t) + ": size does not match leaf count");
        d.merges.push_back(m);
    }
    if (!d.merges.empty() && d.merges.back().size != n)
        throw ParseError("final merge must contain all leaves");
    return d;
}

namespace {

std::string newick_label(const std::string& label) {
    const bool needs_quote =
        label.find_first_of("(),:;' \t[]") != std::string::npos;
    if (!needs_quote) return label;
    std::string out = "'";
    for (char c : label) {
        out += c;
        if (c == '\'') out += '\'';
    }
    out += '\'';
    return out;
}

}  // namespace

std::string dendrogram_to_newick(const Dendrogram& d) {
    const std::size_t n = d.n_leaves;
    if (n == 1) return newick_label(d.labels[0]) + ";";

    // height of every cluster id
    std::vector<double> height(2 * n - 1, 0.0);
    for (std::size_t t = 0; t < d.merges.size(); ++t)
        height[n + t] = d.merges[t].height;

    std::string out;
    auto emit = [&](auto&& self, std::size_t id, double parent_height) -> void {
        if (id < n) {
            out += newick_label(d.labels[id]);
        } else {
            const Merge& m = d.merges[id - n];
            out += '(';
            self(self, m.left, height[id]);
            out += ',';
            self(self, m.right, height[id]);
            out += ')';
        }
        out += ':';
        out += format_double(parent_height - height[id]);
    };

    const std::size_t root = 2 * n - 2;
    const Merge& r = d.merges.back();
    out += '(';
    emit(emit, r.left, height[root]);
    out += ',';
    emit(emit, r.right, height[root]);
    out += ");";
    return out;
}

std::string render_svg(const Dendrogram& d, const SvgOptions& opts) {
    if (opts.width <= 0 || opts.height <= 0)
        throw RangeError("SVG dimensions must be positive");
    const std::size_t n = d.n_leaves;
    const std::size_t root = n >= 2 ? 2 * n - 2 : 0;
    const double root_h = d.root_height();
    const double scale_h = root_h > 0.0 ? root_h : 1.0;

    // leaf order: left-to-right traversal, merge children in stored order
    std::vector<std::size_t> leaf_order;
    leaf_order.reserve(n);
    {
        std::vector<std::size_t> stack{root};
        while (!stack.empty()) {
            const std::size_t id = stack.back();
            stack.pop_back();
            if (id < n) {
                leaf_order.push_back(id);
            } else {
                const Merge& m = d.merges[id - n];
                stack.push_back(m.right);
                stack.push_back(m.left);
            }
        }
    }

    const double margin = 40.0;
    const bool vertical = opts.orientation == SvgOrientation::Vertical;
    const double span = (vertical ? opts.width : opts.height) - 2 * margin;
    const double depth = (vertical ? opts.height : opts.width) - 2 * margin;
    const double step = n > 1 ? span / static_cast<double>(n - 1) : 0.0;

    // item axis position and height per cluster id
    std::vector<double> pos(2 * n - 1, 0.0), height(2 * n - 1, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        pos[leaf_order[i]] = margin + static_cast<double>(i) * step;
    for (std::size_t t = 0; t < d.merges.size(); ++t) {
        const Merge& m = d.merges[t];
        pos[n + t] = 0.5 * (pos[m.left] + pos[m.right]);
        height[n + t] = m.height;
    }

    // height h maps away from the leaf baseline
    auto h_coord = [&](double h) { return margin + depth * (1.0 - h / scale_h); };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
        << opts.width << "\" height=\"" << opts.height << "\">\n";

    auto point = [&](double item_pos, double h) {
        std::ostringstream p;
        if (vertical)
            p << format_double(item_pos) << ',' << format_double(h_coord(h));
        else
            p << format_double(opts.width - h_coord(h)) << ',' << format_double(item_pos);
        return p.str();
    };

    for (const Merge& m : d.merges) {
        svg << "  <polyline class=\"merge\" fill=\"none\" stroke=\"black\" points=\""
            << point(pos[m.left], height[m.left]) << ' '
            << point(pos[m.left], m.height) << ' '
            << point(pos[m.right], m.height) << ' '
            << point(pos[m.right], height[m.right]) << "\"/>\n";
    }
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t leaf = leaf_order[i];
        double x, y;
        if (vertical) {
            x = pos[leaf];
            y = h_coord(0.0) + 14.0;
        } else {
            x = opts.width - h_coord(0.0) + 4.0;
            y = pos[leaf];
        }
        svg << "  <text x=\"" << format_double(x) << "\" y=\"" << format_double(y)
            << "\" font-size=\"10\" text-anchor=\"" << (vertical ? "middle" : "start")
            << "\">";
        for (char c : d.labels[leaf]) {
            switch (c) {
                case '&': svg << "&amp;"; break;
                case '<': svg << "&lt;"; break;
                case '>': svg << "&gt;"; break;
                default: svg << c;
            }
        }
        svg << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

namespace {

nlohmann::ordered_json linkage_result_json(const LinkageResult& r) {
    nlohmann::ordered_json j;
    j["linkage"] = to_string(r.linkage);
    j["root_height"] = r.dendrogram.root_height();
    j["effective_cut_height"] = r.effective_cut_height;
    j["cluster_count"] = r.assignment.k;
    auto members = nlohmann::ordered_json::array();
    for (const auto& cluster : r.assignment.members()) {
        auto labels = nlohmann::ordered_json::array();
        for (std::size_t i : cluster) labels.push_back(r.assignment.labels[i]);
        members.push_back(std::move(labels));
    }
    j["clusters"] = std::move(members);
    return j;
}

}  // namespace

std::string report_to_json(const ComparisonReport& r) {
    nlohmann::ordered_json j;
    j["dataset_id"] = r.dataset_id;
    switch (r.cut.kind) {
        case CutRule::Kind::ByCount:
            j["cut"] = {{"kind", "count"}, {"count", r.cut.count}};
            break;
        case CutRule::Kind::ByHeight:
            j["cut"] = {{"kind", "height"}, {"height", r.cut.height}};
            break;
        case CutRule::Kind::Default:
            j["cut"] = {{"kind", "default"}, {"rule", "height at 0.7 x root height"}};
            break;
    }
    j["single"] = linkage_result_json(r.single);
    j["complete"] = linkage_result_json(r.complete);
    auto ranking = nlohmann::ordered_json::array();
    for (const CourseScore& s : r.ranking)
        ranking.push_back({{"label", s.label}, {"score", s.score}});
    j["ranking"] = std::move(ranking);
    j["strongest"] = r.strongest;
    j["weakest"] = r.weakest;
    j["agreement"] = r.agreement;
    return j.dump(2);
}

}  // namespace hcluster
