#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hcluster/ahc.hpp"
#include "hcluster/data_matrix.hpp"
#include "hcluster/dendro.hpp"
#include "hcluster/errors.hpp"
#include "hcluster/generate.hpp"
#include "hcluster/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitInvalid = 2;

struct IoFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoFailure("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// temp-then-rename so a partial write never lands at the target path
void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoFailure("cannot write " + tmp);
        out << content;
        if (!out) throw IoFailure("write failed for " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoFailure("cannot rename " + tmp + " to " + path);
}

void emit(const std::string& output_path, const std::string& content) {
    if (output_path.empty())
        std::cout << content;
    else
        write_file_atomic(output_path, content);
}

std::string with_suffix(const std::string& path, const std::string& tag) {
    const auto dot = path.rfind('.');
    if (dot == std::string::npos || path.find('/', dot) != std::string::npos)
        return path + "." + tag;
    return path.substr(0, dot) + "." + tag + path.substr(dot);
}

struct Options {
    std::string input;
    std::string output;
    std::string linkage = "single";
    std::string orientation = "courses";
    std::string format = "json";
    bool standardize = false;
    std::optional<std::size_t> cut_count;
    std::optional<double> cut_height;
    std::uint64_t seed = 0;
    std::size_t respondents = 30;
};

hcluster::Dendrogram run_pipeline(const hcluster::DataMatrix& m, const Options& opt,
                                  hcluster::Linkage l) {
    const auto orientation = opt.orientation == "respondents"
                                 ? hcluster::Orientation::Respondents
                                 : hcluster::Orientation::Courses;
    auto items = hcluster::extract_items(m, orientation);
    if (opt.standardize) items = hcluster::standardize_zscore(items);
    return hcluster::cluster_nn_chain(hcluster::pairwise(items), l);
}

std::string render(const hcluster::Dendrogram& d, const std::string& format) {
    if (format == "newick") return hcluster::dendrogram_to_newick(d) + "\n";
    if (format == "svg") return hcluster::render_svg(d);
    return hcluster::dendrogram_to_json(d) + "\n";
}

int cmd_cluster(const Options& opt) {
    const auto m = hcluster::parse_csv(read_file(opt.input));
    if (opt.linkage == "both") {
        for (auto l : {hcluster::Linkage::Single, hcluster::Linkage::Complete}) {
            const auto d = run_pipeline(m, opt, l);
            const std::string out = render(d, opt.format);
            if (opt.output.empty())
                std::cout << out;
            else
                write_file_atomic(with_suffix(opt.output, hcluster::to_string(l)), out);
        }
        return kExitOk;
    }
    const auto l = opt.linkage == "complete" ? hcluster::Linkage::Complete
                                             : hcluster::Linkage::Single;
    emit(opt.output, render(run_pipeline(m, opt, l), opt.format));
    return kExitOk;
}

hcluster::CutRule cut_rule(const Options& opt) {
    if (opt.cut_count) return hcluster::CutRule::by_count(*opt.cut_count);
    if (opt.cut_height) return hcluster::CutRule::by_height(*opt.cut_height);
    return {};
}

void print_summary(const hcluster::ComparisonReport& rep) {
    auto describe = [](const hcluster::LinkageResult& r) {
        std::cout << "  " << hcluster::to_string(r.linkage) << " linkage: "
                  << r.assignment.k << " cluster(s)";
        if (r.assignment.cut.kind != hcluster::CutRule::Kind::ByCount)
            std::cout << " at cut height " << hcluster::format_double(r.effective_cut_height);
        std::cout << " (root height " << hcluster::format_double(r.dendrogram.root_height())
                  << ")\n";
    };
    std::cout << "Linkage comparison";
    if (!rep.dataset_id.empty()) std::cout << " for " << rep.dataset_id;
    std::cout << ":\n";
    if (rep.cut.kind == hcluster::CutRule::Kind::Default)
        std::cout << "  cut rule: height at 0.7 x root height (default)\n";
    describe(rep.single);
    describe(rep.complete);
    std::cout << "  agreement (Rand index): " << hcluster::format_double(rep.agreement) << "\n";
    auto list = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) {
            if (!s.empty()) s += ", ";
            s += x;
        }
        return s;
    };
    std::cout << "  strongest courses: " << list(rep.strongest) << "\n";
    std::cout << "  weakest courses:  " << list(rep.weakest) << "\n";
}

int cmd_compare(const Options& opt) {
    const auto m = hcluster::parse_csv(read_file(opt.input));
    const auto rep = hcluster::compare_linkages(m, cut_rule(opt),
                                               std::filesystem::path(opt.input).filename());
    if (!opt.output.empty()) write_file_atomic(opt.output, hcluster::report_to_json(rep) + "\n");
    print_summary(rep);
    if (opt.output.empty()) std::cout << hcluster::report_to_json(rep) << "\n";
    return kExitOk;
}

int cmd_generate(const Options& opt) {
    hcluster::GenerateConfig cfg;
    cfg.seed = opt.seed;
    cfg.respondents = opt.respondents;
    const auto m = hcluster::generate_dataset(cfg);
    emit(opt.output, hcluster::matrix_to_csv(m));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hierarchical clustering of course-frequency surveys"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--input", opt.input, "input CSV path")->required();
        cmd->add_option("--output", opt.output, "output path (default: stdout)");
        cmd->add_flag("--standardize", opt.standardize, "z-score each dimension first");
        cmd->add_option("--orientation", opt.orientation, "courses|respondents")
            ->check(CLI::IsMember({"courses", "respondents"}));
    };

    auto* cluster = app.add_subcommand("cluster", "cluster one dataset, write the dendrogram");
    add_common(cluster);
    cluster->add_option("--linkage", opt.linkage, "single|complete|both")
        ->check(CLI::IsMember({"single", "complete", "both"}));
    cluster->add_option("--format", opt.format, "json|newick|svg")
        ->check(CLI::IsMember({"json", "newick", "svg"}));

    auto* compare = app.add_subcommand("compare", "single vs complete linkage report");
    add_common(compare);
    auto* cc = compare->add_option("--cut-count", opt.cut_count, "cut into K clusters");
    auto* ch = compare->add_option("--cut-height", opt.cut_height, "cut at height H");
    cc->excludes(ch);
    compare->add_option("--format", opt.format, "report")->check(CLI::IsMember({"report"}));

    auto* generate = app.add_subcommand("generate", "write a seeded synthetic dataset");
    generate->add_option("--output", opt.output, "output CSV path (default: stdout)");
    generate->add_option("--seed", opt.seed, "RNG seed");
    generate->add_option("--respondents", opt.respondents, "respondent row count")
        ->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    try {
        if (cluster->parsed()) return cmd_cluster(opt);
        if (compare->parsed()) return cmd_compare(opt);
        return cmd_generate(opt);
    } catch (const IoFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const hcluster::ParseError& e) {
        std::cerr << "error: " << opt.input << ": " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    }
}
