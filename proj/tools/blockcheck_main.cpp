#include <CLI11.hpp>

#include <iostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "blockcheck/json_io.hpp"
#include "blockcheck/report.hpp"
#include "blockcheck/products.hpp"
#include "blockcheck/tame.hpp"

using namespace blockcheck;

namespace {

int worst(int a, int b) { return a > b ? a : b; }

CorpusEntry load_entry(const std::string& path) {
    if (path == "-") {
        std::stringstream buf;
        buf << std::cin.rdbuf();
        return entry_from_string(buf.str());
    }
    return entry_from_file(path);
}

void print_matrix(std::ostream& os, const IntMatrix& m, const std::string& indent) {
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << indent << "[";
        for (std::size_t j = 0; j < m.size(); ++j)
            os << (j ? " " : "") << m.at(i, j).get_str();
        os << "]\n";
    }
}

Vec parse_degree_csv(const std::string& csv) {
    Vec out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw Error(Error::Kind::BadInput, "degrees must be positive integers: " + csv);
        out.push_back(Int(item));
    }
    if (out.empty()) throw Error(Error::Kind::BadInput, "empty degree list");
    return out;
}

struct CheckOutput {
    int status = 0;
    nlohmann::json json_doc;
    std::string text;
};

CheckOutput check_one(const CorpusEntry& entry, const Rat& tolerance, bool json_mode) {
    CheckOutput out;
    if (std::holds_alternative<BrauerTree>(entry.payload))
        throw Error(Error::Kind::BadInput,
                    "this file holds a tree record; use the 'tree' subcommand");

    Expectations expected(entry.expected.begin(), entry.expected.end());
    std::ostringstream os;
    if (const BlockRecord* b = std::get_if<BlockRecord>(&entry.payload)) {
        auto violations = validate(*b);
        if (!violations.empty()) {
            out.status = static_cast<int>(ExitStatus::DataError);
            if (json_mode) {
                out.json_doc = {{"record", b->name}, {"violations", violations}};
            } else {
                os << "record: " << b->name << "\n";
                for (const auto& v : violations) os << "  validation: " << v << "\n";
                out.text = os.str();
            }
            return out;
        }
        CheckSuiteReport report = run_suite(*b, tolerance);
        out.status = static_cast<int>(report_exit_status(report, expected, b->p));
        if (json_mode) {
            out.json_doc = report_to_json(report);
        } else {
            os << render_block_header(*b);
            os << render_report_text(report, expected, b->p);
            out.text = os.str();
        }
        return out;
    }

    const GroupRecord& g = std::get<GroupRecord>(entry.payload);
    auto violations = validate(g);
    if (!violations.empty()) {
        out.status = static_cast<int>(ExitStatus::DataError);
        if (json_mode) {
            out.json_doc = {{"record", g.name}, {"violations", violations}};
        } else {
            os << "record: " << g.name << "\n";
            for (const auto& v : violations) os << "  validation: " << v << "\n";
            out.text = os.str();
        }
        return out;
    }
    CheckSuiteReport report = run_suite(g, tolerance);
    out.status = static_cast<int>(report_exit_status(report, expected, g.p));
    if (json_mode) {
        out.json_doc = report_to_json(report);
    } else {
        os << "group: " << g.name << " (p = " << g.p.get_str()
           << ", |G| = " << g.group_order.get_str() << ", blocks: " << g.blocks.size()
           << ", l(G) = " << g.l_total() << ")\n";
        os << render_report_text(report, expected, g.p);
        out.text = os.str();
    }
    return out;
}

int run_check(const std::vector<std::string>& files, const Rat& tolerance, bool json_mode) {
    int status = 0;
    std::vector<nlohmann::json> docs;
    for (const std::string& path : files) {
        CheckOutput one = check_one(load_entry(path), tolerance, json_mode);
        status = worst(status, one.status);
        if (json_mode)
            docs.push_back(std::move(one.json_doc));
        else
            std::cout << one.text << "\n";
    }
    if (json_mode) {
        if (docs.size() == 1)
            std::cout << docs.front().dump(2) << "\n";
        else
            std::cout << nlohmann::json(docs).dump(2) << "\n";
    }
    return status;
}

int run_tree(const std::string& file, const std::vector<long long>& star_args,
             const std::string& degrees_csv, long long prime, bool json_mode) {
    BrauerTree tree;
    if (!star_args.empty()) {
        if (star_args.size() != 2 || star_args[0] < 1 || star_args[1] < 1)
            throw Error(Error::Kind::BadInput, "--star needs E M with E, M >= 1");
        tree = star_tree(static_cast<std::size_t>(star_args[0]),
                         Int(static_cast<long>(star_args[1])));
    } else if (!file.empty()) {
        CorpusEntry entry = load_entry(file);
        if (!std::holds_alternative<BrauerTree>(entry.payload))
            throw Error(Error::Kind::BadInput, "not a tree record (expected a 'edges' field)");
        tree = std::get<BrauerTree>(entry.payload);
    } else {
        throw Error(Error::Kind::BadInput, "tree needs a file or --star E M");
    }

    std::optional<Int> p;
    if (prime > 0) p = Int(static_cast<long>(prime));
    auto violations = validate(tree, p);
    if (!violations.empty()) {
        for (const auto& v : violations) std::cerr << "validation: " << v << "\n";
        return static_cast<int>(ExitStatus::DataError);
    }
    std::vector<std::string> notes;
    tree = normalized(tree, notes);

    CheckSuiteReport report;
    report.record_name = "tree e=" + std::to_string(tree.edge_count()) +
                         " m=" + tree.multiplicity.get_str();
    report.results.push_back({"star_dominance", {star_dominance_check(tree)}});
    if (!degrees_csv.empty()) {
        Vec degrees = parse_degree_csv(degrees_csv);
        report.results.push_back({"cyclic_inequality", {cyclic_inequality(tree, degrees)}});
    } else {
        report.skipped.push_back({"cyclic_inequality", "no --degrees given"});
    }

    IntMatrix c = cartan_from_tree(tree);
    if (json_mode) {
        nlohmann::json j = report_to_json(report);
        j["defect_order"] = static_cast<long long>(tree.defect_order().get_si());
        j["star"] = is_star(tree);
        nlohmann::json rows = nlohmann::json::array();
        for (std::size_t i = 0; i < c.size(); ++i) {
            nlohmann::json row = nlohmann::json::array();
            for (std::size_t k = 0; k < c.size(); ++k)
                row.push_back(static_cast<long long>(c.at(i, k).get_si()));
            rows.push_back(std::move(row));
        }
        j["cartan"] = std::move(rows);
        for (const auto& n : notes) j["notes"].push_back(n);
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << report.record_name << ", |D| = e*m+1 = " << tree.defect_order().get_str()
                  << ", star: " << (is_star(tree) ? "yes" : "no") << "\n";
        for (const auto& n : notes) std::cout << "note: " << n << "\n";
        std::cout << "cartan matrix:\n";
        print_matrix(std::cout, c, "  ");
        Expectations none;
        std::cout << render_report_text(report, none, p ? *p : Int(2));
    }
    Expectations none;
    return static_cast<int>(report_exit_status(report, none, p ? *p : Int(2)));
}

int run_tame(const std::string& family_arg, long long defect_max, bool include_speculative,
             bool json_mode) {
    std::vector<TameFamily> families;
    if (family_arg == "ALL") {
        families = all_tame_families();
    } else if (auto f = parse_family(family_arg)) {
        families = {*f};
        include_speculative = true;  // naming a speculative family directly means: run it
    } else {
        throw Error(Error::Kind::BadParameters, "unknown family: " + family_arg);
    }
    TameSweepReport report =
        sweep(families, defect_range(Int(static_cast<long>(defect_max))), include_speculative);

    if (json_mode) {
        nlohmann::json rows = nlohmann::json::array();
        for (const TameSweepRow& row : report.rows) {
            nlohmann::json rj;
            rj["family"] = family_name(row.spec.family);
            rj["speculative"] = row.spec.speculative;
            rj["defect_group_order"] =
                static_cast<long long>(row.spec.defect_group_order.get_si());
            for (const auto& [k, v] : row.spec.parameters)
                rj["parameters"][k] = static_cast<long long>(v.get_si());
            rj["trace"] = static_cast<long long>(row.trace_value.get_si());
            rj["det"] = static_cast<long long>(row.determinant.get_si());
            rj["det_power_of_two"] = row.det_power_of_two;
            rj["positive_definite"] = row.positive_definite;
            nlohmann::json snf = nlohmann::json::array();
            for (const Int& d : row.elementary_divisors)
                snf.push_back(static_cast<long long>(d.get_si()));
            rj["elementary_divisors"] = std::move(snf);
            nlohmann::json verdicts = nlohmann::json::array();
            for (const Verdict& v : row.verdicts)
                verdicts.push_back({{"check_id", v.check_id},
                                    {"lhs", rat_str(v.lhs)},
                                    {"rhs", rat_str(v.rhs)},
                                    {"holds", v.holds},
                                    {"equality", v.equality}});
            rj["verdicts"] = std::move(verdicts);
            rows.push_back(std::move(rj));
        }
        nlohmann::json j;
        j["rows"] = std::move(rows);
        j["verdict_failures"] = report.verdict_failures;
        j["structure_failures"] = report.structure_failures;
        j["speculative_excluded"] = report.speculative_excluded;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "family      |D|     params          tr C    l|D|    det     snf           "
                     "pd   bounds\n";
        for (const TameSweepRow& row : report.rows) {
            std::ostringstream params;
            bool first = true;
            for (const auto& [k, v] : row.spec.parameters) {
                params << (first ? "" : ",") << k << "=" << v.get_str();
                first = false;
            }
            std::ostringstream snf;
            for (std::size_t i = 0; i < row.elementary_divisors.size(); ++i)
                snf << (i ? "|" : "") << row.elementary_divisors[i].get_str();
            std::ostringstream bounds;
            for (const Verdict& v : row.verdicts)
                bounds << v.check_id.substr(v.check_id.find('.') + 1) << ":"
                       << (v.holds ? "ok" : "FAIL") << " ";
            auto col = [](const std::string& s, std::size_t w) {
                return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' ');
            };
            std::cout << col(family_name(row.spec.family), 12)
                      << col(row.spec.defect_group_order.get_str(), 8)
                      << col(params.str(), 16) << col(row.trace_value.get_str(), 8)
                      << col(Int(Int(static_cast<long>(row.elementary_divisors.size())) *
                                 row.spec.defect_group_order)
                                 .get_str(),
                             8)
                      << col(row.determinant.get_str(), 8) << col(snf.str(), 14)
                      << col(row.positive_definite ? "yes" : "NO", 5) << bounds.str() << "\n";
        }
        std::cout << "rows: " << report.rows.size()
                  << ", verdict failures: " << report.verdict_failures
                  << ", structure failures: " << report.structure_failures
                  << ", speculative excluded: " << report.speculative_excluded << "\n";
    }
    return (report.verdict_failures || report.structure_failures)
               ? static_cast<int>(ExitStatus::Finding)
               : static_cast<int>(ExitStatus::Success);
}

const BlockRecord& require_block(const CorpusEntry& entry, const std::string& path) {
    const BlockRecord* b = std::get_if<BlockRecord>(&entry.payload);
    if (!b) throw Error(Error::Kind::BadInput, path + ": expected a block record");
    return *b;
}

int run_product(const std::string& file1, const std::string& file2) {
    CorpusEntry e1 = load_entry(file1);
    CorpusEntry e2 = load_entry(file2);
    const BlockRecord& b1 = require_block(e1, file1);
    const BlockRecord& b2 = require_block(e2, file2);
    if ((b1.ordinary_degrees != std::nullopt) != (b2.ordinary_degrees != std::nullopt))
        std::cerr << "note: ordinary_degrees omitted (present in only one factor)\n";
    std::cout << block_to_json(block_product(b1, b2)).dump(2) << "\n";
    return 0;
}

int run_power(const std::string& file, long long n) {
    if (n < 1) throw Error(Error::Kind::BadParameters, "power exponent must be at least 1");
    CorpusEntry e = load_entry(file);
    const BlockRecord& b = require_block(e, file);
    std::cout << block_to_json(tensor_power(b, static_cast<unsigned>(n))).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic checks for block-theoretic inequalities"};
    app.require_subcommand(1);

    std::string report_mode = "text";
    std::string tolerance_str = "1/1000000";
    bool include_speculative = false;
    app.add_option("--report", report_mode, "report format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tolerance", tolerance_str,
                   "spectral enclosure tolerance as N/M (default 1/1000000)");
    app.add_flag("--include-speculative", include_speculative,
                 "include the speculative families in ALL sweeps");

    auto* check_cmd = app.add_subcommand("check", "run the check suite on block/group records");
    std::vector<std::string> check_files;
    check_cmd->add_option("files", check_files, "JSON record files ('-' for stdin)")
        ->required();

    auto* tree_cmd = app.add_subcommand("tree", "analyze a Brauer tree");
    std::string tree_file;
    std::vector<long long> star_args;
    std::string degrees_csv;
    long long tree_prime = 0;
    tree_cmd->add_option("file", tree_file, "tree JSON file ('-' for stdin)");
    tree_cmd->add_option("--star", star_args, "star tree: E M")->expected(2);
    tree_cmd->add_option("--degrees", degrees_csv, "comma-separated Brauer degrees");
    tree_cmd->add_option("--prime", tree_prime, "require e*m+1 to be a power of this prime");

    auto* tame_cmd = app.add_subcommand("tame", "sweep a tame Cartan family");
    std::string family_arg;
    long long defect_max = 4096;
    tame_cmd->add_option("family", family_arg, "family id or ALL")->required();
    tame_cmd->add_option("--defect-max", defect_max, "largest |D| to sweep (power of 2)");

    auto* product_cmd = app.add_subcommand("product", "direct product of two blocks");
    std::string prod_file1, prod_file2;
    product_cmd->add_option("file1", prod_file1)->required();
    product_cmd->add_option("file2", prod_file2)->required();

    auto* power_cmd = app.add_subcommand("power", "tensor power of a block");
    std::string power_file;
    long long power_n = 0;
    power_cmd->add_option("file", power_file)->required();
    power_cmd->add_option("n", power_n, "exponent (>= 1)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return static_cast<int>(ExitStatus::DataError);
    }

    try {
        Rat tolerance = parse_rat(tolerance_str);
        if (tolerance <= 0) throw Error(Error::Kind::BadTolerance, "tolerance not positive");
        const bool json_mode = report_mode == "json";
        if (*check_cmd) return run_check(check_files, tolerance, json_mode);
        if (*tree_cmd) return run_tree(tree_file, star_args, degrees_csv, tree_prime, json_mode);
        if (*tame_cmd) return run_tame(family_arg, defect_max, include_speculative, json_mode);
        if (*product_cmd) return run_product(prod_file1, prod_file2);
        if (*power_cmd) return run_power(power_file, power_n);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitStatus::DataError);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(ExitStatus::DataError);
    }
    return 0;
}
