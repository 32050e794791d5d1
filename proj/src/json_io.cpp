#include "blockcheck/json_io.hpp"

#include <fstream>
#include <sstream>

namespace blockcheck {

using nlohmann::json;

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(Error::Kind::BadInput, what); }

Int int_field(const json& j, const std::string& key) {
    if (!j.contains(key)) bad("missing field '" + key + "'");
    const json& v = j.at(key);
    if (!v.is_number_integer()) bad("field '" + key + "' must be an integer");
    return Int(static_cast<long>(v.get<long long>()));
}

std::string string_field(const json& j, const std::string& key) {
    if (!j.contains(key)) bad("missing field '" + key + "'");
    if (!j.at(key).is_string()) bad("field '" + key + "' must be a string");
    return j.at(key).get<std::string>();
}

Vec int_list(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where + " must be an array of integers");
    Vec out;
    for (const json& x : v) {
        if (!x.is_number_integer()) bad(where + " must contain only integers");
        out.push_back(Int(static_cast<long>(x.get<long long>())));
    }
    return out;
}

std::vector<Vec> int_rows(const json& v, const std::string& where) {
    if (!v.is_array()) bad(where + " must be an array of integer rows");
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < v.size(); ++i)
        rows.push_back(int_list(v[i], where + " row " + std::to_string(i)));
    return rows;
}

json emit_int(const Int& x) {
    if (!x.fits_slong_p()) bad("value " + x.get_str() + " exceeds the JSON integer range");
    return json(static_cast<long long>(x.get_si()));
}

json emit_int_list(const Vec& v) {
    json a = json::array();
    for (const Int& x : v) a.push_back(emit_int(x));
    return a;
}

}  // namespace

BlockRecord block_from_json(const json& j) {
    if (!j.is_object()) bad("block record must be a JSON object");
    BlockRecord b;
    b.name = string_field(j, "name");
    b.p = int_field(j, "p");
    b.defect_group_order = int_field(j, "defect_group_order");
    if (!j.contains("brauer_degrees")) bad("missing field 'brauer_degrees'");
    b.brauer_degrees = int_list(j.at("brauer_degrees"), "brauer_degrees");
    if (j.contains("ordinary_degrees"))
        b.ordinary_degrees = int_list(j.at("ordinary_degrees"), "ordinary_degrees");
    if (j.contains("cartan")) {
        std::vector<Vec> rows = int_rows(j.at("cartan"), "cartan");
        for (const Vec& r : rows)
            if (r.size() != rows.size()) bad("cartan must be square");
        b.cartan = IntMatrix::from_rows(rows);
    }
    if (j.contains("decomposition"))
        b.decomposition = int_rows(j.at("decomposition"), "decomposition");
    if (j.contains("group_p_part")) b.group_p_part = int_field(j, "group_p_part");
    if (j.contains("group_order")) b.group_order = int_field(j, "group_order");
    return b;
}

GroupRecord group_from_json(const json& j) {
    if (!j.is_object()) bad("group record must be a JSON object");
    GroupRecord g;
    g.name = string_field(j, "name");
    g.p = int_field(j, "p");
    g.group_order = int_field(j, "group_order");
    if (!j.contains("blocks") || !j.at("blocks").is_array()) bad("group record needs 'blocks'");
    for (const json& bj : j.at("blocks")) g.blocks.push_back(block_from_json(bj));
    return g;
}

BrauerTree tree_from_json(const json& j) {
    if (!j.is_object()) bad("tree must be a JSON object");
    BrauerTree t;
    if (!j.contains("vertices") || !j.at("vertices").is_array()) bad("tree needs 'vertices'");
    for (const json& v : j.at("vertices")) {
        if (!v.is_string()) bad("vertices must be strings");
        t.vertices.push_back(v.get<std::string>());
    }
    if (!j.contains("edges") || !j.at("edges").is_array()) bad("tree needs 'edges'");
    for (const json& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            bad("each edge must be a pair of vertex names");
        t.edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
    if (j.contains("exceptional")) {
        if (!j.at("exceptional").is_string()) bad("'exceptional' must be a vertex name");
        t.exceptional = j.at("exceptional").get<std::string>();
    }
    t.multiplicity = j.contains("multiplicity") ? int_field(j, "multiplicity") : Int(1);
    return t;
}

CorpusEntry entry_from_json(const json& j) {
    if (!j.is_object()) bad("record must be a JSON object");
    CorpusEntry e;
    if (j.contains("blocks"))
        e.payload = group_from_json(j);
    else if (j.contains("edges"))
        e.payload = tree_from_json(j);
    else
        e.payload = block_from_json(j);
    if (j.contains("provenance")) e.provenance = string_field(j, "provenance");
    if (j.contains("expected")) {
        if (!j.at("expected").is_object()) bad("'expected' must be an object");
        for (const auto& [key, value] : j.at("expected").items()) {
            if (!value.is_string() || (value != "pass" && value != "fail"))
                bad("expected['" + key + "'] must be \"pass\" or \"fail\"");
            e.expected[key] = (value == "pass");
        }
    }
    return e;
}

CorpusEntry entry_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) bad("malformed JSON");
    return entry_from_json(j);
}

CorpusEntry entry_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return entry_from_string(buf.str());
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.what());
    }
}

json block_to_json(const BlockRecord& b) {
    json j;
    j["name"] = b.name;
    j["p"] = emit_int(b.p);
    j["defect_group_order"] = emit_int(b.defect_group_order);
    j["brauer_degrees"] = emit_int_list(b.brauer_degrees);
    if (b.ordinary_degrees) j["ordinary_degrees"] = emit_int_list(*b.ordinary_degrees);
    if (b.cartan) {
        json rows = json::array();
        for (std::size_t i = 0; i < b.cartan->size(); ++i) {
            json row = json::array();
            for (std::size_t k = 0; k < b.cartan->size(); ++k)
                row.push_back(emit_int(b.cartan->at(i, k)));
            rows.push_back(std::move(row));
        }
        j["cartan"] = std::move(rows);
    }
    if (b.decomposition) {
        json rows = json::array();
        for (const Vec& r : *b.decomposition) rows.push_back(emit_int_list(r));
        j["decomposition"] = std::move(rows);
    }
    if (b.group_p_part) j["group_p_part"] = emit_int(*b.group_p_part);
    if (b.group_order) j["group_order"] = emit_int(*b.group_order);
    return j;
}

json group_to_json(const GroupRecord& g) {
    json j;
    j["name"] = g.name;
    j["p"] = emit_int(g.p);
    j["group_order"] = emit_int(g.group_order);
    json blocks = json::array();
    for (const BlockRecord& b : g.blocks) blocks.push_back(block_to_json(b));
    j["blocks"] = std::move(blocks);
    return j;
}

json tree_to_json(const BrauerTree& t) {
    json j;
    j["vertices"] = t.vertices;
    json edges = json::array();
    for (const auto& e : t.edges) edges.push_back(json::array({e.first, e.second}));
    j["edges"] = std::move(edges);
    if (t.exceptional) j["exceptional"] = *t.exceptional;
    j["multiplicity"] = emit_int(t.multiplicity);
    return j;
}

json report_to_json(const CheckSuiteReport& r) {
    json j;
    j["record"] = r.record_name;
    json verdicts = json::array();
    for (const CheckResult& c : r.results)
        for (const Verdict& v : c.verdicts) {
            json vj;
            vj["check_id"] = v.check_id;
            vj["lhs"] = rat_str(v.lhs);
            vj["rhs"] = rat_str(v.rhs);
            vj["holds"] = v.holds;
            vj["equality"] = v.equality;
            vj["notes"] = v.notes;
            verdicts.push_back(std::move(vj));
        }
    j["verdicts"] = std::move(verdicts);
    json skipped = json::array();
    for (const Skip& s : r.skipped)
        skipped.push_back(json{{"check_id", s.check_id}, {"reason", s.reason}});
    j["skipped"] = std::move(skipped);
    if (!r.block_reports.empty()) {
        json blocks = json::array();
        for (const CheckSuiteReport& sub : r.block_reports)
            blocks.push_back(report_to_json(sub));
        j["blocks"] = std::move(blocks);
    }
    return j;
}

CheckSuiteReport report_from_json(const json& j) {
    if (!j.is_object()) bad("report must be a JSON object");
    CheckSuiteReport r;
    r.record_name = string_field(j, "record");
    if (j.contains("verdicts")) {
        for (const json& vj : j.at("verdicts")) {
            Verdict v;
            v.check_id = string_field(vj, "check_id");
            v.lhs = parse_rat(string_field(vj, "lhs"));
            v.rhs = parse_rat(string_field(vj, "rhs"));
            if (!vj.contains("holds") || !vj.at("holds").is_boolean() ||
                !vj.contains("equality") || !vj.at("equality").is_boolean())
                bad("verdict needs boolean 'holds' and 'equality'");
            v.holds = vj.at("holds").get<bool>();
            v.equality = vj.at("equality").get<bool>();
            if (vj.contains("notes"))
                for (const json& n : vj.at("notes")) v.notes.push_back(n.get<std::string>());
            // verdicts sharing a check-id stem ran as one registered check
            std::string group = v.check_id.substr(0, v.check_id.find('.'));
            if (r.results.empty() || r.results.back().check_id != group)
                r.results.push_back({group, {}});
            r.results.back().verdicts.push_back(std::move(v));
        }
    }
    if (j.contains("skipped"))
        for (const json& sj : j.at("skipped"))
            r.skipped.push_back({string_field(sj, "check_id"), string_field(sj, "reason")});
    if (j.contains("blocks"))
        for (const json& bj : j.at("blocks")) r.block_reports.push_back(report_from_json(bj));
    return r;
}

}  // namespace blockcheck
