#pragma once

#include <map>
#include <string>
#include <variant>

#include <json.hpp>

#include "blockcheck/block.hpp"
#include "blockcheck/brauer_tree.hpp"
#include "blockcheck/checkers.hpp"

namespace blockcheck {

/// One bundled-example file: the record itself plus where its numbers come
/// from and which checks are documented to fail on it. The expectation keys
/// are check ids, optionally prefixed "blocks[i]." to address one block of a
/// group record; the values are "pass" or "fail".
struct CorpusEntry {
    std::variant<BlockRecord, GroupRecord, BrauerTree> payload;
    std::string provenance;
    std::map<std::string, bool> expected;  // path -> expected to hold?
};

BlockRecord block_from_json(const nlohmann::json& j);
GroupRecord group_from_json(const nlohmann::json& j);
BrauerTree tree_from_json(const nlohmann::json& j);

/// Dispatches on shape: "blocks" means a group record, "edges" a tree,
/// anything else a block record. Extra keys "provenance" and "expected" are
/// picked up when present.
CorpusEntry entry_from_json(const nlohmann::json& j);
CorpusEntry entry_from_string(const std::string& text);
CorpusEntry entry_from_file(const std::string& path);

nlohmann::json block_to_json(const BlockRecord& b);
nlohmann::json group_to_json(const GroupRecord& g);
nlohmann::json tree_to_json(const BrauerTree& t);

/// Report schema: {"record": name, "verdicts": [{check_id, lhs, rhs, holds,
/// equality, notes}], "skipped": [{check_id, reason}]} with lhs/rhs rendered
/// exactly as "num/den" (or a bare integer). Group reports add "blocks".
nlohmann::json report_to_json(const CheckSuiteReport& r);
CheckSuiteReport report_from_json(const nlohmann::json& j);

}  // namespace blockcheck
