#pragma once

#include <optional>
#include <string>
#include <vector>

#include "blockcheck/matrix.hpp"

namespace blockcheck {

/// One p-block, as ingested data. Only the prime, the defect group order and
/// the Brauer character degrees are mandatory; everything else is optional so
/// records can carry exactly what the literature provides. Checks declare
/// their own preconditions and skip when a field is missing.
struct BlockRecord {
    std::string name;
    Int p = 0;
    Int defect_group_order = 0;          // |D|, a power of p
    Vec brauer_degrees;                  // phi_1(1), ..., phi_l(1)
    std::optional<Vec> ordinary_degrees; // chi(1) for chi in Irr(B)
    std::optional<IntMatrix> cartan;     // l x l
    std::optional<std::vector<Vec>> decomposition;  // k x l, entries >= 0
    std::optional<Int> group_p_part;     // |G|_p
    std::optional<Int> group_order;      // |G|

    std::size_t l() const { return brauer_degrees.size(); }

    std::optional<std::size_t> k() const {
        if (ordinary_degrees) return ordinary_degrees->size();
        return std::nullopt;
    }

    bool operator==(const BlockRecord&) const = default;
};

struct GroupRecord {
    std::string name;
    Int p = 0;
    Int group_order = 0;
    std::vector<BlockRecord> blocks;

    std::size_t l_total() const {
        std::size_t n = 0;
        for (const auto& b : blocks) n += b.l();
        return n;
    }

    bool operator==(const GroupRecord&) const = default;
};

/// Checks every data invariant; returns one human-readable description per
/// violation (empty list = valid). Violations are data, not exceptions.
std::vector<std::string> validate(const BlockRecord& b);
std::vector<std::string> validate(const GroupRecord& g);

/// dim B. Uses phi^T C phi when a Cartan matrix is present, else the sum of
/// squared ordinary degrees. When both are computable they must agree;
/// disagreement is a hard error (InconsistentData) since every downstream
/// inequality depends on this number.
Int dim_b(const BlockRecord& b);

/// Degrees of the projective indecomposables, Phi = C phi componentwise.
Vec projective_degrees(const BlockRecord& b);

Int sum_phi_squared(const BlockRecord& b);
Int max_phi_squared(const BlockRecord& b);

}  // namespace blockcheck
