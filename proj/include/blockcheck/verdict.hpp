#pragma once

#include <string>
#include <vector>

#include "blockcheck/numeric.hpp"

namespace blockcheck {

/// Outcome of one inequality check, lhs <= rhs, in exact arithmetic.
/// holds and equality are always derived from lhs and rhs, never stored
/// independently, so they cannot drift apart.
struct Verdict {
    std::string check_id;
    Rat lhs;
    Rat rhs;
    bool holds = false;
    bool equality = false;
    std::vector<std::string> notes;

    static Verdict compare(std::string check_id, Rat lhs, Rat rhs,
                           std::vector<std::string> notes = {}) {
        Verdict v;
        v.check_id = std::move(check_id);
        v.lhs = std::move(lhs);
        v.rhs = std::move(rhs);
        v.holds = v.lhs <= v.rhs;
        v.equality = v.lhs == v.rhs;
        v.notes = std::move(notes);
        return v;
    }

    bool operator==(const Verdict& o) const {
        return check_id == o.check_id && lhs == o.lhs && rhs == o.rhs && holds == o.holds &&
               equality == o.equality && notes == o.notes;
    }
};

/// A check that could not run on the given record, with the reason
/// (typically a missing optional field).
struct Skip {
    std::string check_id;
    std::string reason;

    bool operator==(const Skip&) const = default;
};

}  // namespace blockcheck
