#pragma once

#include <map>
#include <string>

#include "blockcheck/checkers.hpp"
#include "blockcheck/json_io.hpp"

namespace blockcheck {

/// Documented expectations for a record's checks: path -> should the check
/// come out satisfied? Paths are check ids, with a "blocks[i]." prefix for
/// checks of the i-th block inside a group record.
using Expectations = std::map<std::string, bool>;

enum class ExitStatus : int {
    Success = 0,   // everything satisfied or documented
    DataError = 1, // bad usage, malformed input, failed validation
    Finding = 2,   // an undocumented failure of a conjecture/theorem/open question
};

/// Worst severity across the report: a verdict counts as a finding when it
/// is unsatisfied and neither informational nor documented as "fail" in the
/// expectations, or when it contradicts an explicit expectation.
ExitStatus report_exit_status(const CheckSuiteReport& r, const Expectations& expected,
                              const Int& p);

/// Human-readable rendering of a suite report (verdict lines, skip lines,
/// expectation annotations, nested block sections).
std::string render_report_text(const CheckSuiteReport& r, const Expectations& expected,
                               const Int& p);

/// Summary header for one block: p, |D|, l(B), k(B), dim B and projective
/// degrees where computable.
std::string render_block_header(const BlockRecord& b);

/// One-line rendering of a verdict (shared by the check/tree/tame commands).
std::string render_verdict_line(const Verdict& v, Severity severity, bool expected_known,
                                bool expected_ok);

}  // namespace blockcheck
