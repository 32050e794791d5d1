#pragma once

#include <string>
#include <utility>
#include <vector>

#include "blockcheck/block.hpp"
#include "blockcheck/verdict.hpp"

namespace blockcheck {

/// dim B / (l(B)*|D|) <= sum phi(1)^2, conjecturally with equality exactly
/// when l(B) = 1; the verdict notes flag any mismatch between the equality
/// flag and l(B).
Verdict local_conjecture(const BlockRecord& b);

/// dim B / (l(B)*|D|) <= max phi(1)^2. Known to fail for some 2-blocks, so a
/// failure in characteristic 2 is informational, not a finding.
Verdict strong_local(const BlockRecord& b);

/// dim B / |D| <= sum phi(1)^2 (the variant without the l(B) factor), which
/// is known to be false in general; always informational.
Verdict no_lb_factor(const BlockRecord& b);

/// Two verdicts:
///   trace_criterion.sum          dim B / tr C <= sum phi(1)^2 (equality
///                                expected exactly when l(B) = 1)
///   trace_criterion.trace_le_lbd tr C <= l(B)*|D| (open question; failures
///                                are flagged loudly as potential findings)
std::pair<Verdict, Verdict> trace_criterion(const BlockRecord& b);

/// gcd(projective degrees) = |D| * gcd(Brauer degrees). The relation is a
/// theorem, so this check is satisfied only by the equality flag; the notes
/// carry u_B (the common p'-part) and compare the p-part against |G|_p.
Verdict gcd_diagnostic(const BlockRecord& b);

/// k(B) <= |D| (when ordinary degrees are present) and the per-character
/// bounds Phi(1) <= |D|^2 * phi(1) (when a Cartan matrix is present; known
/// counterexamples exist, so these are informational).
std::vector<Verdict> brauer_problem_diagnostics(const BlockRecord& b);

/// |G|_{p'} <= sum over all blocks of sum phi(1)^2.
Verdict global_conjecture(const GroupRecord& g);

/// |G|_{p'} / l(G) <= max phi(1)^2 over all blocks.
Verdict weak_global(const GroupRecord& g);

/// One registered check that ran: its id plus the verdicts it produced
/// (several for the multi-verdict checks).
struct CheckResult {
    std::string check_id;
    std::vector<Verdict> verdicts;

    bool operator==(const CheckResult&) const = default;
};

/// Outcome of running every registered check on one record. Each registered
/// check appears exactly once, in results or in skipped. Group reports nest
/// one sub-report per block after the group-level checks.
struct CheckSuiteReport {
    std::string record_name;
    std::vector<CheckResult> results;
    std::vector<Skip> skipped;
    std::vector<CheckSuiteReport> block_reports;

    std::size_t verdict_count() const {
        std::size_t n = 0;
        for (const auto& r : results) n += r.verdicts.size();
        return n;
    }

    bool operator==(const CheckSuiteReport&) const = default;
};

/// Runs the registered block checks (local_conjecture, strong_local,
/// no_lb_factor, trace_criterion, spectral_chain, gcd_diagnostic,
/// brauer_problem) in that fixed order, skipping those whose data
/// preconditions fail. The tolerance feeds the spectral enclosure.
CheckSuiteReport run_suite(const BlockRecord& b, const Rat& tolerance);

/// Group checks (global_conjecture, weak_global) followed by a nested block
/// suite per block.
CheckSuiteReport run_suite(const GroupRecord& g, const Rat& tolerance);

/// True when the verdict counts as satisfied: the equality flag for
/// gcd_diagnostic (an equation, not an inequality), holds for everything else.
bool verdict_ok(const Verdict& v);

/// How bad an unsatisfied verdict is. Checks whose failures are documented
/// possibilities (no_lb_factor, the per-character projective bound, the max
/// variant in characteristic 2) are informational; a failure anywhere else
/// contradicts a theorem, a conjecture, or an open question's expected
/// answer, and is reported as a finding.
enum class Severity { Ok, Informational, Finding };
Severity classify(const Verdict& v, const Int& p);

}  // namespace blockcheck
