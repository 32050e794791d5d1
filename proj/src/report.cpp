#include "blockcheck/report.hpp"

#include <sstream>

namespace blockcheck {

namespace {

// Severity of one verdict after applying the expectations: a documented
// failure is fine, a contradicted expectation never is.
Severity effective_severity(const Verdict& v, const Int& p, const Expectations& expected,
                            const std::string& path_prefix) {
    Severity s = classify(v, p);
    auto it = expected.find(path_prefix + v.check_id);
    if (it == expected.end()) return s;
    const bool expected_ok = it->second;
    if (verdict_ok(v) != expected_ok) return Severity::Finding;
    return Severity::Ok;
}

ExitStatus exit_status_walk(const CheckSuiteReport& r, const Expectations& expected,
                            const Int& p, const std::string& prefix) {
    ExitStatus worst = ExitStatus::Success;
    for (const CheckResult& c : r.results)
        for (const Verdict& v : c.verdicts)
            if (effective_severity(v, p, expected, prefix) == Severity::Finding)
                worst = ExitStatus::Finding;
    for (std::size_t i = 0; i < r.block_reports.size(); ++i) {
        std::string sub = prefix + "blocks[" + std::to_string(i) + "].";
        if (exit_status_walk(r.block_reports[i], expected, p, sub) == ExitStatus::Finding)
            worst = ExitStatus::Finding;
    }
    return worst;
}

std::string pad(const std::string& s, std::size_t width) {
    return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' ');
}

void render_walk(std::ostream& os, const CheckSuiteReport& r, const Expectations& expected,
                 const Int& p, const std::string& prefix, int indent) {
    const std::string ind(static_cast<std::size_t>(indent), ' ');
    for (const CheckResult& c : r.results)
        for (const Verdict& v : c.verdicts) {
            auto it = expected.find(prefix + v.check_id);
            os << ind
               << render_verdict_line(v, classify(v, p), it != expected.end(),
                                      it != expected.end() && it->second)
               << "\n";
        }
    for (const Skip& s : r.skipped)
        os << ind << pad(s.check_id, 34) << "SKIP   " << s.reason << "\n";
    os << ind << "checks: " << r.results.size() << " run, " << r.skipped.size()
       << " skipped; verdicts: " << r.verdict_count() << "\n";
    for (std::size_t i = 0; i < r.block_reports.size(); ++i) {
        os << ind << "block[" << i << "]: " << r.block_reports[i].record_name << "\n";
        render_walk(os, r.block_reports[i], expected, p,
                    prefix + "blocks[" + std::to_string(i) + "].", indent + 2);
    }
}

}  // namespace

ExitStatus report_exit_status(const CheckSuiteReport& r, const Expectations& expected,
                              const Int& p) {
    return exit_status_walk(r, expected, p, "");
}

std::string render_verdict_line(const Verdict& v, Severity severity, bool expected_known,
                                bool expected_ok) {
    std::ostringstream os;
    const bool ok = verdict_ok(v);
    os << pad(v.check_id, 34);
    if (ok) {
        os << "PASS   ";
    } else if (expected_known && !expected_ok) {
        os << "FAIL   ";
    } else if (severity == Severity::Informational) {
        os << "FAIL   ";
    } else {
        os << "FAIL!  ";
    }
    os << rat_str(v.lhs) << (v.equality ? " = " : (v.holds ? " <= " : " > ")) << rat_str(v.rhs);
    if (ok && expected_known && !expected_ok)
        os << "   (unexpected: documented as a failing check, but it holds)";
    else if (!ok && expected_known && !expected_ok)
        os << "   (expected: known counterexample)";
    else if (!ok && expected_known && expected_ok)
        os << "   (unexpected: documented as passing)";
    else if (!ok && severity == Severity::Informational)
        os << "   (informational)";
    else if (!ok)
        os << "   (FINDING: undocumented failure)";
    return os.str();
}

std::string render_block_header(const BlockRecord& b) {
    std::ostringstream os;
    os << "record: " << b.name << " (p = " << b.p.get_str()
       << ", |D| = " << b.defect_group_order.get_str() << ", l(B) = " << b.l();
    if (auto k = b.k()) os << ", k(B) = " << *k;
    os << ")\n";
    try {
        os << "  dim B = " << dim_b(b).get_str() << "\n";
    } catch (const Error&) {
        // partial record; the suite will report the skips
    }
    if (b.cartan) {
        os << "  projective degrees:";
        for (const Int& x : projective_degrees(b)) os << " " << x.get_str();
        os << "\n";
    }
    return os.str();
}

std::string render_report_text(const CheckSuiteReport& r, const Expectations& expected,
                               const Int& p) {
    std::ostringstream os;
    render_walk(os, r, expected, p, "", 2);
    return os.str();
}

}  // namespace blockcheck
