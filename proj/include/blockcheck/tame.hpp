#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "blockcheck/matrix.hpp"
#include "blockcheck/verdict.hpp"

namespace blockcheck {

/// Cartan-matrix families of the tame 2-blocks (dihedral, semidihedral,
/// quaternion defect groups), keyed by the classification's family tags.
/// SD3C2 and SD3H are "speculative": whether blocks with these Cartan
/// matrices actually occur is open, so sweeps exclude them unless asked.
enum class TameFamily {
    TWO_SIMPLE,
    D3A1,
    D3B1,
    D3K,
    SD3A1,
    SD3B1,
    SD3C2,
    SD3D,
    SD3H,
    Q3A2,
    Q3B,
    Q3K,
};

const std::vector<TameFamily>& all_tame_families();
std::string family_name(TameFamily f);
std::optional<TameFamily> parse_family(const std::string& name);
bool is_speculative(TameFamily f);

/// One parameter point of one family: the defect group order |D| (a power of
/// 2) plus the named parameters (k, r, s, a) the family's shape uses.
struct TameFamilySpec {
    TameFamily family = TameFamily::TWO_SIMPLE;
    Int defect_group_order;
    std::map<std::string, Int> parameters;
    bool speculative = false;
};

/// Every admissible parameter assignment of the family at the given |D|
/// (empty when |D| is not a power of 2 or below the family's minimum).
/// Assignments are enumerated as stated, without deduplication, so e.g. the
/// two-module family at |D| = 8 yields four (k, r) combinations.
std::vector<TameFamilySpec> admissible_specs(TameFamily f, const Int& defect);

/// The family's Cartan matrix with parameters substituted. Throws
/// BadParameters naming the violated constraint on inadmissible parameters.
IntMatrix family_cartan(const TameFamilySpec& spec);

/// Trace bounds at one parameter point:
///   tame_trace.family_bound   - the family's sharper bound, when one is
///                               asserted beyond the uniform bound
///   tame_trace.uniform_bound  - 5/4*|D|+2 (two simples) or 3/2*|D|+4
///   tame_trace.trace_le_lbd   - tr C <= l(B)*|D|
std::vector<Verdict> tame_trace_check(const TameFamilySpec& spec);

struct TameSweepRow {
    TameFamilySpec spec;
    Int trace_value;
    Int determinant;
    bool det_power_of_two = false;
    bool positive_definite = false;
    std::vector<Int> elementary_divisors;
    std::vector<Verdict> verdicts;
};

struct TameSweepReport {
    std::vector<TameSweepRow> rows;
    std::size_t verdict_failures = 0;   // verdicts with holds == false
    std::size_t structure_failures = 0; // non-PD matrices or non-2-power dets
    std::size_t speculative_excluded = 0;
};

/// Exhaustive sweep of the given families over the given defect orders.
TameSweepReport sweep(const std::vector<TameFamily>& families,
                      const std::vector<Int>& defect_orders, bool include_speculative);

/// 4, 8, 16, ..., up to and including max (BadParameters if max < 4 or not a
/// power of 2).
std::vector<Int> defect_range(const Int& max);

}  // namespace blockcheck
