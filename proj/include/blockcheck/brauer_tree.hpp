#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "blockcheck/matrix.hpp"
#include "blockcheck/verdict.hpp"

namespace blockcheck {

/// A Brauer tree: e edges (one per simple module of the cyclic block), an
/// optional exceptional vertex of multiplicity m >= 2, and |D| = e*m + 1.
/// Edge order defines the row/column indexing of the derived Cartan matrix.
struct BrauerTree {
    std::vector<std::string> vertices;
    std::vector<std::pair<std::string, std::string>> edges;
    std::optional<std::string> exceptional;
    Int multiplicity = 1;

    std::size_t edge_count() const { return edges.size(); }
    Int defect_order() const { return Int(static_cast<long>(edges.size())) * multiplicity + 1; }

    bool operator==(const BrauerTree&) const = default;
};

/// Structural validation; pass the block's prime to additionally require
/// that e*m + 1 is a power of p.
std::vector<std::string> validate(const BrauerTree& t,
                                  const std::optional<Int>& p = std::nullopt);

/// A multiplicity-1 tree with a marked exceptional vertex means the same
/// block as the unmarked tree; this drops the marker and records a note.
BrauerTree normalized(const BrauerTree& t, std::vector<std::string>& notes);

/// Cartan matrix of the cyclic block: for edges i != j the entry is the
/// multiplicity of their shared vertex (0 if disjoint, where the exceptional
/// vertex counts m and ordinary vertices count 1); the diagonal entry of an
/// edge is the sum of its two endpoint multiplicities.
IntMatrix cartan_from_tree(const BrauerTree& t);

/// True iff all edges meet in one vertex, and that vertex is the exceptional
/// one whenever m >= 2.
bool is_star(const BrauerTree& t);

/// Entrywise 0 <= C <= (star matrix: diagonal m+1, off-diagonal m).
/// lhs is the largest violation of either bound, rhs is 0, so this holds for
/// every valid tree; equality means some entry is tight against the star.
Verdict star_dominance_check(const BrauerTree& t);

/// dim B / |D| <= sum of squared degrees, with dim B = phi^T C phi for the
/// tree's Cartan matrix. Equality happens exactly for star trees with
/// constant degree vectors; the verdict cross-checks that and flags any
/// divergence in its notes.
Verdict cyclic_inequality(const BrauerTree& t, const Vec& degrees);

/// Star tree with e edges and multiplicity m (center exceptional iff m >= 2).
BrauerTree star_tree(std::size_t e, const Int& m);

}  // namespace blockcheck
