#pragma once

#include <optional>
#include <vector>

#include "blockcheck/block.hpp"
#include "blockcheck/matrix.hpp"
#include "blockcheck/verdict.hpp"

namespace blockcheck {

/// Certified enclosure of the Perron root: lower and upper are the minimal
/// and maximal Collatz-Wielandt quotients (Cw)_i / w_i of one positive
/// witness vector w, so lower <= rho(C) <= upper is a theorem, and anyone can
/// re-verify the bounds from the stored witness with one exact mat-vec.
struct SpectralEnclosure {
    Rat lower;
    Rat upper;
    std::vector<Rat> witness;

    Rat width() const { return upper - lower; }
};

/// Exact Rayleigh quotient <Cv,v>/<v,v> for a nonzero integer vector.
Rat rayleigh(const IntMatrix& c, const Vec& v);

/// If Cv = lambda * v for a rational lambda, returns lambda.
std::optional<Rat> eigenvector_scale(const IntMatrix& c, const Vec& v);

/// Certified Perron-root enclosure of width <= tolerance for a symmetric
/// nonnegative positive definite matrix (power iteration in exact rationals;
/// see SpectralEnclosure). Throws Reducible when the quotients fail to
/// converge within the iteration cap, which for these matrices means the
/// zero pattern splits the matrix into independent parts.
SpectralEnclosure pf_enclosure(const IntMatrix& c, const Rat& tolerance);

/// The three-step bound chain on a record with a Cartan matrix:
///   (i)  rayleigh(C, phi) <= upper(rho)
///   (ii) lower(rho) <= tr C
///   (iii) dim B / upper(rho) <= sum phi(1)^2
/// (iii) is the certified relaxation of the spectral bound on dim B; its
/// notes say whether the exact quotient dim B / rho(C) is itself decided at
/// the given tolerance. When C phi is exactly a scalar multiple of phi the
/// enclosure is exact and (iii) carries the equality flag.
std::vector<Verdict> spectral_chain_check(const BlockRecord& b, const Rat& tolerance);

}  // namespace blockcheck
