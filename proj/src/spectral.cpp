#include "blockcheck/spectral.hpp"

#include <algorithm>

#include "blockcheck/linalg.hpp"

namespace blockcheck {

namespace {

constexpr int kIterationCap = 10000;

struct CwBounds {
    Rat lower;
    Rat upper;
    std::vector<Rat> image;  // C * w, reused as the next iterate
};

CwBounds cw_bounds(const IntMatrix& c, const std::vector<Rat>& w) {
    const std::size_t n = c.size();
    CwBounds b;
    b.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rat s = 0;
        for (std::size_t j = 0; j < n; ++j) s += Rat(c.at(i, j)) * w[j];
        b.image[i] = s;
    }
    for (std::size_t i = 0; i < n; ++i) {
        Rat q = b.image[i] / w[i];
        if (i == 0 || q < b.lower) b.lower = q;
        if (i == 0 || q > b.upper) b.upper = q;
    }
    return b;
}

// Snap a positive value in (0, 1] onto the grid with denominator 2^bits.
// Keeping witness denominators bounded is what stops the exact power
// iteration from blowing up; the Collatz-Wielandt bounds stay valid for any
// positive vector, so rounding costs accuracy but never soundness.
Rat compress(const Rat& x, unsigned long bits) {
    Int scaled_num = x.get_num() << bits;
    Int rounded;
    // round to nearest: floor(num/den + 1/2) = floor((2num + den) / (2den))
    mpz_fdiv_q(rounded.get_mpz_t(), Int(2 * scaled_num + x.get_den()).get_mpz_t(),
               Int(2 * x.get_den()).get_mpz_t());
    if (rounded <= 0) rounded = 1;
    Rat q(rounded, Int(1) << bits);
    q.canonicalize();
    return q;
}

}  // namespace

Rat rayleigh(const IntMatrix& c, const Vec& v) {
    if (v.size() != c.size())
        throw Error(Error::Kind::DimensionMismatch, "vector length does not match matrix size");
    Int vv = dot(v, v);
    if (vv == 0) throw Error(Error::Kind::BadInput, "rayleigh quotient of the zero vector");
    return ratio(quad_form(c, v), vv);
}

std::optional<Rat> eigenvector_scale(const IntMatrix& c, const Vec& v) {
    if (v.size() != c.size())
        throw Error(Error::Kind::DimensionMismatch, "vector length does not match matrix size");
    Vec cv = mat_vec(c, v);
    std::optional<Rat> lambda;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) {
            if (cv[i] != 0) return std::nullopt;
            continue;
        }
        Rat q = ratio(cv[i], v[i]);
        if (!lambda)
            lambda = q;
        else if (*lambda != q)
            return std::nullopt;
    }
    return lambda;
}

SpectralEnclosure pf_enclosure(const IntMatrix& c, const Rat& tolerance) {
    if (tolerance <= 0) throw Error(Error::Kind::BadTolerance, "tolerance not positive");
    if (!is_nonnegative(c)) throw Error(Error::Kind::NotNonnegative, "not nonnegative");
    if (!is_symmetric(c)) throw Error(Error::Kind::NotSymmetric, "not symmetric");
    if (!is_positive_definite(c))
        throw Error(Error::Kind::NotPositiveDefinite, "not positive definite");

    const std::size_t n = c.size();

    // Witness grid resolution: enough bits to resolve the tolerance plus a
    // generous safety margin, so compression error never dominates.
    Rat inv_tol = 1 / tolerance;
    Int ceil_inv;
    mpz_cdiv_q(ceil_inv.get_mpz_t(), inv_tol.get_num().get_mpz_t(),
               inv_tol.get_den().get_mpz_t());
    unsigned long bits = mpz_sizeinbase(ceil_inv.get_mpz_t(), 2) + 64;

    std::vector<Rat> w(n, Rat(1));
    CwBounds first = cw_bounds(c, w);

    SpectralEnclosure best;
    best.lower = first.lower;
    best.upper = first.upper;
    best.witness = w;

    CwBounds cur = first;
    for (int iter = 0; iter < kIterationCap; ++iter) {
        if (best.width() <= tolerance) return best;

        // next witness: normalize the image to max entry 1, then snap to the
        // dyadic grid (stays positive: C has a positive diagonal here)
        Rat max_entry = cur.image[0];
        for (const Rat& x : cur.image) max_entry = std::max(max_entry, x);
        for (std::size_t i = 0; i < n; ++i) w[i] = compress(cur.image[i] / max_entry, bits);

        cur = cw_bounds(c, w);
        // Only intervals nested inside the all-ones interval are eligible, so
        // the final enclosure always respects the first Collatz-Wielandt step
        // (min row sum <= lower, upper <= max row sum).
        if (cur.lower >= first.lower && cur.upper <= first.upper &&
            cur.upper - cur.lower < best.width()) {
            best.lower = cur.lower;
            best.upper = cur.upper;
            best.witness = w;
        }
    }
    if (best.width() <= tolerance) return best;
    throw Error(Error::Kind::Reducible,
                "reducible matrix: Collatz-Wielandt quotients stalled at width " +
                    rat_str(best.width()) + " above tolerance " + rat_str(tolerance));
}

std::vector<Verdict> spectral_chain_check(const BlockRecord& b, const Rat& tolerance) {
    if (!b.cartan)
        throw Error(Error::Kind::InsufficientData,
                    "insufficient data: spectral chain needs a cartan matrix");
    const IntMatrix& c = *b.cartan;
    const Vec& phi = b.brauer_degrees;

    SpectralEnclosure enc;
    std::vector<std::string> shared_notes;
    std::optional<Rat> exact_scale = eigenvector_scale(c, phi);
    if (exact_scale) {
        // phi is a positive eigenvector, which pins the Perron root exactly:
        // lambda <= rho by Rayleigh, rho <= lambda by the max quotient.
        enc.lower = *exact_scale;
        enc.upper = *exact_scale;
        enc.witness.assign(phi.begin(), phi.end());
        shared_notes.push_back("C*phi = " + rat_str(*exact_scale) +
                               "*phi exactly, so rho(C) = " + rat_str(*exact_scale));
    } else {
        enc = pf_enclosure(c, tolerance);
        shared_notes.push_back("rho(C) in [" + rat_str(enc.lower) + ", " + rat_str(enc.upper) +
                               "], width " + rat_str(enc.width()) + ", tolerance " +
                               rat_str(tolerance));
    }

    Int dim = dim_b(b);
    Int sum_sq = sum_phi_squared(b);
    Int tr = trace(c);

    std::vector<Verdict> out;
    out.push_back(Verdict::compare("spectral_chain.rayleigh_le_upper", rayleigh(c, phi),
                                   enc.upper, shared_notes));
    out.push_back(Verdict::compare("spectral_chain.lower_le_trace", enc.lower, to_rat(tr),
                                   shared_notes));

    Rat lhs = Rat(dim) / enc.upper;
    Rat rhs = to_rat(sum_sq);
    std::vector<std::string> notes = shared_notes;
    notes.push_back("dim B = " + dim.get_str());
    if (Rat(dim) / enc.lower <= rhs) {
        notes.push_back("certified for the exact Perron root: dim B / rho(C) <= " +
                        rat_str(rhs));
    } else if (lhs <= rhs) {
        notes.push_back("undecided at tolerance " + rat_str(tolerance) +
                        ": the enclosure straddles the bound, so only dim B / upper is certified");
    } else {
        notes.push_back("certified violation: dim B / rho(C) >= dim B / upper > " + rat_str(rhs));
    }
    Verdict main = Verdict::compare("spectral_chain.dim_over_upper_le_sumsq", lhs, rhs, notes);
    if (main.equality && exact_scale)
        main.notes.push_back(
            "equality attained, i.e. C*phi = rho(C)*phi; for the principal block of a p-solvable "
            "group this is the p-length-one situation");
    out.push_back(main);
    return out;
}

}  // namespace blockcheck
