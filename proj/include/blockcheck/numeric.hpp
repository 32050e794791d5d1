#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace blockcheck {

// All arithmetic in this library is exact. Int is an arbitrary-precision
// integer, Rat an arbitrary-precision rational kept in lowest terms with
// positive denominator.
using Int = mpz_class;
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    enum class Kind {
        InsufficientData,
        InconsistentData,
        DimensionMismatch,
        NotSymmetric,
        NotPositiveDefinite,
        NotNonnegative,
        BadTolerance,
        Reducible,
        BadParameters,
        BadInput,
    };

    Error(Kind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Canonical rational from numerator/denominator (reduced, denominator > 0).
inline Rat ratio(const Int& num, const Int& den) {
    if (den == 0) throw Error(Error::Kind::BadInput, "rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat to_rat(const Int& n) { return Rat(n); }

/// Renders "num/den", or just "num" for integers.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Int int_pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd_all(const std::vector<Int>& xs) {
    Int g = 0;
    for (const Int& x : xs) g = gcd(g, x);
    return g;
}

/// Trial division; inputs here are small primes and orders of finite groups.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (Int d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// True iff n = p^k for some k >= 0 (so n = 1 is always a power).
inline bool is_power_of(const Int& n, const Int& p) {
    if (n < 1 || p < 2) return false;
    Int m = n;
    while (m % p == 0) m /= p;
    return m == 1;
}

/// Largest power of p dividing n (n > 0).
inline Int p_part(const Int& n, const Int& p) {
    if (n <= 0) throw Error(Error::Kind::BadInput, "p_part of non-positive integer");
    Int part = 1, m = n;
    while (m % p == 0) {
        m /= p;
        part *= p;
    }
    return part;
}

/// Largest divisor of n coprime to p.
inline Int p_prime_part(const Int& n, const Int& p) { return n / p_part(n, p); }

/// Parses "N", "N/M" into a rational (used for CLI tolerances).
inline Rat parse_rat(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw Error(Error::Kind::BadInput, "cannot parse rational: " + s);
    if (q.get_den() == 0)
        throw Error(Error::Kind::BadInput, "zero denominator: " + s);
    q.canonicalize();
    return q;
}

}  // namespace blockcheck
