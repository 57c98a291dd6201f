#ifndef SUPERSPENCER_RATIONAL_HPP
#define SUPERSPENCER_RATIONAL_HPP

#include <gmpxx.h>
#include <string>

namespace spencer {

// Exact rational scalar. All arithmetic in the library is exact; there is
// no floating-point mode. mpq_class keeps values in lowest terms with a
// positive denominator as long as inputs are canonical, so the only care
// needed is canonicalizing on construction from a num/den pair.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat frac(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat frac(const Int& num, const Int& den) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "-p" or "p/q".
inline Rat parse_rat(const std::string& s) {
    Rat q(s);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

} // namespace spencer

#endif
