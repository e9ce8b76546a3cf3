#pragma once

#include <gmpxx.h>
#include <Eigen/Core>
#include <string>

namespace paracon {

// Exact rational scalar.  GMP keeps every value canonical (lowest terms,
// denominator > 0) after each arithmetic operation, so equality is structural
// and no rounding ever occurs.
using Rat = mpq_class;
using Int = mpz_class;

// Safe two-argument constructor: mpq_class(n, d) does not canonicalize.
inline Rat rat(long num, long den = 1) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Rat rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

// "num/den" (or just "num" when den == 1); used by reports, never floats.
inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace paracon

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    typedef mpq_class Literal;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
    typedef mpz_class Real;
    typedef mpq_class NonInteger;
    typedef mpz_class Nested;
    typedef mpz_class Literal;

    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }

    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 100,
        MulCost = 80
    };
};

} // namespace Eigen

namespace paracon {

using QMatrix = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

} // namespace paracon
