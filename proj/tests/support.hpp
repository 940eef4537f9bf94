#pragma once

#include <random>

#include "poly.hpp"

namespace sforge::testing {

inline Scalar random_scalar(std::mt19937_64& rng, FieldTag k) {
    if (!k.is_rational()) return Scalar(k, mpz_class(static_cast<unsigned long>(rng() % k.modulus())));
    long num = static_cast<long>(rng() % 201) - 100;
    long den = static_cast<long>(rng() % 20) + 1;
    return Scalar(k, mpz_class(num), mpz_class(den));
}

inline Scalar random_nonzero(std::mt19937_64& rng, FieldTag k) {
    for (;;) {
        Scalar s = random_scalar(rng, k);
        if (!s.is_zero()) return s;
    }
}

/// Random homogeneous form of degree t with about half the monomials present.
inline Poly random_form(std::mt19937_64& rng, FieldTag k, int t, int nvars = 3) {
    Poly p(k, nvars);
    for (const auto& m : monomials_of_degree(t, nvars))
        if (rng() % 2) p.add_term(m, random_scalar(rng, k));
    return p;
}

}  // namespace sforge::testing
