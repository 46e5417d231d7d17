#pragma once

#include "apparent_loci/poly.hpp"

#include <vector>

namespace apparent_loci {

struct PolyFactor {
    Poly base;  // monic
    int multiplicity;
};

/// p = unit * prod base^multiplicity with monic irreducible bases over Q,
/// sorted by (degree, coefficients).
struct Factorization {
    Rational unit;
    std::vector<PolyFactor> factors;
};

/// Yun's algorithm; bases are monic, squarefree and pairwise coprime.
std::vector<PolyFactor> squarefree_decomposition(const Poly& p);

bool is_squarefree(const Poly& p);

/// Complete factorization over Q (Zassenhaus: modular factorization,
/// Hensel lifting, subset recombination). p must be nonzero.
Factorization factor(const Poly& p);

/// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const Poly& p);

}  // namespace apparent_loci
