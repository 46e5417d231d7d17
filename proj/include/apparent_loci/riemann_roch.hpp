#pragma once

#include "apparent_loci/func_elem.hpp"
#include "apparent_loci/place.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

namespace apparent_loci {

/// Q-basis of L(D) = {h : div(h) + D >= 0} from the ansatz h = (u + v*y)/d.
/// The basis is the canonical kernel basis of the linear conditions, with
/// unknowns ordered u_0..u_du, v_0..v_dv (so L(3*inf) on a genus one curve
/// gives 1, x, y).
std::vector<FuncElem> rr_basis(const CurvePtr& curve, const Divisor& D);

/// Small-integer coefficient vectors for combining a basis of size n:
/// by number of nonzero entries, then support (lexicographic), then
/// coefficients in the order 1, -1, 2, -2. At most `cap` vectors.
std::vector<std::vector<long>> candidate_combinations(std::size_t n, std::size_t cap);

/// Number of candidate combinations tried by the selection searches below.
inline constexpr std::size_t kSelectionCap = 400;

/// Sum of coeffs[i] * basis[i].
FuncElem combine(const CurvePtr& curve, const std::vector<FuncElem>& basis, const std::vector<long>& coeffs);

struct Prop2Section {
    FuncElem h;
    int k = 0;               // h lies in L(D + k*P), k = g - deg D
    Divisor zeros_off_P;     // div(h) + D + k*P away from P; degree <= g
};

/// Nonzero h in L(D + k*P) with k = g - deg D. Among the candidate
/// combinations the first one whose zeros off P are all rational
/// unramified affine points is taken, otherwise the one with the fewest
/// such bad geometric points. P must be rational.
Prop2Section prop2_section(const CurvePtr& curve, const Divisor& D, const Place& P);

struct VanishingFunction {
    FuncElem f;
    std::vector<Place> exceptional;  // listed points where ord(f) >= 2
};

/// f vanishing at every listed point with poles only at P, chosen to
/// minimize the number of points where it vanishes to order >= 2.
VanishingFunction vanishing_function(const CurvePtr& curve, const std::vector<Place>& points, const Place& P);

/// g nonzero at points[i], ord >= d at the other listed points, poles only
/// at P. Searches L(k*P - d*sum_{j != i} z_j) for total degree g..2g.
/// Throws SearchExhausted if nothing qualifies.
FuncElem selector_function(const CurvePtr& curve, const std::vector<Place>& points, std::size_t i,
                           const Place& P, int d);

struct ExactOrderFunction {
    FuncElem h;
    std::vector<Place> q_prime;  // keys where the pole order falls short
    Divisor q_dblprime;          // zeros away from the keys and P
};

/// h in L(sum d_i z_i + k*P), k = g - sum d_i, maximizing the number of keys
/// with ord(h, z_i) = -d_i exactly. |q'| + deg q'' <= g.
ExactOrderFunction exact_order_function(const CurvePtr& curve, const std::map<Place, int>& weights,
                                        const Place& P);

}  // namespace apparent_loci
