#pragma once

#include "apparent_loci/matrix.hpp"
#include "apparent_loci/place.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace apparent_loci {

/// Functions x - x0 and y - (a*x + b) with small integer data whose zeros
/// are all rational unramified affine points.
std::vector<FuncElem> good_functions(const CurvePtr& curve);

struct GeneratorOptions {
    int elementary_factors = 2;  // per side
    int max_good_per_entry = 2;
    bool allow_poles = true;
};

/// Random frame A * Delta * B * Lambda: A, B products of elementary matrices
/// with entries c0 + c1*x + c2*y, Delta diagonal of products of good
/// functions, Lambda diagonal of inverses of good functions (or 1).
/// Dependence points and poles are therefore rational unramified points.
FuncMatrix generate_frame(const CurvePtr& curve, std::size_t p, std::mt19937_64& rng,
                     const GeneratorOptions& opts = {});

/// Random system matrix with entries c0 + c1/u for one good function u;
/// the zeros of u are appended to `declared`, and the poles of the result
/// lie there.
FuncMatrix generate_system(const CurvePtr& curve, std::size_t p, std::mt19937_64& rng, std::vector<Place>& declared);

/// Seed for instance `index` of a run, so instances are independent of
/// execution order.
std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t g, std::uint64_t p, std::uint64_t index);

}  // namespace apparent_loci
