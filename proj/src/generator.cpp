#include "apparent_loci/generator.hpp"

#include "apparent_loci/valuation.hpp"

namespace apparent_loci {

namespace {

bool zeros_are_jet_sites(const FuncElem& u) {
    Divisor D = divisor_of(u);
    for (const auto& [p, k] : D.terms())
        if (k > 0 && !p.is_jet_site()) return false;
    return true;
}

long pick(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

}  // namespace

std::vector<FuncElem> good_functions(const CurvePtr& curve) {
    std::vector<FuncElem> out;
    FuncElem X = FuncElem::x(curve), Y = FuncElem::y(curve);
    for (long x0 = -4; x0 <= 4; ++x0) {
        FuncElem u = X - FuncElem::constant(curve, x0);
        if (zeros_are_jet_sites(u)) out.push_back(u);
    }
    for (long a = -3; a <= 3; ++a)
        for (long b = -3; b <= 3; ++b) {
            FuncElem u = Y - Rational(a) * X - FuncElem::constant(curve, b);
            if (zeros_are_jet_sites(u)) out.push_back(u);
        }
    return out;
}

FuncMatrix generate_frame(const CurvePtr& curve, std::size_t p, std::mt19937_64& rng, const GeneratorOptions& opts) {
    static thread_local std::vector<FuncElem> cache;
    static thread_local CurvePtr cached_for;
    if (!cached_for || !(*cached_for == *curve)) {
        cache = good_functions(curve);
        cached_for = curve;
    }
    std::vector<FuncElem> good;
    for (const auto& u : cache) good.emplace_back(curve, u.a(), u.b());

    FuncElem X = FuncElem::x(curve), Y = FuncElem::y(curve);
    auto elementary_product = [&]() {
        FuncMatrix m = FuncMatrix::identity(curve, p);
        if (p < 2) return m;
        for (int t = 0; t < opts.elementary_factors; ++t) {
            std::size_t i = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(p) - 1));
            std::size_t j = static_cast<std::size_t>(pick(rng, 0, static_cast<long>(p) - 2));
            if (j >= i) ++j;
            FuncElem e = FuncElem::constant(curve, pick(rng, -2, 2)) + Rational(pick(rng, -1, 1)) * X +
                         Rational(pick(rng, -1, 1)) * Y;
            FuncMatrix E = FuncMatrix::identity(curve, p);
            E(i, j) = e;
            m = m * E;
        }
        return m;
    };
    auto random_good = [&]() { return good[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(good.size()) - 1))]; };

    FuncMatrix A = elementary_product();
    std::vector<FuncElem> delta;
    for (std::size_t i = 0; i < p; ++i) {
        FuncElem d = FuncElem::constant(curve, 1);
        long n = good.empty() ? 0 : pick(rng, 0, opts.max_good_per_entry);
        for (long t = 0; t < n; ++t) d *= random_good();
        delta.push_back(d);
    }
    FuncMatrix B = elementary_product();
    std::vector<FuncElem> lambda;
    for (std::size_t i = 0; i < p; ++i) {
        if (opts.allow_poles && !good.empty() && pick(rng, 0, 2) == 0)
            lambda.push_back(random_good().inverse());
        else
            lambda.push_back(FuncElem::constant(curve, 1));
    }
    return A * FuncMatrix::diagonal(curve, delta) * B * FuncMatrix::diagonal(curve, lambda);
}

FuncMatrix generate_system(const CurvePtr& curve, std::size_t p, std::mt19937_64& rng, std::vector<Place>& declared) {
    std::vector<FuncElem> good;
    for (const auto& u : good_functions(curve))
        if (u.b().is_zero()) good.push_back(u);
    FuncMatrix A(curve, p, p);
    if (good.empty()) return A;
    FuncElem u = good[static_cast<std::size_t>(pick(rng, 0, static_cast<long>(good.size()) - 1))];
    Divisor D = divisor_of(u);
    for (const auto& [z, k] : D.terms())
        if (k > 0) declared.push_back(z);
    FuncElem inv = u.inverse();
    for (auto& e : A.entries()) e = FuncElem::constant(curve, pick(rng, -2, 2)) + Rational(pick(rng, -2, 2)) * inv;
    return A;
}

std::uint64_t instance_seed(std::uint64_t seed, std::uint64_t g, std::uint64_t p, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(g), static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(index)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace apparent_loci
