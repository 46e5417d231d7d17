#pragma once

#include "apparent_loci/poly.hpp"

#include <memory>

namespace apparent_loci {

/// Hyperelliptic curve y^2 = f(x) with f squarefree of degree 3 or 5 over Q,
/// so genus 1 or 2 and a single place at infinity.
class Curve {
public:
    /// Validates degree and squarefreeness; throws DomainError otherwise.
    explicit Curve(Poly f);

    const Poly& f() const { return f_; }
    const Poly& df() const { return df_; }
    int genus() const { return genus_; }

    friend bool operator==(const Curve& a, const Curve& b) { return a.f_ == b.f_; }

    std::string to_string() const { return "y^2 = " + f_.to_string(); }

private:
    Poly f_;
    Poly df_;
    int genus_;
};

using CurvePtr = std::shared_ptr<const Curve>;

inline CurvePtr make_curve(const Poly& f) { return std::make_shared<const Curve>(f); }

}  // namespace apparent_loci
