#include "apparent_loci/curve.hpp"

#include "apparent_loci/errors.hpp"
#include "apparent_loci/factor.hpp"

namespace apparent_loci {

Curve::Curve(Poly f) : f_(std::move(f)), df_(f_.derivative()) {
    int d = f_.degree();
    if (d != 3 && d != 5)
        throw DomainError("curve: deg f must be 3 or 5 (odd-degree model of genus 1 or 2), got " + std::to_string(d));
    if (!is_squarefree(f_)) throw DomainError("curve: f(x) = " + f_.to_string() + " is not squarefree");
    genus_ = (d - 1) / 2;
}

}  // namespace apparent_loci
