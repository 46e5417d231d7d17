#include "apparent_loci/gauge.hpp"

#include "apparent_loci/errors.hpp"

#include <algorithm>
#include <set>

namespace apparent_loci {

FuncElem derive(const FuncElem& u) {
    const CurvePtr& c = u.curve();
    RatFunc a = u.a().derivative();
    RatFunc b = u.b().derivative() + u.b() * RatFunc(c->df(), Rational(2) * c->f());
    return FuncElem(c, a, b);
}

FuncMatrix derive(const FuncMatrix& m) {
    FuncMatrix r = m;
    for (auto& e : r.entries()) e = derive(e);
    return r;
}

SystemMatrix gauge_transform(const SystemMatrix& A, const FuncMatrix& M) {
    if (M.det().is_zero()) throw DomainError("gauge transformation by a singular matrix");
    FuncMatrix Minv = M.inverse();
    return Minv * A * M - Minv * derive(M);
}

std::string to_string(SingularKind k) {
    switch (k) {
        case SingularKind::BadPoint:
            return "bad";
        case SingularKind::Basepoint:
            return "basepoint";
        case SingularKind::Declared:
            return "declared";
        case SingularKind::Ramified:
            return "ramified";
        case SingularKind::Infinity:
            return "infinity";
        case SingularKind::InputFrame:
            return "input-frame";
        case SingularKind::Unexpected:
            return "unexpected";
    }
    return "unexpected";
}

EmittedSystem emit_system(const SystemMatrix& A_orig, const TrivializationCertificate& cert,
                          const std::vector<Place>& declared, bool allow_input_frame) {
    EmittedSystem out;
    out.A = gauge_transform(A_orig, cert.M);
    std::set<Place> poles;
    for (const auto& e : out.A.entries()) {
        if (e.is_zero()) continue;
        Divisor d = pole_divisor(e);
        for (const auto& [p, k] : d.terms()) poles.insert(p);
    }
    std::set<Place> bad;
    for (const auto& b : cert.bad_set) bad.insert(b.place);
    std::set<Place> input;
    if (allow_input_frame && !poles.empty()) {
        DependenceLocus loc = dependence_locus(cert.input_frame);
        for (const auto& [p, k] : loc.poles.terms()) input.insert(p);
        for (const auto& [p, k] : loc.dep_points) input.insert(p);
    }
    const Curve& curve = *cert.M.curve();
    for (const auto& p : poles) {
        SingularKind kind = SingularKind::Unexpected;
        if (bad.count(p))
            kind = SingularKind::BadPoint;
        else if (p == cert.P)
            kind = SingularKind::Basepoint;
        else if (std::find(declared.begin(), declared.end(), p) != declared.end())
            kind = SingularKind::Declared;
        else if (p.is_infinity())
            kind = SingularKind::Infinity;
        else if (p.is_ramified() || (curve.f() % p.x_poly()).is_zero())
            kind = SingularKind::Ramified;
        else if (input.count(p))
            kind = SingularKind::InputFrame;
        if (kind == SingularKind::Unexpected) out.contained = false;
        out.singular.push_back(SingularPlace{p, kind});
    }
    return out;
}

}  // namespace apparent_loci
