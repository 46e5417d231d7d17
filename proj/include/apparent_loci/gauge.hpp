#pragma once

#include "apparent_loci/trivializer.hpp"

#include <string>
#include <vector>

namespace apparent_loci {

/// p x p system d(alpha)/dx = A * alpha.
using SystemMatrix = FuncMatrix;

/// d/dx with dy/dx = f'(x) / (2y).
FuncElem derive(const FuncElem& u);
FuncMatrix derive(const FuncMatrix& m);

/// M^-1 A M - M^-1 M': the system for beta where alpha = M beta.
/// Throws DomainError when M is singular.
SystemMatrix gauge_transform(const SystemMatrix& A, const FuncMatrix& M);

enum class SingularKind { BadPoint, Basepoint, Declared, Ramified, Infinity, InputFrame, Unexpected };

std::string to_string(SingularKind k);

struct SingularPlace {
    Place place;
    SingularKind kind = SingularKind::Unexpected;
};

struct EmittedSystem {
    SystemMatrix A;
    std::vector<SingularPlace> singular;  // pole places of the entries, classified
    bool contained = true;                // no Unexpected entries
};

/// Gauge-transforms A_orig (given in the certificate's input frame) by
/// cert.M and classifies the pole places of the result. Allowed: bad set,
/// P, declared places, ramification points, infinity, and, when
/// allow_input_frame is set, poles and dependence points of the input frame.
EmittedSystem emit_system(const SystemMatrix& A_orig, const TrivializationCertificate& cert,
                          const std::vector<Place>& declared, bool allow_input_frame = true);

}  // namespace apparent_loci
