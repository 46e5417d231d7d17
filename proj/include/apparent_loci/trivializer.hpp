#pragma once

#include "apparent_loci/matrix.hpp"
#include "apparent_loci/place.hpp"
#include "apparent_loci/valuation.hpp"

#include <string>
#include <utility>
#include <vector>

namespace apparent_loci {

/// p x p matrix whose columns are the trivializing sections.
using Frame = FuncMatrix;

enum class BadKind { PoleOfSection, DependencePoint };

struct BadPoint {
    Place place;
    BadKind kind = BadKind::DependencePoint;
    bool exceptional = false;  // exempted from jet matching at some step
    int d = 0;                 // ord of det at the place (dependence points)

    friend bool operator==(const BadPoint& a, const BadPoint& b) {
        return a.place == b.place && a.kind == b.kind && a.exceptional == b.exceptional && a.d == b.d;
    }
};

/// One induction step, adding column k (1-based) to the normalized head.
/// Counts are geometric points (places weighted by degree).
struct StepLog {
    int k = 0;
    long N = 0;            // dependence count of the first k columns
    long exceptional = 0;  // points exempted by the vanishing function
    long q_prime = 0;      // keys where h misses the exact pole order
    long q_dblprime = 0;   // deg of the extra zeros of h
    std::vector<std::pair<Place, int>> new_points;  // (z_i, d_i) handled with local data
    std::vector<Place> carried;                     // coincidences with earlier bad points

    friend bool operator==(const StepLog& a, const StepLog& b) {
        return a.k == b.k && a.N == b.N && a.exceptional == b.exceptional && a.q_prime == b.q_prime &&
               a.q_dblprime == b.q_dblprime && a.new_points == b.new_points && a.carried == b.carried;
    }
};

struct TrivializationCertificate {
    Frame input_frame;
    Frame output_frame;
    FuncMatrix M;  // output_frame = input_frame * M
    Place P;
    std::vector<BadPoint> bad_set;
    std::vector<StepLog> log;
    long bound = 0;  // 2pg - g + 1
    long count = 0;  // geometric points in places(bad_set) + P
    std::string selection;

    friend bool operator==(const TrivializationCertificate& a, const TrivializationCertificate& b);
};

/// Selection convention recorded in every certificate.
std::string selection_convention();

long bad_point_bound(long p, long g);

struct DependenceLocus {
    Divisor poles;                                   // sup of the pole divisors of the entries
    std::vector<std::pair<Place, int>> dep_points;   // zeros of det where all entries are finite
};

/// Throws SingularFrame if det F = 0.
DependenceLocus dependence_locus(const Frame& F);

/// Common zero divisor of the maximal minors of a p x k matrix, away from
/// P; its support is where the columns become dependent.
Divisor rank_drop_divisor(const FuncMatrix& F, const Place& P);

struct MovedPoles {
    Frame frame;
    std::vector<FuncElem> scalings;  // column i was multiplied by scalings[i]
    std::vector<Divisor> zeros;      // common zeros of the new column i off P
};

/// Multiplies each column by a twisting section (prop2_section) of its column divisor
/// (minimum of the entry divisors, away from P) so the result has poles at
/// P only and each column has at most g common zeros off P.
MovedPoles move_poles(const Frame& F, const Place& P);

struct LocalData {
    int d = 0;
    std::size_t row = 0;                  // v = e_row
    std::vector<std::vector<Rational>> alphas;  // k jets of order d
};

/// Local expansion psi_next = sum alpha_j head_j + alpha_{k+1} e_row at z,
/// with alphas known to order d = min ord_z of the (k+1)-minors.
/// Throws DomainError if head is dependent at z or psi_next is not.
LocalData local_data(const FuncMatrix& head, const std::vector<FuncElem>& psi_next, const Place& z);

struct LocalSite {
    Place z;
    int d = 0;
    std::vector<std::vector<Rational>> alphas;
};

struct GlobalAlphas {
    std::vector<FuncElem> alphatilde;
    std::vector<Place> exceptional;
};

/// alphatilde_j with poles only at P agreeing with alpha_j to order d_i + 1
/// at every unexceptional site.
GlobalAlphas global_alphas(const CurvePtr& curve, const std::vector<LocalSite>& sites, std::size_t k,
                           const Place& P);

struct InductionStep {
    std::vector<FuncElem> psi;         // new normalized column
    std::vector<FuncElem> alphatilde;  // subtracted coefficients
    FuncElem h;                        // final multiplier
    std::vector<Place> exceptional;
    StepLog log;
};

/// Adds psi_next (poles only at P) to the normalized head. head_bad is the
/// dependence support of head; new dependence points must be rational
/// unramified affine places (IrrationalLocus otherwise).
InductionStep induction_step(const FuncMatrix& head, const std::vector<Place>& head_bad,
                             const std::vector<FuncElem>& psi_next, const Place& P);

/// Full pipeline. Throws SingularFrame, IrrationalLocus, DomainError.
TrivializationCertificate trivialize(const Frame& F, const Place& P);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    std::vector<CheckResult> checks;
    bool passed() const;
    std::string to_string() const;
};

VerificationReport verify_certificate(const TrivializationCertificate& cert, const Frame& original);

}  // namespace apparent_loci
