#pragma once

#include "apparent_loci/io.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace apparent_loci {

struct FuzzConfig {
    std::vector<CurvePtr> curves;
    std::vector<std::size_t> p;
    std::size_t instances = 0;
    std::uint64_t seed = 0;
};

/// {"curves": [{"f": [...]}, ...], "p": [...], "instances": n, "seed": s}
FuzzConfig fuzz_config_from_json(const Json& j);

enum class FuzzStatus { Ok, VerificationFailed, NotContained, IrrationalLocus, SingularFrame, Error };
std::string to_string(FuzzStatus s);

struct FuzzOutcome {
    int g = 0;
    std::size_t p = 0;
    std::size_t index = 0;
    std::string curve;
    FuzzStatus status = FuzzStatus::Ok;
    long count = 0;
    long bound = 0;
    std::string message;
    std::optional<TrivializationCertificate> certificate;
};

/// One instance: generate, trivialize, verify, then transport a random
/// system with declared poles into the input frame and check that the
/// emitted system has poles only at allowed places.
FuzzOutcome run_fuzz_instance(const CurvePtr& curve, std::size_t p, std::uint64_t seed, std::size_t index,
                              bool keep_certificate = false);

struct FuzzRow {
    std::string curve;
    int g = 0;
    std::size_t p = 0;
    std::size_t instances = 0;
    long max_count = 0;
    long bound = 0;
    std::size_t failures = 0;
};

struct FuzzSummary {
    std::uint64_t seed = 0;
    std::vector<FuzzRow> rows;
    std::vector<FuzzOutcome> failures;

    bool passed() const { return failures.empty(); }
    std::string to_text() const;
    Json to_json() const;
};

FuzzSummary run_fuzz(const FuzzConfig& cfg);

}  // namespace apparent_loci
