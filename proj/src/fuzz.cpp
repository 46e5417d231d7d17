#include "apparent_loci/fuzz.hpp"

#include "apparent_loci/gauge.hpp"
#include "apparent_loci/generator.hpp"

#include <iomanip>
#include <sstream>

namespace apparent_loci {

FuzzConfig fuzz_config_from_json(const Json& j) {
    FuzzConfig cfg;
    if (!j.is_object()) throw ParseError("fuzz config must be an object");
    for (const auto& c : j.at("curves")) cfg.curves.push_back(curve_from_json(c));
    for (const auto& p : j.at("p")) {
        long v = p.get<long>();
        if (v < 1) throw ParseError("p must be positive");
        cfg.p.push_back(static_cast<std::size_t>(v));
    }
    long n = j.at("instances").get<long>();
    if (n < 0) throw ParseError("instances must be nonnegative");
    cfg.instances = static_cast<std::size_t>(n);
    cfg.seed = j.value("seed", std::uint64_t{0});
    return cfg;
}

std::string to_string(FuzzStatus s) {
    switch (s) {
        case FuzzStatus::Ok: return "ok";
        case FuzzStatus::VerificationFailed: return "verification_failed";
        case FuzzStatus::NotContained: return "not_contained";
        case FuzzStatus::IrrationalLocus: return "irrational_locus";
        case FuzzStatus::SingularFrame: return "singular_frame";
        case FuzzStatus::Error: return "error";
    }
    return "error";
}

FuzzOutcome run_fuzz_instance(const CurvePtr& curve, std::size_t p, std::uint64_t seed, std::size_t index,
                              bool keep_certificate) {
    FuzzOutcome out;
    out.g = curve->genus();
    out.p = p;
    out.index = index;
    out.curve = curve->to_string();
    out.bound = bad_point_bound(static_cast<long>(p), out.g);
    std::mt19937_64 rng(instance_seed(seed, static_cast<std::uint64_t>(out.g), p, index));
    try {
        Frame F = generate_frame(curve, p, rng);
        std::vector<Place> declared;
        SystemMatrix A_std = generate_system(curve, p, rng, declared);
        auto cert = trivialize(F, Place::infinity());
        out.count = cert.count;
        auto rep = verify_certificate(cert, F);
        if (!rep.passed()) {
            out.status = FuzzStatus::VerificationFailed;
            out.message = rep.to_string();
        } else {
            SystemMatrix A_orig = gauge_transform(A_std, F);
            auto em = emit_system(A_orig, cert, declared, false);
            if (!em.contained) {
                out.status = FuzzStatus::NotContained;
                for (const auto& s : em.singular)
                    if (s.kind == SingularKind::Unexpected) out.message += "unexpected pole at " + s.place.to_string() + "\n";
            }
        }
        if (keep_certificate) out.certificate = std::move(cert);
    } catch (const IrrationalLocus& e) {
        out.status = FuzzStatus::IrrationalLocus;
        out.message = e.what();
    } catch (const SingularFrame& e) {
        out.status = FuzzStatus::SingularFrame;
        out.message = e.what();
    } catch (const std::exception& e) {
        out.status = FuzzStatus::Error;
        out.message = e.what();
    }
    return out;
}

FuzzSummary run_fuzz(const FuzzConfig& cfg) {
    FuzzSummary s;
    s.seed = cfg.seed;
    for (const auto& c : cfg.curves)
        for (std::size_t p : cfg.p) {
            FuzzRow row{c->to_string(), c->genus(), p, cfg.instances, 0, bad_point_bound(static_cast<long>(p), c->genus()), 0};
            for (std::size_t i = 0; i < cfg.instances; ++i) {
                FuzzOutcome o = run_fuzz_instance(c, p, cfg.seed, i);
                row.max_count = std::max(row.max_count, o.count);
                if (o.status != FuzzStatus::Ok) {
                    ++row.failures;
                    s.failures.push_back(std::move(o));
                }
            }
            s.rows.push_back(row);
        }
    return s;
}

std::string FuzzSummary::to_text() const {
    std::ostringstream os;
    os << "seed " << seed << "\n";
    os << std::left << std::setw(24) << "curve" << std::setw(4) << "g" << std::setw(4) << "p" << std::setw(11)
       << "instances" << std::setw(11) << "max_count" << std::setw(7) << "bound" << "failures\n";
    for (const auto& r : rows)
        os << std::left << std::setw(24) << r.curve << std::setw(4) << r.g << std::setw(4) << r.p << std::setw(11)
           << r.instances << std::setw(11) << r.max_count << std::setw(7) << r.bound << r.failures
           << (r.max_count > r.bound ? "  BOUND EXCEEDED" : "") << "\n";
    for (const auto& f : failures)
        os << "FAIL " << f.curve << " p=" << f.p << " instance=" << f.index << " " << to_string(f.status) << ": "
           << f.message << "\n";
    return os.str();
}

Json FuzzSummary::to_json() const {
    Json j;
    j["seed"] = seed;
    Json rs = Json::array();
    for (const auto& r : rows)
        rs.push_back(Json{{"curve", r.curve},
                          {"g", r.g},
                          {"p", r.p},
                          {"instances", r.instances},
                          {"max_count", r.max_count},
                          {"bound", r.bound},
                          {"failures", r.failures}});
    j["rows"] = rs;
    Json fs = Json::array();
    for (const auto& f : failures)
        fs.push_back(Json{{"curve", f.curve},
                          {"p", f.p},
                          {"instance", f.index},
                          {"status", to_string(f.status)},
                          {"message", f.message}});
    j["failures"] = fs;
    j["passed"] = passed();
    return j;
}

}  // namespace apparent_loci
