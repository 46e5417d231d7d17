#include "apparent_loci/fuzz.hpp"
#include "apparent_loci/gauge.hpp"
#include "apparent_loci/io.hpp"
#include "apparent_loci/riemann_roch.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

using namespace apparent_loci;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kIrrational = 3, kSingular = 4, kVerification = 5 };

void write_json(const std::string& path, const Json& j) {
    if (!path.empty()) write_file(path, j.dump(2) + "\n");
}

void print_matrix(std::ostream& os, const FuncMatrix& m, const std::string& name) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            os << name << "[" << i + 1 << "," << j + 1 << "] = " << m(i, j).to_string() << "\n";
}

int cmd_rr(const std::string& file, const std::string& json_out) {
    std::string text = read_file(file);
    RRQuery q = load_document(text, rr_query_from_json);
    auto basis = rr_basis(q.curve, q.divisor);
    std::cout << "curve " << q.curve->to_string() << "\n";
    std::cout << "divisor " << q.divisor.to_string() << " (degree " << q.divisor.degree() << ")\n";
    std::cout << "dimension " << basis.size() << "\n";
    Json jb = Json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::cout << "basis[" << i + 1 << "] = " << basis[i].to_string() << "\n";
        jb.push_back(func_to_json(basis[i]));
    }
    write_json(json_out, Json{{"curve", curve_to_json(*q.curve)},
                              {"divisor", q.divisor.to_string()},
                              {"dimension", basis.size()},
                              {"basis", jb}});
    return kOk;
}

int cmd_trivialize(const std::string& file, const std::string& cert_out) {
    std::string text = read_file(file);
    Instance inst = load_document(text, instance_from_json);
    auto cert = trivialize(inst.frame, inst.P);
    auto rep = verify_certificate(cert, inst.frame);
    std::cout << "curve " << inst.curve->to_string() << " (g=" << inst.curve->genus() << ")\n";
    std::cout << "p " << inst.frame.rows() << "\n";
    std::cout << "basepoint " << inst.P.to_string() << "\n";
    for (const auto& b : cert.bad_set)
        std::cout << "bad " << b.place.to_string() << " "
                  << (b.kind == BadKind::PoleOfSection ? "pole" : "dependence d=" + std::to_string(b.d))
                  << (b.exceptional ? " exceptional" : "") << "\n";
    for (const auto& s : cert.log)
        std::cout << "step k=" << s.k << " N=" << s.N << " exceptional=" << s.exceptional << " q'=" << s.q_prime
                  << " q''=" << s.q_dblprime << "\n";
    std::cout << "count " << cert.count << " bound " << cert.bound << "\n";
    print_matrix(std::cout, cert.M, "M");
    std::cout << rep.to_string();
    Json j = certificate_to_json(cert);
    Json checks = Json::array();
    for (const auto& c : rep.checks) checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["verification"] = Json{{"passed", rep.passed()}, {"checks", checks}};
    write_json(cert_out, j);
    return rep.passed() ? kOk : kVerification;
}

int cmd_gauge(const std::string& system_file, const std::string& cert_file, const std::string& json_out,
              bool strict) {
    std::string stext = read_file(system_file);
    std::string ctext = read_file(cert_file);
    SystemInput sys = load_document(stext, system_from_json);
    auto cert = load_document(ctext, certificate_from_json);
    if (!(*sys.curve == *cert.M.curve())) throw ParseError("system and certificate are on different curves");
    if (sys.A.rows() != cert.M.rows()) throw ParseError("system size does not match the certificate");
    auto rep = verify_certificate(cert, cert.input_frame);
    if (!rep.passed()) {
        std::cout << rep.to_string();
        return kVerification;
    }
    auto em = emit_system(sys.A, cert, sys.declared, !strict);
    print_matrix(std::cout, em.A, "A");
    Json sing = Json::array();
    for (const auto& s : em.singular) {
        std::cout << "singular " << s.place.to_string() << " " << to_string(s.kind) << "\n";
        sing.push_back(Json{{"place", place_to_json(s.place)}, {"kind", to_string(s.kind)}});
    }
    std::cout << "contained " << (em.contained ? "yes" : "no") << "\n";
    write_json(json_out, Json{{"curve", curve_to_json(*sys.curve)},
                              {"system", matrix_to_json(em.A)},
                              {"singular", sing},
                              {"contained", em.contained}});
    return em.contained ? kOk : kVerification;
}

int cmd_fuzz(const std::string& file, const std::string& json_out) {
    std::string text = read_file(file);
    FuzzConfig cfg = load_document(text, fuzz_config_from_json);
    if (const char* env = std::getenv("APPARENT_LOCI_SEED")) {
        try {
            cfg.seed = std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("APPARENT_LOCI_SEED is not an unsigned integer: ") + env);
        }
    }
    FuzzSummary s = run_fuzz(cfg);
    std::cout << s.to_text();
    write_json(json_out, s.to_json());
    return s.passed() ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trivialize frames of vector bundles on hyperelliptic curves with few apparent singularities"};
    app.require_subcommand(1);
    std::string file, cert_out, json_out, system_file, cert_file;
    bool strict = false;

    auto* rr = app.add_subcommand("rr", "Riemann-Roch basis of L(D)");
    rr->add_option("file", file, "JSON with curve and divisor")->required();
    rr->add_option("--json", json_out, "write a JSON report");

    auto* tr = app.add_subcommand("trivialize", "Trivialize a frame and print the certificate summary");
    tr->add_option("file", file, "JSON instance with curve, frame and basepoint")->required();
    tr->add_option("-o,--output", cert_out, "write the certificate JSON");

    auto* ga = app.add_subcommand("gauge", "Transform a system by a certificate and classify its poles");
    ga->add_option("system", system_file, "JSON with curve, system and declared places")->required();
    ga->add_option("certificate", cert_file, "certificate JSON")->required();
    ga->add_option("--json", json_out, "write the emitted system JSON");
    ga->add_flag("--strict", strict, "do not allow poles at the input frame's bad points");

    auto* fz = app.add_subcommand("fuzz", "Run the seeded property fuzzer");
    fz->add_option("config", file, "JSON fuzz config")->required();
    fz->add_option("--json", json_out, "write the summary JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kOk : kParse;
    }

    try {
        if (*rr) return cmd_rr(file, json_out);
        if (*tr) return cmd_trivialize(file, cert_out);
        if (*ga) return cmd_gauge(system_file, cert_file, json_out, strict);
        if (*fz) return cmd_fuzz(file, json_out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const IrrationalLocus& e) {
        std::cerr << "irrational locus: " << e.what() << "\n";
        return kIrrational;
    } catch (const SingularFrame& e) {
        std::cerr << "singular frame: " << e.what() << "\n";
        return kSingular;
    } catch (const DomainError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
