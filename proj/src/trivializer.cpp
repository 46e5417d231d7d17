#include "apparent_loci/trivializer.hpp"

#include "apparent_loci/errors.hpp"
#include "apparent_loci/riemann_roch.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <sstream>

namespace apparent_loci {

bool operator==(const TrivializationCertificate& a, const TrivializationCertificate& b) {
    return a.input_frame == b.input_frame && a.output_frame == b.output_frame && a.M == b.M && a.P == b.P &&
           a.bad_set == b.bad_set && a.log == b.log && a.bound == b.bound && a.count == b.count &&
           a.selection == b.selection;
}

std::string selection_convention() {
    return "integer combinations of the canonical Riemann-Roch basis with coefficients in {1,-1,2,-2}, "
           "ordered by support size, then support, then coefficients; first best of at most " +
           std::to_string(kSelectionCap);
}

long bad_point_bound(long p, long g) { return 2 * p * g - g + 1; }

namespace {

std::optional<Divisor> common_divisor(const std::vector<FuncElem>& fs) {
    std::optional<Divisor> acc;
    for (const auto& f : fs) {
        if (f.is_zero()) continue;
        Divisor d = divisor_of(f);
        acc = acc ? inf(*acc, d) : d;
    }
    return acc;
}

std::vector<Place> places_of(const Divisor& D) {
    std::vector<Place> out;
    for (const auto& [p, k] : D.terms())
        if (k != 0) out.push_back(p);
    return out;
}

bool contains(const std::vector<Place>& v, const Place& p) { return std::find(v.begin(), v.end(), p) != v.end(); }

FuncMatrix append_column(const FuncMatrix& head, const std::vector<FuncElem>& col) {
    FuncMatrix m(head.curve(), head.rows(), head.cols() + 1);
    for (std::size_t i = 0; i < head.rows(); ++i) {
        for (std::size_t j = 0; j < head.cols(); ++j) m(i, j) = head(i, j);
        m(i, head.cols()) = col[i];
    }
    return m;
}

int ord_or_inf(const FuncElem& u, const Place& z) { return u.is_zero() ? INT_MAX : ord(u, z); }

// Solves A x = b over power series truncated at a common precision; A must
// have a unit determinant.
std::vector<Series> solve_series(std::vector<std::vector<Series>> A, std::vector<Series> b) {
    std::size_t n = A.size();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && !A[piv][c].is_unit()) ++piv;
        if (piv == n) throw DomainError("local system is not invertible at the point");
        std::swap(A[piv], A[c]);
        std::swap(b[piv], b[c]);
        Series inv = A[c][c].inverse();
        for (std::size_t j = c; j < n; ++j) A[c][j] = A[c][j] * inv;
        b[c] = b[c] * inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c) continue;
            Series s = A[i][c];
            if (s.order() == s.precision()) continue;
            for (std::size_t j = c; j < n; ++j) A[i][j] -= s * A[c][j];
            b[i] -= s * b[c];
        }
    }
    return b;
}

}  // namespace

DependenceLocus dependence_locus(const Frame& F) {
    FuncElem det = F.det();
    if (det.is_zero()) throw SingularFrame("frame determinant vanishes identically");
    DependenceLocus out;
    for (const auto& e : F.entries())
        if (!e.is_zero()) out.poles = sup(out.poles, pole_divisor(e));
    Divisor ddet = divisor_of(det);
    for (const auto& [p, k] : ddet.terms())
        if (k > 0 && out.poles[p] == 0) out.dep_points.emplace_back(p, static_cast<int>(k));
    return out;
}

Divisor rank_drop_divisor(const FuncMatrix& F, const Place& P) {
    auto common = common_divisor(F.maximal_minors());
    if (!common) throw SingularFrame("columns are linearly dependent over the function field");
    return common->without(P).positive_part();
}

MovedPoles move_poles(const Frame& F, const Place& P) {
    MovedPoles out{F, {}, {}};
    const CurvePtr& curve = F.curve();
    for (std::size_t j = 0; j < F.cols(); ++j) {
        auto col = F.column(j);
        auto delta = common_divisor(col);
        if (!delta) throw SingularFrame("column " + std::to_string(j + 1) + " is zero");
        auto sec = prop2_section(curve, delta->without(P), P);
        for (auto& e : col) e = sec.h * e;
        out.frame.set_column(j, col);
        out.scalings.push_back(sec.h);
        out.zeros.push_back(sec.zeros_off_P);
    }
    return out;
}

LocalData local_data(const FuncMatrix& head, const std::vector<FuncElem>& psi_next, const Place& z) {
    if (!z.is_jet_site()) throw DomainError("local data needs a rational unramified affine place");
    std::size_t p = head.rows(), k = head.cols();
    FuncMatrix full = append_column(head, psi_next);
    for (const auto& e : full.entries())
        if (!e.is_zero() && ord(e, z) < 0) throw DomainError("a section has a pole at " + z.to_string());

    auto head_minor_unit = [&](const std::vector<std::size_t>& R) {
        std::vector<std::size_t> cols(k);
        for (std::size_t j = 0; j < k; ++j) cols[j] = j;
        return ord_or_inf(head.submatrix(R, cols).det(), z) == 0;
    };
    bool head_ok = false;
    for (const auto& R : subsets(p, k))
        if (head_minor_unit(R)) {
            head_ok = true;
            break;
        }
    if (!head_ok) throw DomainError("head frame is dependent at " + z.to_string());

    std::vector<std::size_t> all(k + 1);
    for (std::size_t j = 0; j <= k; ++j) all[j] = j;
    auto minor_ord = [&](const std::vector<std::size_t>& S) { return ord_or_inf(full.submatrix(S, all).det(), z); };
    int d = INT_MAX;
    for (const auto& S : subsets(p, k + 1)) d = std::min(d, minor_ord(S));
    if (d == 0) throw DomainError("sections are independent at " + z.to_string());
    if (d == INT_MAX) throw SingularFrame("columns are linearly dependent over the function field");

    std::optional<std::size_t> row;
    std::vector<std::size_t> S;
    for (std::size_t r = 0; r < p && !row; ++r) {
        for (const auto& R : subsets(p, k)) {
            if (std::find(R.begin(), R.end(), r) != R.end()) continue;
            if (!head_minor_unit(R)) continue;
            std::vector<std::size_t> cand = R;
            cand.push_back(r);
            std::sort(cand.begin(), cand.end());
            if (minor_ord(cand) != d) continue;
            row = r;
            S = cand;
            break;
        }
    }
    if (!row) throw DomainError("no local frame completion at " + z.to_string());

    std::size_t n = k + 1;
    std::vector<std::vector<Series>> A(n, std::vector<Series>(n, Series(d + 1)));
    std::vector<Series> b(n, Series(d + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) A[i][j] = local_series(head(S[i], j), z, d);
        A[i][k] = Series::constant(d + 1, S[i] == *row ? 1 : 0);
        b[i] = local_series(psi_next[S[i]], z, d);
    }
    auto x = solve_series(std::move(A), std::move(b));
    LocalData out;
    out.d = d;
    out.row = *row;
    for (std::size_t j = 0; j < k; ++j) out.alphas.push_back(x[j].coeffs());
    return out;
}

GlobalAlphas global_alphas(const CurvePtr& curve, const std::vector<LocalSite>& sites, std::size_t k,
                           const Place& P) {
    GlobalAlphas out;
    out.alphatilde.assign(k, FuncElem(curve));
    if (sites.empty()) return out;
    std::vector<Place> points;
    for (const auto& s : sites) points.push_back(s.z);
    auto vf = vanishing_function(curve, points, P);
    out.exceptional = vf.exceptional;

    std::vector<const LocalSite*> unexc;
    for (const auto& s : sites)
        if (!contains(vf.exceptional, s.z)) unexc.push_back(&s);
    if (unexc.empty()) return out;
    int level = 0;
    std::vector<Place> upoints;
    for (const auto* s : unexc) {
        level = std::max(level, s->d + 1);
        upoints.push_back(s->z);
    }

    for (std::size_t i = 0; i < unexc.size(); ++i) {
        const LocalSite& site = *unexc[i];
        bool all_zero = true;
        for (const auto& a : site.alphas)
            for (const auto& c : a)
                if (sgn(c) != 0) all_zero = false;
        if (all_zero) continue;
        FuncElem g = selector_function(curve, upoints, i, P, level);
        FuncElem s = vf.f * g;
        int n = site.d;
        Series G = local_series(g, site.z, n);
        Series H = local_series(s, site.z, n);
        std::vector<Series> GH{G};
        for (int r = 1; r <= n; ++r) GH.push_back(GH.back() * H);
        std::vector<FuncElem> spow{FuncElem::constant(curve, 1)};
        for (int r = 1; r <= n; ++r) spow.push_back(spow.back() * s);
        for (std::size_t j = 0; j < k; ++j) {
            std::vector<Rational> c(static_cast<std::size_t>(n) + 1);
            for (int r = 0; r <= n; ++r) {
                Rational acc = site.alphas[j][static_cast<std::size_t>(r)];
                for (int t = 0; t < r; ++t) acc -= c[static_cast<std::size_t>(t)] * GH[static_cast<std::size_t>(t)][r];
                c[static_cast<std::size_t>(r)] = acc / GH[static_cast<std::size_t>(r)][r];
            }
            FuncElem Q(curve);
            for (int r = 0; r <= n; ++r)
                if (sgn(c[static_cast<std::size_t>(r)]) != 0) Q += c[static_cast<std::size_t>(r)] * spow[static_cast<std::size_t>(r)];
            if (!Q.is_zero()) out.alphatilde[j] += g * Q;
        }
    }
    return out;
}

InductionStep induction_step(const FuncMatrix& head, const std::vector<Place>& head_bad,
                             const std::vector<FuncElem>& psi_next, const Place& P) {
    const CurvePtr& curve = head.curve();
    std::size_t k = head.cols();
    FuncMatrix full = append_column(head, psi_next);
    Divisor rd = rank_drop_divisor(full, P);

    InductionStep out;
    out.log.k = static_cast<int>(k + 1);
    std::vector<LocalSite> sites;
    for (const auto& z : places_of(rd)) {
        if (contains(head_bad, z)) {
            out.log.carried.push_back(z);
            continue;
        }
        if (z.is_closed()) throw IrrationalLocus(z.to_string(), "is not a rational place");
        if (z.is_ramified()) throw IrrationalLocus(z.to_string(), "is a ramification point");
        if (z.is_infinity()) throw IrrationalLocus(z.to_string(), "is the point at infinity");
        LocalData ld = local_data(head, psi_next, z);
        sites.push_back(LocalSite{z, ld.d, ld.alphas});
        out.log.new_points.emplace_back(z, ld.d);
    }

    GlobalAlphas ga = global_alphas(curve, sites, k, P);
    out.alphatilde = ga.alphatilde;
    out.exceptional = ga.exceptional;
    out.log.exceptional = geometric_count(ga.exceptional);

    std::vector<FuncElem> psi1 = psi_next;
    for (std::size_t j = 0; j < k; ++j) {
        if (ga.alphatilde[j].is_zero()) continue;
        for (std::size_t i = 0; i < head.rows(); ++i) psi1[i] -= ga.alphatilde[j] * head(i, j);
    }
    std::map<Place, int> weights;
    for (const auto& s : sites)
        if (!contains(ga.exceptional, s.z)) weights[s.z] = s.d;
    ExactOrderFunction eo = exact_order_function(curve, weights, P);
    out.h = eo.h;
    out.log.q_prime = geometric_count(eo.q_prime);
    out.log.q_dblprime = eo.q_dblprime.degree();
    out.psi = psi1;
    for (auto& e : out.psi) e = eo.h * e;
    return out;
}

TrivializationCertificate trivialize(const Frame& F, const Place& P) {
    if (P.is_closed()) throw DomainError("basepoint must be a rational place, got " + P.to_string());
    if (F.rows() != F.cols() || F.rows() == 0) throw DomainError("frame must be a nonempty square matrix");
    if (F.det().is_zero()) throw SingularFrame("frame determinant vanishes identically");
    const CurvePtr& curve = F.curve();
    std::size_t p = F.rows();
    long g = curve->genus();

    MovedPoles mp = move_poles(F, P);
    FuncMatrix M = FuncMatrix::diagonal(curve, mp.scalings);
    FuncMatrix head = mp.frame.leading_columns(1);
    std::vector<Place> head_bad = places_of(mp.zeros[0]);

    TrivializationCertificate cert;
    cert.input_frame = F;
    cert.P = P;
    cert.selection = selection_convention();
    StepLog first;
    first.k = 1;
    first.N = geometric_count(head_bad);
    cert.log.push_back(first);
    std::set<Place> exceptional;

    for (std::size_t k = 1; k < p; ++k) {
        InductionStep st = induction_step(head, head_bad, mp.frame.column(k), P);
        std::vector<FuncElem> mcol(p, FuncElem(curve));
        mcol[k] = mp.scalings[k];
        for (std::size_t j = 0; j < k; ++j) {
            if (st.alphatilde[j].is_zero()) continue;
            for (std::size_t i = 0; i < p; ++i) mcol[i] -= st.alphatilde[j] * M(i, j);
        }
        for (auto& e : mcol) e = st.h * e;
        M.set_column(k, mcol);
        head = append_column(head, st.psi);
        head_bad = places_of(rank_drop_divisor(head, P));
        st.log.N = geometric_count(head_bad);
        cert.log.push_back(st.log);
        exceptional.insert(st.exceptional.begin(), st.exceptional.end());
    }
    cert.output_frame = head;
    cert.M = M;

    DependenceLocus loc = dependence_locus(head);
    for (const auto& [z, d] : loc.dep_points)
        cert.bad_set.push_back(BadPoint{z, BadKind::DependencePoint, exceptional.count(z) > 0, d});
    for (const auto& z : places_of(loc.poles)) cert.bad_set.push_back(BadPoint{z, BadKind::PoleOfSection, false, 0});
    std::set<Place> counted{P};
    for (const auto& b : cert.bad_set) counted.insert(b.place);
    cert.count = geometric_count(std::vector<Place>(counted.begin(), counted.end()));
    cert.bound = bad_point_bound(static_cast<long>(p), g);
    return cert;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerificationReport::to_string() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.passed ? "ok   " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << ": " << c.detail;
        os << "\n";
    }
    return os.str();
}

VerificationReport verify_certificate(const TrivializationCertificate& cert, const Frame& original) {
    VerificationReport rep;
    auto add = [&](std::string name, bool ok, std::string detail = "") {
        rep.checks.push_back(CheckResult{std::move(name), ok, std::move(detail)});
    };
    const Frame& out = cert.output_frame;
    std::size_t p = original.rows();
    bool shapes = out.rows() == p && out.cols() == p && cert.M.rows() == p && cert.M.cols() == p &&
                  same_curve(original.curve(), out.curve()) && same_curve(original.curve(), cert.M.curve());
    add("shapes", shapes);
    if (!shapes) return rep;
    add("input frame recorded", cert.input_frame == original);
    add("span: input * M = output", original * cert.M == out);
    FuncElem detM = cert.M.det();
    add("det M nonzero", !detM.is_zero());
    FuncElem detO = out.det();
    add("det output nonzero", !detO.is_zero());
    if (detO.is_zero()) return rep;

    std::set<Place> pole_places;
    for (const auto& e : out.entries())
        if (!e.is_zero()) {
            Divisor de = pole_divisor(e);
            for (const auto& [pl, k] : de.terms()) pole_places.insert(pl);
        }
    bool confined = std::all_of(pole_places.begin(), pole_places.end(), [&](const Place& q) { return q == cert.P; });
    add("poles only at P", confined);

    std::set<Place> claimed_poles, claimed_dep;
    for (const auto& b : cert.bad_set) (b.kind == BadKind::PoleOfSection ? claimed_poles : claimed_dep).insert(b.place);
    add("pole entries match", claimed_poles == pole_places);

    DependenceLocus loc = dependence_locus(out);
    std::set<Place> actual_dep;
    for (const auto& [z, d] : loc.dep_points) actual_dep.insert(z);
    std::string missing;
    for (const auto& z : actual_dep)
        if (!claimed_dep.count(z)) missing += " " + z.to_string();
    for (const auto& z : claimed_dep)
        if (!actual_dep.count(z)) missing += " extra " + z.to_string();
    add("dependence locus matches", claimed_dep == actual_dep, missing);

    long g = original.curve()->genus();
    long bound = bad_point_bound(static_cast<long>(p), g);
    std::set<Place> counted{cert.P};
    counted.insert(pole_places.begin(), pole_places.end());
    counted.insert(actual_dep.begin(), actual_dep.end());
    long count = geometric_count(std::vector<Place>(counted.begin(), counted.end()));
    add("bound recorded", cert.bound == bound, std::to_string(cert.bound));
    add("count recorded", cert.count == count, std::to_string(cert.count) + " vs " + std::to_string(count));
    add("count within bound", count <= bound, std::to_string(count) + " <= " + std::to_string(bound));

    bool audit = !cert.log.empty() && cert.log.size() == p && cert.log[0].N <= g;
    std::string why;
    for (std::size_t i = 1; audit && i < cert.log.size(); ++i) {
        const StepLog& s = cert.log[i];
        long prev = cert.log[i - 1].N;
        if (s.N > prev + g + s.q_prime + s.q_dblprime) {
            audit = false;
            why = "step " + std::to_string(s.k) + " exceeds N_{k-1} + g + q' + q''";
        } else if (s.q_prime + s.q_dblprime > g) {
            audit = false;
            why = "step " + std::to_string(s.k) + " has q' + q'' > g";
        } else if (s.exceptional > g) {
            audit = false;
            why = "step " + std::to_string(s.k) + " has more than g exceptional points";
        }
    }
    if (audit) {
        std::vector<Place> off_P;
        for (const auto& z : actual_dep)
            if (z != cert.P) off_P.push_back(z);
        long dep_count = geometric_count(off_P);
        long last = cert.log.back().N;
        if (last != dep_count) {
            audit = false;
            why = "final N " + std::to_string(last) + " differs from the dependence count " + std::to_string(dep_count);
        }
    }
    add("recurrence audit", audit, why);
    return rep;
}

}  // namespace apparent_loci
