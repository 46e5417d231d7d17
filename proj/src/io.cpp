#include "apparent_loci/io.hpp"

#include "apparent_loci/errors.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace apparent_loci {

namespace {

// Recursive descent over a value type V; `atom` turns x/y into values.
template <class V, class Ops>
class ExprParser {
public:
    ExprParser(std::string_view text, Ops ops) : s_(text), ops_(std::move(ops)) {}

    V parse() {
        V v = expr();
        skip();
        if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ExpressionError(what, std::string(s_), static_cast<int>(pos_) + 1);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    V expr() {
        V v = term();
        while (true) {
            if (eat('+'))
                v = ops_.add(v, term());
            else if (eat('-'))
                v = ops_.sub(v, term());
            else
                return v;
        }
    }
    V term() {
        V v = unary();
        while (true) {
            if (eat('*')) {
                v = ops_.mul(v, unary());
            } else if (eat('/')) {
                std::size_t at = pos_;
                V d = unary();
                if (ops_.is_zero(d)) {
                    pos_ = at;
                    fail("division by zero");
                }
                v = ops_.div(v, d);
            } else {
                return v;
            }
        }
    }
    V unary() {
        if (eat('-')) return ops_.neg(unary());
        if (eat('+')) return unary();
        return power();
    }
    V power() {
        V base = atom();
        if (!eat('^')) return base;
        skip();
        bool neg = eat('-');
        skip();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an integer exponent");
        if (pos_ - start > 4) fail("exponent too large");
        unsigned e = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start))));
        V r = ops_.pow(base, e);
        if (neg) {
            if (ops_.is_zero(r)) fail("zero to a negative power");
            r = ops_.div(ops_.num(Rational(1)), r);
        }
        return r;
    }
    V atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            V v = expr();
            if (!eat(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return ops_.num(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (c == 'x' || c == 'y') {
            ++pos_;
            if (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
                --pos_;
                fail("unknown identifier");
            }
            auto v = ops_.var(c);
            if (!v) {
                fail(std::string("variable ") + c + " is not allowed here");
            }
            return *v;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view s_;
    Ops ops_;
    std::size_t pos_ = 0;
};

struct RatOps {
    RatFunc num(const Rational& q) const { return RatFunc(q); }
    std::optional<RatFunc> var(char c) const {
        if (c == 'x') return RatFunc(Poly::x());
        return std::nullopt;
    }
    RatFunc add(const RatFunc& a, const RatFunc& b) const { return a + b; }
    RatFunc sub(const RatFunc& a, const RatFunc& b) const { return a - b; }
    RatFunc mul(const RatFunc& a, const RatFunc& b) const { return a * b; }
    RatFunc div(const RatFunc& a, const RatFunc& b) const { return a / b; }
    RatFunc neg(const RatFunc& a) const { return -a; }
    bool is_zero(const RatFunc& a) const { return a.is_zero(); }
    RatFunc pow(const RatFunc& a, unsigned e) const { return RatFunc(a.num().pow(e), a.den().pow(e)); }
};

struct FuncOps {
    CurvePtr c;
    FuncElem num(const Rational& q) const { return FuncElem::constant(c, q); }
    std::optional<FuncElem> var(char v) const { return v == 'x' ? FuncElem::x(c) : FuncElem::y(c); }
    FuncElem add(const FuncElem& a, const FuncElem& b) const { return a + b; }
    FuncElem sub(const FuncElem& a, const FuncElem& b) const { return a - b; }
    FuncElem mul(const FuncElem& a, const FuncElem& b) const { return a * b; }
    FuncElem div(const FuncElem& a, const FuncElem& b) const { return a / b; }
    FuncElem neg(const FuncElem& a) const { return -a; }
    bool is_zero(const FuncElem& a) const { return a.is_zero(); }
    FuncElem pow(const FuncElem& a, unsigned e) const { return a.pow(e); }
};

std::string trim(std::string_view s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::pair<int, int> line_col(const std::string& text, std::size_t offset) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(Integer(j.dump()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected a rational number (integer or \"num/den\" string), got " + j.dump());
}

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ParseError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

}  // namespace

FuncElem parse_func(const CurvePtr& curve, std::string_view text) {
    return ExprParser<FuncElem, FuncOps>(text, FuncOps{curve}).parse();
}

RatFunc parse_ratfunc(std::string_view text) { return ExprParser<RatFunc, RatOps>(text, RatOps{}).parse(); }

Poly parse_poly(std::string_view text) {
    RatFunc r = parse_ratfunc(text);
    if (!r.is_polynomial()) throw ExpressionError("expected a polynomial", std::string(text), 1);
    return r.num() * (1 / r.den().lead());
}

Place parse_place(const Curve& curve, std::string_view raw) {
    std::string t = trim(raw);
    if (t == "inf" || t == "infinity") return Place::infinity();
    if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
        std::string body = t.substr(1, t.size() - 2);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw ExpressionError("expected (x0,y0)", t, 1);
        Rational x0, y0;
        try {
            x0 = parse_rational(trim(body.substr(0, comma)));
            y0 = parse_rational(trim(body.substr(comma + 1)));
        } catch (const ParseError& e) {
            throw ExpressionError(e.what(), t, 2);
        }
        try {
            return Place::affine(curve, x0, y0);
        } catch (const DomainError& e) {
            throw ExpressionError(e.what(), t, 1);
        }
    }
    const std::string head = "closed[";
    if (t.rfind(head, 0) == 0 && t.back() == ']') {
        std::string body = t.substr(head.size(), t.size() - head.size() - 1);
        auto semi = body.find(';');
        std::string mtext = semi == std::string::npos ? body : body.substr(0, semi);
        std::optional<Poly> branch;
        Poly m;
        try {
            m = parse_poly(mtext);
            if (semi != std::string::npos) {
                std::string rest = trim(body.substr(semi + 1));
                if (rest.rfind("y", 0) != 0 || rest.find('=') == std::string::npos)
                    throw ExpressionError("expected y=r(x)", t, static_cast<int>(head.size() + semi + 2));
                branch = parse_poly(rest.substr(rest.find('=') + 1));
            }
        } catch (const ExpressionError& e) {
            throw ExpressionError(e.message(), t, static_cast<int>(head.size()) + 1);
        }
        try {
            return Place::closed(curve, m, branch);
        } catch (const DomainError& e) {
            throw ExpressionError(e.what(), t, 1);
        }
    }
    throw ExpressionError("expected a place: (x0,y0), inf or closed[...]", t, 1);
}

Divisor parse_divisor(const Curve& curve, std::string_view text) {
    std::string s(text);
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    auto fail = [&](const std::string& what) -> void { throw ExpressionError(what, s, static_cast<int>(i) + 1); };
    skip();
    if (trim(s) == "0") return Divisor();
    Divisor D;
    bool first = true;
    while (true) {
        skip();
        if (i >= s.size()) {
            if (first) fail("empty divisor");
            break;
        }
        long sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            fail("expected '+' or '-'");
        }
        first = false;
        long mult = 1;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            mult = std::stol(s.substr(start, i - start));
            skip();
            if (i >= s.size() || s[i] != '*') fail("expected '*' after multiplicity");
            ++i;
            skip();
        }
        std::size_t start = i;
        if (i < s.size() && s[i] == '(') {
            while (i < s.size() && s[i] != ')') ++i;
            if (i >= s.size()) fail("unterminated point");
            ++i;
        } else if (s.compare(i, 7, "closed[") == 0) {
            while (i < s.size() && s[i] != ']') ++i;
            if (i >= s.size()) fail("unterminated closed place");
            ++i;
        } else if (s.compare(i, 3, "inf") == 0) {
            i += 3;
            if (s.compare(i, 5, "inity") == 0) i += 5;
        } else {
            fail("expected a place");
        }
        try {
            D.add(parse_place(curve, s.substr(start, i - start)), sign * mult);
        } catch (const ExpressionError& e) {
            throw ExpressionError(e.message(), s, static_cast<int>(start) + e.column_in_expression());
        }
    }
    return D;
}

// ---------------------------------------------------------------------------

Json curve_to_json(const Curve& c) {
    Json coeffs = Json::array();
    for (int i = 0; i <= c.f().degree(); ++i) coeffs.push_back(to_string(c.f().coeff(i)));
    return Json{{"f", coeffs}};
}

CurvePtr curve_from_json(const Json& j) {
    const Json& f = field(j, "f");
    Poly p;
    if (f.is_string()) {
        p = parse_poly(f.get<std::string>());
    } else if (f.is_array()) {
        std::vector<Rational> v;
        for (const auto& c : f) v.push_back(rational_from_json(c));
        p = Poly(std::move(v));
    } else {
        throw ParseError("curve.f must be a coefficient list (lowest degree first) or a polynomial string");
    }
    try {
        return make_curve(p);
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid curve: ") + e.what());
    }
}

Json func_to_json(const FuncElem& u) { return Json{{"a", u.a().to_string()}, {"b", u.b().to_string()}}; }

FuncElem func_from_json(const CurvePtr& curve, const Json& j) {
    if (j.is_string()) return parse_func(curve, j.get<std::string>());
    if (j.is_number_integer()) return FuncElem::constant(curve, rational_from_json(j));
    if (j.is_object()) {
        RatFunc a = j.contains("a") ? parse_ratfunc(j.at("a").get<std::string>()) : RatFunc();
        RatFunc b = j.contains("b") ? parse_ratfunc(j.at("b").get<std::string>()) : RatFunc();
        return FuncElem(curve, a, b);
    }
    throw ParseError("expected a function: {\"a\": ..., \"b\": ...} or an expression string");
}

Json place_to_json(const Place& p) {
    if (p.is_infinity()) return Json{{"type", "infinity"}};
    if (p.is_affine()) return Json{{"type", "affine"}, {"x", to_string(p.affine().x)}, {"y", to_string(p.affine().y)}};
    Json j{{"type", "closed"}, {"minpoly", p.closed().minpoly.to_string()}};
    if (p.closed().branch && !p.closed().branch->is_zero()) j["branch"] = p.closed().branch->to_string();
    return j;
}

Place place_from_json(const Curve& curve, const Json& j) {
    if (j.is_string()) return parse_place(curve, j.get<std::string>());
    std::string type = field(j, "type").get<std::string>();
    try {
        if (type == "infinity") return Place::infinity();
        if (type == "affine") return Place::affine(curve, rational_from_json(field(j, "x")), rational_from_json(field(j, "y")));
        if (type == "closed") {
            Poly m = parse_poly(field(j, "minpoly").get<std::string>());
            std::optional<Poly> branch;
            if (j.contains("branch")) branch = parse_poly(j.at("branch").get<std::string>());
            return Place::closed(curve, m, branch);
        }
    } catch (const DomainError& e) {
        throw ParseError(std::string("invalid place: ") + e.what());
    }
    throw ParseError("unknown place type \"" + type + "\"");
}

Json matrix_to_json(const FuncMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(func_to_json(m(i, j)));
        rows.push_back(row);
    }
    return rows;
}

FuncMatrix matrix_from_json(const CurvePtr& curve, const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty list of rows");
    std::size_t r = j.size(), c = j[0].size();
    FuncMatrix m(curve, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (!j[i].is_array() || j[i].size() != c) throw ParseError("matrix rows must have equal length");
        for (std::size_t k = 0; k < c; ++k) m(i, k) = func_from_json(curve, j[i][k]);
    }
    return m;
}

namespace {

std::string kind_name(BadKind k) { return k == BadKind::PoleOfSection ? "PoleOfSection" : "DependencePoint"; }

BadKind kind_from(const std::string& s) {
    if (s == "PoleOfSection") return BadKind::PoleOfSection;
    if (s == "DependencePoint") return BadKind::DependencePoint;
    throw ParseError("unknown bad point kind \"" + s + "\"");
}

}  // namespace

Json certificate_to_json(const TrivializationCertificate& cert) {
    Json j;
    j["curve"] = curve_to_json(*cert.M.curve());
    j["p"] = cert.M.rows();
    j["basepoint"] = place_to_json(cert.P);
    j["bound"] = cert.bound;
    j["count"] = cert.count;
    Json bad = Json::array();
    for (const auto& b : cert.bad_set)
        bad.push_back(Json{{"place", place_to_json(b.place)},
                           {"kind", kind_name(b.kind)},
                           {"exceptional", b.exceptional},
                           {"d", b.d}});
    j["bad_set"] = bad;
    Json log = Json::array();
    for (const auto& s : cert.log) {
        Json np = Json::array();
        for (const auto& [z, d] : s.new_points) np.push_back(Json{{"place", place_to_json(z)}, {"d", d}});
        Json carried = Json::array();
        for (const auto& z : s.carried) carried.push_back(place_to_json(z));
        log.push_back(Json{{"k", s.k},
                           {"N", s.N},
                           {"exceptional", s.exceptional},
                           {"q_prime", s.q_prime},
                           {"q_dblprime", s.q_dblprime},
                           {"new_points", np},
                           {"carried", carried}});
    }
    j["log"] = log;
    j["selection"] = cert.selection;
    j["input_frame"] = matrix_to_json(cert.input_frame);
    j["M"] = matrix_to_json(cert.M);
    j["output_frame"] = matrix_to_json(cert.output_frame);
    return j;
}

TrivializationCertificate certificate_from_json(const Json& j) {
    TrivializationCertificate cert;
    CurvePtr curve = curve_from_json(field(j, "curve"));
    cert.P = place_from_json(*curve, field(j, "basepoint"));
    cert.bound = field(j, "bound").get<long>();
    cert.count = field(j, "count").get<long>();
    for (const auto& b : field(j, "bad_set"))
        cert.bad_set.push_back(BadPoint{place_from_json(*curve, field(b, "place")),
                                        kind_from(field(b, "kind").get<std::string>()),
                                        field(b, "exceptional").get<bool>(), field(b, "d").get<int>()});
    for (const auto& s : field(j, "log")) {
        StepLog l;
        l.k = field(s, "k").get<int>();
        l.N = field(s, "N").get<long>();
        l.exceptional = field(s, "exceptional").get<long>();
        l.q_prime = field(s, "q_prime").get<long>();
        l.q_dblprime = field(s, "q_dblprime").get<long>();
        for (const auto& np : field(s, "new_points"))
            l.new_points.emplace_back(place_from_json(*curve, field(np, "place")), field(np, "d").get<int>());
        for (const auto& c : field(s, "carried")) l.carried.push_back(place_from_json(*curve, c));
        cert.log.push_back(std::move(l));
    }
    cert.selection = field(j, "selection").get<std::string>();
    cert.input_frame = matrix_from_json(curve, field(j, "input_frame"));
    cert.M = matrix_from_json(curve, field(j, "M"));
    cert.output_frame = matrix_from_json(curve, field(j, "output_frame"));
    return cert;
}

Instance instance_from_json(const Json& j) {
    Instance inst;
    inst.curve = curve_from_json(field(j, "curve"));
    inst.frame = matrix_from_json(inst.curve, field(j, "frame"));
    if (inst.frame.rows() != inst.frame.cols()) throw ParseError("frame must be square");
    if (j.contains("p") && j.at("p").get<std::size_t>() != inst.frame.rows())
        throw ParseError("p does not match the frame size");
    inst.P = j.contains("basepoint") ? place_from_json(*inst.curve, j.at("basepoint")) : Place::infinity();
    if (inst.P.is_closed()) throw ParseError("basepoint must be a rational place");
    return inst;
}

Json instance_to_json(const Instance& inst) {
    return Json{{"curve", curve_to_json(*inst.curve)},
                {"p", inst.frame.rows()},
                {"basepoint", place_to_json(inst.P)},
                {"frame", matrix_to_json(inst.frame)}};
}

RRQuery rr_query_from_json(const Json& j) {
    RRQuery q;
    q.curve = curve_from_json(field(j, "curve"));
    const Json& d = field(j, "divisor");
    if (d.is_string()) {
        q.divisor = parse_divisor(*q.curve, d.get<std::string>());
    } else if (d.is_array()) {
        for (const auto& t : d) q.divisor.add(place_from_json(*q.curve, field(t, "place")), field(t, "mult").get<long>());
    } else {
        throw ParseError("divisor must be a string or a list of {place, mult}");
    }
    return q;
}

SystemInput system_from_json(const Json& j) {
    SystemInput s;
    s.curve = curve_from_json(field(j, "curve"));
    s.A = matrix_from_json(s.curve, field(j, "system"));
    if (s.A.rows() != s.A.cols()) throw ParseError("system matrix must be square");
    if (j.contains("declared"))
        for (const auto& p : j.at("declared")) s.declared.push_back(place_from_json(*s.curve, p));
    return s;
}

Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        std::size_t off = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, col] = line_col(text, off);
        std::string what = e.what();
        auto cut = what.find("syntax error");
        throw ParseError(cut == std::string::npos ? what : what.substr(cut), line, col);
    }
}

ParseError locate(const std::string& text, const ExpressionError& e) {
    std::string needle = "\"" + e.expression() + "\"";
    auto at = text.find(needle);
    if (at == std::string::npos) return ParseError(e.what());
    auto [line, col] = line_col(text, at + 1);
    return ParseError(e.message() + " in \"" + e.expression() + "\"", line, col + e.column_in_expression() - 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path);
    out << content;
}

}  // namespace apparent_loci
