#pragma once

#include "apparent_loci/errors.hpp"
#include "apparent_loci/gauge.hpp"
#include "apparent_loci/trivializer.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace apparent_loci {

using Json = nlohmann::ordered_json;

/// Expression in x and y with + - * / ^ and parentheses, e.g.
/// "(3/2*x^2 - y)/(x + 1)". Errors carry the 1-based column in `text`.
FuncElem parse_func(const CurvePtr& curve, std::string_view text);
/// Same grammar without y; the result must be a polynomial.
Poly parse_poly(std::string_view text);
RatFunc parse_ratfunc(std::string_view text);

/// "(x0,y0)", "inf", "closed[m(x)]", "closed[m(x); y=r(x)]"
Place parse_place(const Curve& curve, std::string_view text);
/// "2*(0,1) - (2,3) + 3*inf + closed[x^2 - x + 1]" or "0".
Divisor parse_divisor(const Curve& curve, std::string_view text);

Json curve_to_json(const Curve& c);
CurvePtr curve_from_json(const Json& j);

Json func_to_json(const FuncElem& u);
/// Accepts {"a": ..., "b": ...} or a plain expression string.
FuncElem func_from_json(const CurvePtr& curve, const Json& j);

Json place_to_json(const Place& p);
/// Accepts a tagged object or the textual form.
Place place_from_json(const Curve& curve, const Json& j);

/// Matrices are lists of rows.
Json matrix_to_json(const FuncMatrix& m);
FuncMatrix matrix_from_json(const CurvePtr& curve, const Json& j);

Json certificate_to_json(const TrivializationCertificate& cert);
TrivializationCertificate certificate_from_json(const Json& j);

struct Instance {
    CurvePtr curve;
    Frame frame;
    Place P;
};
/// {"curve": {"f": [...]}, "p": n, "frame": [[...]], "basepoint": ...}
Instance instance_from_json(const Json& j);
Json instance_to_json(const Instance& inst);

struct RRQuery {
    CurvePtr curve;
    Divisor divisor;
};
RRQuery rr_query_from_json(const Json& j);

struct SystemInput {
    CurvePtr curve;
    SystemMatrix A;
    std::vector<Place> declared;
};
/// {"curve": ..., "system": [[...]], "declared": [...]}
SystemInput system_from_json(const Json& j);

/// Parses JSON text; syntax errors and expression errors inside string
/// values are reported with line and column of the source text.
Json parse_json_text(const std::string& text);

/// Runs `load` on the parsed document, mapping errors from expressions
/// back to line/column positions in `text`.
template <class F>
auto load_document(const std::string& text, F load) -> decltype(load(std::declval<const Json&>()));

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

// ---------------------------------------------------------------------------

/// Thrown by the expression parsers: column within the expression.
class ExpressionError : public ParseError {
public:
    ExpressionError(const std::string& what, std::string expr, int column)
        : ParseError(what + " at column " + std::to_string(column) + " of \"" + expr + "\""),
          expr_(std::move(expr)),
          column_in_expr_(column),
          message_(what) {}
    const std::string& expression() const { return expr_; }
    int column_in_expression() const { return column_in_expr_; }
    const std::string& message() const { return message_; }

private:
    std::string expr_;
    int column_in_expr_;
    std::string message_;
};

/// Maps an error inside a JSON string value to a text position.
ParseError locate(const std::string& text, const ExpressionError& e);

template <class F>
auto load_document(const std::string& text, F load) -> decltype(load(std::declval<const Json&>())) {
    Json j = parse_json_text(text);
    try {
        return load(j);
    } catch (const ExpressionError& e) {
        throw locate(text, e);
    } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
    }
}

}  // namespace apparent_loci
