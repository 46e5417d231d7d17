#pragma once

#include <stdexcept>
#include <string>

namespace apparent_loci {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands live on different curves.
class CurveMismatch : public Error {
public:
    CurveMismatch() : Error("operands belong to different curves") {}
};

/// Operation undefined for its input (zero inverse, pole where a jet is
/// requested, unsupported place kind, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Input text could not be parsed; line/column are 1-based, 0 when unknown.
class ParseError : public Error {
public:
    ParseError(const std::string& what, int line = 0, int column = 0)
        : Error(format(what, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& what, int line, int column) {
        if (line <= 0) return what;
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
    }
    int line_;
    int column_;
};

/// A dependence point needs local data but is not a rational unramified
/// affine place. Scalars are restricted to Q, so the algorithm cannot
/// expand there.
class IrrationalLocus : public Error {
public:
    IrrationalLocus(const std::string& place, const std::string& reason)
        : Error("dependence point " + place + " " + reason +
                " (local expansions are only available at rational unramified affine places; "
                "scalars are restricted to Q)"),
          place_(place) {}

    const std::string& place() const { return place_; }

private:
    std::string place_;
};

/// det of the frame vanishes identically.
class SingularFrame : public Error {
public:
    using Error::Error;
};

/// A deterministic enumeration ran out of candidates.
class SearchExhausted : public Error {
public:
    using Error::Error;
};

}  // namespace apparent_loci
