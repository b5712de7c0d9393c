#pragma once

#include <stdexcept>
#include <string>

namespace padyn {

// Base for every condition this library raises on purpose (defined-errors).
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

struct DivisionByZeroError : Error {
    explicit DivisionByZeroError(const std::string& what = "division by zero") : Error(what) {}
};

// Canonical p-adic expansion of 0 does not exist.
struct NoExpansionError : Error {
    NoExpansionError() : Error("no canonical expansion of 0") {}
};

// Mixing sqrt(D1) and sqrt(D2) with incompatible radicands would need a
// degree-4 tower; the engine refuses instead of approximating.
struct ExtensionTowerError : Error {
    explicit ExtensionTowerError(const std::string& what) : Error(what) {}
};

// Raised by the truncated backend: the tracked digits cannot certify the
// requested answer (comparison, valuation, or division by a tracked zero).
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& what) : Error(what) {}
};

// A piecewise radius step landed on a breakpoint sphere whose image is
// orbit-dependent and no star value / provider was supplied.
struct StarValueError : Error {
    explicit StarValueError(const std::string& what = "star value required at breakpoint") : Error(what) {}
};

struct InvalidParamsError : Error {
    explicit InvalidParamsError(const std::string& what) : Error(what) {}
};

// Evaluation at the pole of the map.
struct PoleError : Error {
    explicit PoleError(const std::string& pole_repr)
        : Error("evaluation at the pole x = " + pole_repr), pole(pole_repr) {}
    std::string pole;
};

}  // namespace padyn
