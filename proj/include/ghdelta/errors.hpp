#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ghdelta {

/// Base class for all engine errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class PointNotInScale : public Error {
public:
    explicit PointNotInScale(const std::string& what) : Error(what) {}
};

class BoundarySide : public Error {
public:
    explicit BoundarySide(const std::string& what) : Error(what) {}
};

class EmptyGrid : public Error {
public:
    explicit EmptyGrid(const std::string& what) : Error(what) {}
};

class AlphaOutOfRange : public Error {
public:
    explicit AlphaOutOfRange(const std::string& what) : Error(what) {}
};

/// Parse-time errors carry a 0-based byte offset into the source text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t pos)
        : Error(what + " at position " + std::to_string(pos)), pos_(pos) {}
    std::size_t pos() const { return pos_; }

private:
    std::size_t pos_;
};

class SyntaxError : public ParseError {
public:
    using ParseError::ParseError;
};

class UnknownIdentifier : public ParseError {
public:
    using ParseError::ParseError;
};

class ArityError : public ParseError {
public:
    using ParseError::ParseError;
};

class EvalDomainError : public Error {
public:
    explicit EvalDomainError(const std::string& what) : Error(what) {}
};

/// A sampled function value fails the fuzzy-number shape checks.
class NotAFuzzyNumber : public Error {
public:
    NotAFuzzyNumber(const std::string& what, double alpha)
        : Error(what), alpha_(alpha) {}
    double alpha() const { return alpha_; }

private:
    double alpha_;
};

class UnknownFixture : public Error {
public:
    explicit UnknownFixture(const std::string& what) : Error(what) {}
};

class BadParams : public Error {
public:
    explicit BadParams(const std::string& what) : Error(what) {}
};

class DegenerateDenominator : public Error {
public:
    explicit DegenerateDenominator(const std::string& what) : Error(what) {}
};

class GridMismatch : public Error {
public:
    explicit GridMismatch(const std::string& what) : Error(what) {}
};

class PointNotApplicable : public Error {
public:
    explicit PointNotApplicable(const std::string& what) : Error(what) {}
};

class GhDifferenceFails : public Error {
public:
    explicit GhDifferenceFails(const std::string& what) : Error(what) {}
};

/// Scenario loading / validation problems (bad file, bad keys, points
/// outside the scale).  The CLI maps these to exit code 2.
class ScenarioError : public Error {
public:
    explicit ScenarioError(const std::string& what) : Error(what) {}
};

}  // namespace ghdelta
