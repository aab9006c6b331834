#pragma once

#include <stdexcept>
#include <string>

namespace fluctem {

/// Thrown by operations that are undefined exactly on the light cone
/// (kz = 0); callers must step off the grazing set.
class GrazingModeError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Adaptive integration ran out of panel budget before reaching the
/// requested tolerance; carries the residual error estimate.
class QuadratureError : public std::runtime_error {
public:
    QuadratureError(const std::string& what, double residual)
        : std::runtime_error(what), residual_(residual) {}
    double residual() const { return residual_; }

private:
    double residual_;
};

/// Malformed input file; line() is 1-based, 0 when no single line applies.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what)
        : std::runtime_error(what), line_(0) {}
    ParseError(const std::string& what, long line)
        : std::runtime_error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

} // namespace fluctem
