#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hardy {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed expression text; `position` is a 0-based byte offset.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Well-formed input that falls outside c*t^a*(log t)^b sums (exp, sin, log log, ...).
class UnsupportedForm : public Error {
public:
    using Error::Error;
};

/// A value is not defined at the requested argument (e.g. 1/log t at t = 1).
class DomainError : public Error {
public:
    using Error::Error;
};

class UndecidableFloor : public Error {
public:
    explicit UndecidableFloor(std::int64_t n)
        : Error("floor could not be certified at n = " + std::to_string(n)), n_(n) {}
    std::int64_t n() const noexcept { return n_; }

private:
    std::int64_t n_;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class DegenerateFamily : public Error {
public:
    using Error::Error;
};

class NonTermination : public Error {
public:
    using Error::Error;
};

class HypothesisFailed : public Error {
public:
    using Error::Error;
};

class EmptyWindow : public Error {
public:
    using Error::Error;
};

class RemainderTooLarge : public Error {
public:
    using Error::Error;
};

class RequiresCond1 : public Error {
public:
    using Error::Error;
};

class GrowthOutOfRange : public Error {
public:
    using Error::Error;
};

class UnsupportedSystem : public Error {
public:
    using Error::Error;
};

}  // namespace hardy
