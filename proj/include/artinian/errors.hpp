// Exception hierarchy shared by every artinian module.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace artinian {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed polynomial or rational text. `position` is a 0-based offset into the input.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class ArityMismatch : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class NotArtinian : public Error {
public:
    explicit NotArtinian(int degree_cap)
        : Error("no Artinian certificate found up to degree cap " + std::to_string(degree_cap)),
          degree_cap_(degree_cap) {}

    int degree_cap() const noexcept { return degree_cap_; }

private:
    int degree_cap_;
};

class EmptyIdeal : public Error {
public:
    EmptyIdeal() : Error("ideal has no nonzero generators") {}
};

class NotZeroDimensional : public Error {
public:
    using Error::Error;
};

class DegenerateResultant : public Error {
public:
    using Error::Error;
};

class RefinementBudgetExceeded : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

}  // namespace artinian
