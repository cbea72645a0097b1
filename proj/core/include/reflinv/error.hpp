#ifndef REFLINV_ERROR_HPP
#define REFLINV_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace reflinv {

// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

// Mixed-order arithmetic would exceed the configured cyclotomic order cap.
class OrderOverflow : public Error {
public:
    using Error::Error;
};

// Text input (scalar, polynomial, weight, group file) could not be parsed.
// Line and column are 1-based; line 0 means "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string &message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), line_(line), column_(column), message_(message) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }
    const std::string &bare_message() const noexcept { return message_; }

private:
    static std::string format(const std::string &m, std::size_t line, std::size_t column)
    {
        if (line == 0) {
            return "parse error at column " + std::to_string(column) + ": " + m;
        }
        return "parse error at line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + m;
    }

    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

class GroupNotFinite : public Error {
public:
    using Error::Error;
};

class NotOrthogonal : public Error {
public:
    NotOrthogonal(std::size_t index, const std::string &what)
        : Error("element " + std::to_string(index) + " is not orthogonal: " + what), index_(index) {}
    std::size_t element_index() const noexcept { return index_; }

private:
    std::size_t index_;
};

// Raised by degree extraction when the Molien series is not of the form
// prod (1 - t^d_i)^{-1}; this is the witness that the group is not generated
// by pseudo-reflections.
class NotReflectionSeries : public Error {
public:
    using Error::Error;
};

class GeneratorSearchFailed : public Error {
public:
    using Error::Error;
};

// An internal cross-check failed. Always indicates a bug or a violated
// mathematical precondition, never bad user input.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

class InsufficientSamples : public Error {
public:
    using Error::Error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

} // namespace reflinv

#endif
