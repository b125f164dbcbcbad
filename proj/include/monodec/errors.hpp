#ifndef MONODEC_ERRORS_HPP
#define MONODEC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace monodec {

// Malformed input: not unitary, bad split shape, parse failures and the like.
// The CLI maps these to exit code 1.
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DivisionByZero : public ValidationError {
public:
    DivisionByZero() : ValidationError("division by zero") {}
};

class ParseError : public ValidationError {
public:
    ParseError(const std::string& what, std::size_t offset)
        : ValidationError(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// A broken internal invariant (analytic checks disagreeing with recomposition,
// an iteration cap being hit). Never expected; the CLI maps it to exit code 2.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace monodec

#endif
