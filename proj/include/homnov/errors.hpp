#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace homnov {

// Malformed input data: bad dimensions, out-of-range indices, unparsable
// literals, shape mismatches.  The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& message)
        : std::runtime_error(message) {}
};

// A mathematical precondition of an operation does not hold, e.g. an algebra
// handed to a construction fails a required axiom.  Carries the name of the
// failed predicate.  The CLI maps this to exit code 1.
class PreconditionError : public std::runtime_error {
public:
    PreconditionError(std::string predicate, const std::string& message)
        : std::runtime_error(message), predicate_(std::move(predicate)) {}

    const std::string& predicate() const { return predicate_; }

private:
    std::string predicate_;
};

} // namespace homnov
