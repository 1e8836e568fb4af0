#pragma once

#include <stdexcept>
#include <string>

namespace rigidlab {

// Malformed input text (files, manifests, rational literals).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

// A documented operation precondition was violated (zero scalar, shape
// mismatch, invalid split partition, singular basis, ...).
class PreconditionError : public std::runtime_error {
public:
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace rigidlab
