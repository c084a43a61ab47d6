#ifndef ABST_ERRORS_HPP
#define ABST_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace abst {

// Instance construction rejected the input (duplicate pair, missing pair,
// self-loop, colour out of range, bad dimensions).
struct BuildError : std::runtime_error {
    explicit BuildError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed text input (instance files, certificates).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A configured size or enumeration limit stopped the operation before it
// could produce a trustworthy answer.
struct GuardError : std::runtime_error {
    explicit GuardError(const std::string& what) : std::runtime_error(what) {}
};

// A stored digest does not match the recomputed one.
struct DigestError : std::runtime_error {
    explicit DigestError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace abst

#endif
