#pragma once

#include <stdexcept>
#include <string>

namespace adic {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct RingMismatch : Error {
    explicit RingMismatch(const std::string& msg) : Error("ring mismatch: " + msg) {}
};

struct DuplicateVariable : Error {
    explicit DuplicateVariable(const std::string& name)
        : Error("duplicate variable name: " + name) {}
};

struct NonPrimeModulus : Error {
    explicit NonPrimeModulus(const std::string& p)
        : Error("modulus is not prime: " + p) {}
};

// A computation refused because the base ring does not support it
// (Groebner over ZZ, resolutions over colimit rings, ...).
struct UnsupportedBase : Error {
    explicit UnsupportedBase(const std::string& msg) : Error("unsupported base: " + msg) {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error("budget exceeded: " + msg) {}
};

// Module map whose matrix does not send source relations into target relations.
struct IllDefinedMap : Error {
    explicit IllDefinedMap(const std::string& msg) : Error("ill-defined map: " + msg) {}
};

struct NonHomogeneous : Error {
    explicit NonHomogeneous(const std::string& msg) : Error("non-homogeneous: " + msg) {}
};

} // namespace adic
