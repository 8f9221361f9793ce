#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hwlen {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotPrimeError : Error {
    explicit NotPrimeError(uint64_t p) : Error("not prime: " + std::to_string(p)), p(p) {}
    uint64_t p;
};

struct ReducibleModulusError : Error {
    ReducibleModulusError() : Error("modulus polynomial is reducible") {}
};

struct DegreeMismatchError : Error {
    DegreeMismatchError() : Error("modulus polynomial degree does not match extension degree") {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

struct SyntaxError : Error {
    SyntaxError(std::size_t pos, const std::string& what)
        : Error("syntax error at position " + std::to_string(pos) + ": " + what), pos(pos) {}
    std::size_t pos;
};

struct UnknownVariableError : Error {
    explicit UnknownVariableError(const std::string& name) : Error("unknown variable: " + name), name(name) {}
    std::string name;
};

struct VanishesModPError : Error {
    VanishesModPError() : Error("polynomial vanishes modulo p") {}
};

struct OutOfMemoryBudgetError : Error {
    explicit OutOfMemoryBudgetError(uint64_t estimated_terms)
        : Error("memory budget exceeded, estimated " + std::to_string(estimated_terms) + " coefficients"),
          estimated_terms(estimated_terms) {}
    uint64_t estimated_terms;
};

struct UnsupportedExtensionDegreeError : Error {
    UnsupportedExtensionDegreeError() : Error("operation supports prime fields only (e = 1)") {}
};

struct ResourceCapError : Error {
    explicit ResourceCapError(uint64_t steps)
        : Error("resource cap exceeded after " + std::to_string(steps) + " steps"), steps(steps) {}
    uint64_t steps;
};

struct WorkCapExceededError : Error {
    WorkCapExceededError() : Error("enumeration work cap exceeded") {}
};

struct InvalidInputError : Error {
    using Error::Error;
};

}  // namespace hwlen
