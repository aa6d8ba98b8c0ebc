#pragma once

#include <stdexcept>
#include <string>

namespace gring {

// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed or inconsistent input data (bad JSON, bad table, bad indices).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// Arithmetic violations: division by zero, non-coprime Galois exponent, ...
struct ArithmeticError : Error {
    explicit ArithmeticError(const std::string& what) : Error(what) {}
};

// Requested a central idempotent e_H for a non-normal subgroup H.
struct NonNormalSubgroup : Error {
    explicit NonNormalSubgroup(const std::string& what) : Error(what) {}
};

// No (subgroup, linear character) inducing pair found for some irreducible.
struct NotMonomial : Error {
    NotMonomial(const std::string& what, unsigned char_index)
        : Error(what), character_index(char_index) {}
    unsigned character_index;
};

// A generator fed to lattice comparison does not lie in zeta(Q[G]).
struct GaloisInstability : Error {
    explicit GaloisInstability(const std::string& what) : Error(what) {}
};

// T contains a place whose Euler factor is not invertible, or lacks data.
struct InadmissibleT : Error {
    explicit InadmissibleT(const std::string& what) : Error(what) {}
};

// Enumeration bound exceeded without an explicit override.
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

}  // namespace gring
