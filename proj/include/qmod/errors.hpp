#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

/* Base class for all errors thrown by this library. */
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/* Arithmetic was attempted between series over incompatible rings. */
struct RingMismatch : Error {
    explicit RingMismatch(const std::string& msg) : Error(msg) {}
};

/* A rational value has the modulus in its denominator. */
struct NotPIntegral : Error {
    explicit NotPIntegral(const std::string& msg) : Error(msg) {}
};

/* Series division or inversion requires an invertible leading coefficient. */
struct NonUnitLeading : Error {
    explicit NonUnitLeading(const std::string& msg) : Error(msg) {}
};

/* An eta quotient whose leading exponent is not an integer. */
struct FractionalExponent : Error {
    explicit FractionalExponent(const std::string& msg) : Error(msg) {}
};

/* An operator scalar does not exist in the requested ring. */
struct NonIntegralScalar : Error {
    explicit NonIntegralScalar(const std::string& msg) : Error(msg) {}
};

/* A value expected to be an integer is not. */
struct NonIntegral : Error {
    explicit NonIntegral(const std::string& msg) : Error(msg) {}
};

/* An operator index expected to be squarefree is not. */
struct NonSquarefree : Error {
    explicit NonSquarefree(const std::string& msg) : Error(msg) {}
};

/* A discriminant argument outside the supported congruence classes. */
struct InvalidDiscriminant : Error {
    explicit InvalidDiscriminant(const std::string& msg) : Error(msg) {}
};

/* A quadratic form that is not reduced where a reduced one is required. */
struct NotReduced : Error {
    explicit NotReduced(const std::string& msg) : Error(msg) {}
};

/* A numeric evaluation whose certified error bound exceeds the target. */
struct PrecisionLoss : Error {
    explicit PrecisionLoss(const std::string& msg) : Error(msg) {}
};

/* A numeric value too far from every integer to round safely. */
struct RoundingAmbiguous : Error {
    explicit RoundingAmbiguous(const std::string& msg) : Error(msg) {}
};

/* A series does not carry enough trusted coefficients for the request. */
struct InsufficientPrecision : Error {
    explicit InsufficientPrecision(const std::string& msg) : Error(msg) {}
};

/* An input beyond a hard combinatorial guard. */
struct TooLarge : Error {
    explicit TooLarge(const std::string& msg) : Error(msg) {}
};

/* A malformed argument not covered by a more specific error. */
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

}  // namespace qmod
