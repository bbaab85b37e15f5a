#pragma once

#include <stdexcept>
#include <string>

namespace tvg {

/* Base of every library error so callers can catch tvg::Error as a family. */
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/* Inputs of differing dimension were mixed. */
struct DimensionMismatch : Error {
    using Error::Error;
};

/* Malformed user input: bad sizes, non-finite coordinates, invalid graphs. */
struct InvalidInput : Error {
    using Error::Error;
};

/* An operation that needs pairwise distinct points saw coincident ones. */
struct DuplicatePoints : Error {
    using Error::Error;
};

/* An active edge midpoint coincides with the minimizer, so no tangent
 * direction exists. */
struct DegenerateMidpoint : Error {
    using Error::Error;
};

/* An active constituent's center coincides with the minimizer while other
 * constituents are active too, so its gradient is undefined. */
struct NondifferentiableActive : Error {
    using Error::Error;
};

/* A combinatorial certificate (Caratheodory submatching, convex-hull
 * recombination, tangent identity) failed beyond tolerance. */
struct CertificateFailure : Error {
    using Error::Error;
};

/* Exhaustive search found no alternating 4- or 6-cycle; on valid non-open
 * inputs this indicates a tolerance failure and carries diagnostics. */
struct NoCycleFound : Error {
    using Error::Error;
};

/* local_search exceeded its iteration budget without reaching an open
 * configuration. */
struct IterationLimit : Error {
    using Error::Error;
};

} // namespace tvg
