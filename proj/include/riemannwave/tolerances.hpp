#pragma once

#include "riemannwave/errors.hpp"

namespace riemannwave {

/// Accuracy targets shared by every series, quadrature and root search.
///
/// Quadrature converges once the summed error estimate drops below
/// max(quad_abs_tol, quad_rel_tol * |I|).
struct Tolerances
{
    double series_tol = 1e-16;   ///< relative tail bound for series truncation
    double quad_abs_tol = 1e-16; ///< absolute quadrature error target
    double quad_rel_tol = 1e-14; ///< relative quadrature error target
    double root_tol = 1e-10;     ///< bisection half-width target

    void validate() const
    {
        if (!(series_tol > 0.0) || !(quad_abs_tol > 0.0) || !(quad_rel_tol > 0.0) || !(root_tol > 0.0)) {
            throw DomainError("tolerances must be strictly positive");
        }
    }
};

} // namespace riemannwave
