#pragma once

#include "ellint/point.hpp"

namespace ellint {

/// Complete elliptic integral of the first kind K(k) by the
/// arithmetic-geometric mean, K(k) = pi / (2 AGM(1, sqrt(1 - k^2))).
/// Requires 0 <= k < 1; k = 1 throws DomainError.
double complete_k(double k, const Quality& q = {});

/// K(sqrt(1 - k^2)) = pi / (2 AGM(1, k)), without forming 1 - k^2.
/// Requires 0 < k <= 1.
double complete_k_comp(double k, const Quality& q = {});

/// Carlson's symmetric integral
///   R_F(x, y, z) = 1/2 int_0^inf dt / sqrt((t + x)(t + y)(t + z))
/// by the duplication theorem with the fifth-order Taylor correction. At most
/// one argument may be zero. The iteration stops once Carlson's a-priori
/// bound guarantees relative error below q.abs_tol.
double carlson_rf(double x, double y, double z, const Quality& q = {});

/// Legendre's F(lambda, k) = int_0^lambda dt / sqrt((1 - t^2)(1 - k^2 t^2)).
///
/// Edges use closed forms: F(0, k) = 0, F(lambda, 0) = asin(lambda),
/// F(lambda, 1) = atanh(lambda), F(1, k) = K(k). Elsewhere
/// F = lambda R_F(1 - lambda^2, 1 - k^2 lambda^2, 1). The singular corner
/// (1, 1) throws DomainError.
double reference_f(const EvalPoint& p, const Quality& q = {});

/// F(lambda, k) for a real squared modulus m = k^2 <= 1, including m < 0
/// (imaginary modulus, as produced by the reflection relation). Requires
/// 0 <= lambda <= 1 and excludes lambda = m = 1.
double legendre_f_sq(double lambda, double m, const Quality& q = {});

}  // namespace ellint
