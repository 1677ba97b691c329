#pragma once

namespace stnp {

/// Gamma function for x > 0. Throws DomainError for x <= 0.
/// Relative error below 1e-12 on (0, 30].
double gamma_fn(double x);

/// log Gamma for x > 0 (used where Gamma itself would overflow).
double log_gamma_fn(double x);

}  // namespace stnp
