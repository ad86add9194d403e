#pragma once

namespace ostrowski {

/// Gamma function for real z > 0. Relative error below 1e-12 on (0, 50].
/// Throws DomainError for z <= 0 or non-finite z.
double gamma(double z);

}  // namespace ostrowski
