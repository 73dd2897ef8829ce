#pragma once

namespace taildep {

// Quantile function of the standard normal distribution, accurate to
// better than 1e-9 over p in (0, 1). Throws ConfigError outside (0, 1).
double normal_quantile(double p);

// Standard normal CDF (used by tests and diagnostics).
double normal_cdf(double x);

}  // namespace taildep
