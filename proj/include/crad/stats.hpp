#pragma once

#include <cstddef>

namespace crad {

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
/// Series expansion for x < a + 1, continued fraction otherwise.
double regularized_gamma_p(double a, double x);

/// Chi-square CDF with k degrees of freedom.
double chi2_cdf(double x, double k);

/// Chi-square quantile (inverse CDF) with k degrees of freedom, prob in (0, 1).
double chi2_quantile(double prob, double k);

}  // namespace crad
