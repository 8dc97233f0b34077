#pragma once

#include <cstddef>
#include <vector>

#include "qtomo/types.hpp"

namespace qtomo::stats {

/// Regularized lower incomplete gamma P(a, x). Series for x < a+1,
/// continued fraction otherwise. Absolute accuracy ~1e-14.
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Chi-square CDF with nu degrees of freedom.
double chi_square_cdf(double x, double nu);

/// Chi-square survival function (upper tail weight above x).
double chi_square_sf(double x, double nu);

/// Survival function of the Kolmogorov distribution,
/// p = 2 sum_{k>=1} (-1)^{k-1} exp(-2 k^2 lambda^2).
double kolmogorov_sf(double lambda);

struct KsResult {
  double statistic = 0.0;  // sup |F_n - F|
  double p_value = 1.0;    // asymptotic, with Stephens' small-n correction
};

/// One-sample Kolmogorov-Smirnov test of samples against a continuous CDF.
template <class Cdf>
KsResult ks_test(std::vector<double> samples, Cdf&& cdf);

double ks_p_value(double statistic, std::size_t n_samples);

// --- implementation ---

template <class Cdf>
KsResult ks_test(std::vector<double> samples, Cdf&& cdf) {
  std::sort(samples.begin(), samples.end());
  const std::size_t n = samples.size();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  return {d, ks_p_value(d, n)};
}

}  // namespace qtomo::stats
