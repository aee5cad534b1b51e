#pragma once

#include <cstddef>
#include <vector>

namespace pft::bench {

double mean(const std::vector<double>& xs);
/// Sample standard deviation (n - 1); 0 for fewer than two points.
double sample_sd(const std::vector<double>& xs);
/// Standard error of the mean; 0 for fewer than two points.
double standard_error(const std::vector<double>& xs);

struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};
MeanSe mean_of_means(const std::vector<double>& per_seed_means);

/// One-sided Welch test p-value for H1: mean(a) > mean(b).
double welch_p_greater(const std::vector<double>& a,
                       const std::vector<double>& b);

/// One-sided two-proportion z-test p-value for H1: p_a > p_b, with
/// successes k over trials n.
double two_proportion_p_greater(int k_a, int n_a, int k_b, int n_b);

/// Pearson chi-square statistic for observed counts vs uniform expectation.
double chi_square_uniform(const std::vector<int>& observed);

}  // namespace pft::bench
