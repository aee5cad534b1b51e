#include "pft/bench/stats.hpp"

#include <cmath>

#include <boost/math/distributions/students_t.hpp>

namespace pft::bench {

double mean(const std::vector<double>& xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
  const std::size_t n = xs.size();
  if (n < 2) return 0.0;
  const double m = mean(xs);
  double s2 = 0.0;
  for (double x : xs) s2 += (x - m) * (x - m);
  return std::sqrt(s2 / static_cast<double>(n - 1));
}

double standard_error(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  return sample_sd(xs) / std::sqrt(static_cast<double>(xs.size()));
}

MeanSe mean_of_means(const std::vector<double>& per_seed_means) {
  return {mean(per_seed_means), standard_error(per_seed_means)};
}

double welch_p_greater(const std::vector<double>& a,
                       const std::vector<double>& b) {
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  if (na < 2 || nb < 2) return 1.0;
  const double ma = mean(a);
  const double mb = mean(b);
  const double va = sample_sd(a) * sample_sd(a);
  const double vb = sample_sd(b) * sample_sd(b);
  const double s2 = va / na + vb / nb;
  if (s2 <= 0.0) return ma > mb ? 0.0 : 1.0;
  const double t = (ma - mb) / std::sqrt(s2);
  const double df = s2 * s2 / (va * va / (na * na * (na - 1.0)) +
                               vb * vb / (nb * nb * (nb - 1.0)));
  boost::math::students_t dist(df);
  return boost::math::cdf(boost::math::complement(dist, t));
}

double two_proportion_p_greater(int k_a, int n_a, int k_b, int n_b) {
  if (n_a == 0 || n_b == 0) return 1.0;
  const double pa = static_cast<double>(k_a) / n_a;
  const double pb = static_cast<double>(k_b) / n_b;
  const double pooled = static_cast<double>(k_a + k_b) / (n_a + n_b);
  const double se =
      std::sqrt(pooled * (1.0 - pooled) * (1.0 / n_a + 1.0 / n_b));
  if (se <= 0.0) return pa > pb ? 0.0 : 1.0;
  const double z = (pa - pb) / se;
  return 0.5 * std::erfc(z / std::sqrt(2.0));
}

double chi_square_uniform(const std::vector<int>& observed) {
  if (observed.empty()) return 0.0;
  double total = 0.0;
  for (int o : observed) total += o;
  const double expected = total / static_cast<double>(observed.size());
  if (expected <= 0.0) return 0.0;
  double stat = 0.0;
  for (int o : observed) {
    const double d = o - expected;
    stat += d * d / expected;
  }
  return stat;
}

}  // namespace pft::bench
