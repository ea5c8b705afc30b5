#include "quizmine/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/distributions/students_t.hpp>

#include "quizmine/errors.hpp"

namespace quizmine::stats {

double pearson(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size() || a.size() < 2)
    throw Error(errc::invalid_argument, "pearson requires two equal vectors, n >= 2");
  const double n = double(a.size());
  double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0, saa = 0, sbb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0)
    throw Error(errc::invalid_argument, "pearson undefined for constant input");
  return sab / std::sqrt(saa * sbb);
}

std::vector<double> average_ranks(const std::vector<double>& values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    double mean_rank = (double(i + 1) + double(j + 1)) / 2.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = mean_rank;
    i = j + 1;
  }
  return ranks;
}

double spearman_from_ranks(const std::vector<double>& ranks_a,
                           const std::vector<double>& ranks_b) {
  return pearson(ranks_a, ranks_b);
}

double spearman_exact_p(const std::vector<double>& ranks_a,
                        const std::vector<double>& ranks_b, double rho_obs) {
  const std::size_t n = ranks_a.size();
  if (n != ranks_b.size() || n < 2 || n > 10)
    throw Error(errc::invalid_argument, "exact permutation p requires 2 <= n <= 10");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::uint64_t total = 0, at_least = 0;
  std::vector<double> permuted(n);
  const double eps = 1e-12;
  do {
    for (std::size_t i = 0; i < n; ++i) permuted[i] = ranks_b[perm[i]];
    double rho = pearson(ranks_a, permuted);
    ++total;
    if (rho_obs >= 0 ? rho >= rho_obs - eps : rho <= rho_obs + eps) ++at_least;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return double(at_least) / double(total);
}

double spearman_t_approx_p(double rho, int n) {
  if (n < 3) throw Error(errc::invalid_argument, "t approximation requires n >= 3");
  if (rho >= 1.0 || rho <= -1.0) return 0.0;
  double t = rho * std::sqrt(double(n - 2) / (1.0 - rho * rho));
  boost::math::students_t dist(double(n - 2));
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(t)));
}

}  // namespace quizmine::stats
