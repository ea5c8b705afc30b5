#pragma once

#include <vector>

namespace quizmine::stats {

/// Pearson correlation of two equal-length vectors.
double pearson(const std::vector<double>& a, const std::vector<double>& b);

/// Average ranks (1-based) of a value vector; tied values share the mean of
/// the positions they occupy.
std::vector<double> average_ranks(const std::vector<double>& values);

/// Spearman rho between two rank vectors (Pearson on the ranks).
double spearman_from_ranks(const std::vector<double>& ranks_a,
                           const std::vector<double>& ranks_b);

/// Exact permutation p-value: the fraction of the n! rank permutations whose
/// rho is at least as extreme as `rho_obs`, in the direction of `rho_obs`.
/// Intended for small n (n! permutations are enumerated).
double spearman_exact_p(const std::vector<double>& ranks_a,
                        const std::vector<double>& ranks_b, double rho_obs);

/// Two-sided p-value from the t approximation
/// t = rho * sqrt((n-2) / (1 - rho^2)) with n-2 degrees of freedom.
double spearman_t_approx_p(double rho, int n);

}  // namespace quizmine::stats
