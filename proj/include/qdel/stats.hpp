#pragma once

#include <vector>

namespace qdel::stats {

// One-sample Kolmogorov-Smirnov statistic against Uniform(lo, hi).
double ks_uniform_statistic(std::vector<double> samples, double lo, double hi);

// KS test at significance 0.01 (asymptotic critical value 1.628 / sqrt(n)).
bool ks_uniform_pass(const std::vector<double>& samples, double lo, double hi);

// Is `successes` within three standard deviations of trials * p?
bool binomial_within_3sigma(long long successes, long long trials, double p);

// Plug-in mutual information of a joint count table, in bits.
double mutual_information_plugin(const std::vector<std::vector<long long>>& joint);

}  // namespace qdel::stats
