#include "qdel/stats.hpp"

#include <algorithm>
#include <cmath>

#include "qdel/errors.hpp"

namespace qdel::stats {

double ks_uniform_statistic(std::vector<double> samples, double lo, double hi) {
    if (samples.empty()) throw BadArgument("KS statistic of an empty sample");
    if (!(hi > lo)) throw BadArgument("KS statistic needs hi > lo");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double cdf = (samples[i] - lo) / (hi - lo);
        const double lo_step = static_cast<double>(i) / n;
        const double hi_step = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::abs(cdf - lo_step), std::abs(hi_step - cdf)));
    }
    return d;
}

bool ks_uniform_pass(const std::vector<double>& samples, double lo, double hi) {
    const double d = ks_uniform_statistic(samples, lo, hi);
    const double crit = 1.628 / std::sqrt(static_cast<double>(samples.size()));
    return d <= crit;
}

bool binomial_within_3sigma(long long successes, long long trials, double p) {
    if (trials <= 0) throw BadArgument("binomial check needs trials > 0");
    const double mean = static_cast<double>(trials) * p;
    const double sigma = std::sqrt(static_cast<double>(trials) * p * (1.0 - p));
    return std::abs(static_cast<double>(successes) - mean) <= 3.0 * sigma;
}

double mutual_information_plugin(const std::vector<std::vector<long long>>& joint) {
    if (joint.empty() || joint[0].empty()) throw BadArgument("empty joint table");
    const std::size_t rows = joint.size();
    const std::size_t cols = joint[0].size();
    double total = 0.0;
    std::vector<double> px(rows, 0.0), py(cols, 0.0);
    for (std::size_t x = 0; x < rows; ++x) {
        if (joint[x].size() != cols) throw BadArgument("ragged joint table");
        for (std::size_t y = 0; y < cols; ++y) {
            px[x] += static_cast<double>(joint[x][y]);
            py[y] += static_cast<double>(joint[x][y]);
            total += static_cast<double>(joint[x][y]);
        }
    }
    if (total <= 0.0) throw BadArgument("joint table has no mass");
    double mi = 0.0;
    for (std::size_t x = 0; x < rows; ++x)
        for (std::size_t y = 0; y < cols; ++y) {
            const double pxy = static_cast<double>(joint[x][y]) / total;
            if (pxy <= 0.0) continue;
            mi += pxy * std::log2(pxy / ((px[x] / total) * (py[y] / total)));
        }
    return mi;
}

}  // namespace qdel::stats
