#pragma once

#include "polya/tree.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace polya {

using Rng = std::mt19937_64;

/// Uniform double in [0, 1) from the top 53 bits.
double uniform01(Rng& rng);
/// Uniform integer in [0, k), k >= 1, by rejection (same stream on every
/// standard library, unlike std::uniform_int_distribution).
std::uint64_t uniform_below(Rng& rng, std::uint64_t k);

std::uint64_t splitmix64(std::uint64_t x);
/// Seed of sample i: splitmix64(master + (i + 1) * 0x9E3779B97F4A7C15).
std::uint64_t sample_seed(std::uint64_t master, std::uint64_t i);

/// Tree with isomorphic subtrees shared. Node ids are assigned so that two
/// subtrees of the same SampledTree are isomorphic iff their ids are equal.
struct SampledTree {
    struct Node {
        std::uint32_t size = 1;
        std::vector<std::pair<std::uint32_t, std::uint32_t>> classes;  ///< (child id, multiplicity)
    };
    std::vector<Node> nodes;
    std::uint32_t root = 0;

    std::size_t size() const { return nodes.empty() ? 0 : nodes[root].size; }
    TreePtr to_canonical() const;
    static SampledTree from_canonical(const CanonicalTree& t);
};

/// Exact uniform generator for Polya trees of size <= n_max (recursive
/// method on the t_n recurrence). Weights are long double t_k rho^k.
class PolyaTreeSampler {
public:
    explicit PolyaTreeSampler(std::size_t n_max);

    std::size_t max_size() const { return n_max_; }
    SampledTree sample(std::size_t n, Rng& rng) const;

private:
    std::size_t n_max_;
    std::vector<long double> u_;   ///< t_k x^k
    std::vector<long double> xp_;  ///< x^k
    std::vector<std::vector<std::uint32_t>> divisors_;
};

/// Uniform random Polya tree of size n; builds a sampler on each call.
TreePtr sample_polya_tree(std::size_t n, Rng& rng);

struct DecompositionSample {
    std::size_t n = 0;
    std::size_t c_size = 0;
    std::size_t l_max = 0;
    std::size_t y_count = 0;
    std::map<std::size_t, std::size_t> forest_size_histogram;
    std::uint64_t seed = 0;
};

/// Draws a uniform automorphism of T class by class and reduces it to the
/// fixed-point statistics. The seed field is left at 0.
DecompositionSample sample_decomposition(const SampledTree& t, Rng& rng);
DecompositionSample sample_decomposition(const CanonicalTree& t, Rng& rng);

struct SamplerBudget {
    std::size_t max_n = 10000;
    std::size_t max_samples = 100000;
};

struct MomentEstimate {
    double mean = 0;
    double variance = 0;  ///< unbiased
    double mean_half_width = 0;  ///< 1.96 sd / sqrt(samples)
};

struct StatsReport {
    std::size_t n = 0;
    std::size_t num_samples = 0;
    std::uint64_t master_seed = 0;
    std::string seed_rule;
    std::vector<std::uint64_t> seeds;
    MomentEstimate c_size, l_max, y_count;
    /// P(forest size = m) over all C-tree nodes of all samples.
    std::vector<double> forest_size_distribution;
    std::vector<double> forest_size_half_width;
    std::map<std::size_t, std::size_t> l_max_counts;
    std::size_t threads_used = 1;
};

/// threads = 0 picks the hardware concurrency. Identical output for any
/// thread count.
StatsReport run_experiment(std::size_t n, std::size_t samples, std::uint64_t master_seed,
                           std::size_t threads = 0, const SamplerBudget& budget = {});

struct LmaxRow {
    std::size_t n = 0;
    std::size_t samples = 0;
    double interval_lo = 0, interval_hi = 0;
    double in_interval_fraction = 0;
    double mean_l_max = 0;
    double mean_over_log_n = 0;
    double location = 0;          ///< -2 log n / log rho
    double predicted_mean = 0;    ///< location - 3 log log n / log rho, as stated
    double predicted_mean_corrected = 0;  ///< location + 3 log log n / log rho
    double exact_mean = -1;       ///< from the exact cdf when n <= 2000, else -1
};

struct LmaxReport {
    double s = 0;
    std::uint64_t master_seed = 0;
    double growth_constant = 0;  ///< 2 / |log rho|
    std::vector<LmaxRow> rows;
    bool fraction_nondecreasing = false;
};

LmaxReport lmax_check(const std::vector<std::size_t>& n_values, std::size_t samples, double s,
                      std::uint64_t master_seed, std::size_t threads = 0,
                      const SamplerBudget& budget = {});

struct ChiSquareResult {
    double statistic = 0;
    std::size_t dof = 0;
    double p_value = 0;
    bool passed = false;  ///< p_value >= alpha
};

/// Goodness of fit of observed counts against expected probabilities.
ChiSquareResult chi_square_test(const std::vector<std::size_t>& observed,
                                const std::vector<double>& probabilities, double alpha = 0.01);

/// Draws `samples` trees of size n, tallies them against the oracle list and
/// tests uniformity. n <= 10.
ChiSquareResult uniformity_test(std::size_t n, std::size_t samples, std::uint64_t master_seed,
                                double alpha = 0.01);

}  // namespace polya
