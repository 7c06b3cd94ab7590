#include "polya/sampler.hpp"

#include "polya/asymptotics.hpp"
#include "polya/error.hpp"
#include "polya/numeric_series.hpp"
#include "polya/oracle.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>
#include <unordered_map>

namespace polya {

namespace {

// Scaling point for the weights; any x > 0 is exact in principle, x near rho
// keeps t_k x^k of order k^(-3/2).
constexpr long double kScale = 0.3383218568992076951L;
constexpr double kRho = 0.3383218568992077;
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

using ClassList = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

struct ClassListHash {
    std::size_t operator()(const ClassList& v) const {
        std::uint64_t h = 0x84222325cbf29ce4ULL;
        for (const auto& [id, m] : v) {
            h ^= (static_cast<std::uint64_t>(id) << 20) ^ m;
            h = splitmix64(h);
        }
        return static_cast<std::size_t>(h);
    }
};

class Interner {
public:
    explicit Interner(SampledTree& out) : out_(out) {}

    std::uint32_t intern(ClassList classes) {
        std::sort(classes.begin(), classes.end());
        ClassList merged;
        for (const auto& c : classes) {
            if (!merged.empty() && merged.back().first == c.first)
                merged.back().second += c.second;
            else
                merged.push_back(c);
        }
        auto it = table_.find(merged);
        if (it != table_.end()) return it->second;
        SampledTree::Node node;
        for (const auto& [id, m] : merged) node.size += m * out_.nodes[id].size;
        node.classes = merged;
        const auto id = static_cast<std::uint32_t>(out_.nodes.size());
        out_.nodes.push_back(std::move(node));
        table_.emplace(std::move(merged), id);
        return id;
    }

private:
    SampledTree& out_;
    std::unordered_map<ClassList, std::uint32_t, ClassListHash> table_;
};

}  // namespace

double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t k) {
    if (k <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % k);
    for (;;) {
        const std::uint64_t r = rng();
        if (r < limit) return r % k;
    }
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += kGolden;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t sample_seed(std::uint64_t master, std::uint64_t i) {
    return splitmix64(master + (i + 1) * kGolden);
}

TreePtr SampledTree::to_canonical() const {
    if (nodes.empty()) throw_invalid("empty sampled tree");
    // Ids are topologically ordered: children are interned before parents.
    std::vector<TreePtr> built(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        std::vector<ChildClass> cls;
        for (const auto& [id, m] : nodes[i].classes) cls.push_back({built[id], m});
        built[i] = CanonicalTree::from_classes(std::move(cls));
    }
    return built[root];
}

SampledTree SampledTree::from_canonical(const CanonicalTree& t) {
    SampledTree out;
    Interner in(out);
    std::unordered_map<const CanonicalTree*, std::uint32_t> done;
    std::vector<std::pair<const CanonicalTree*, bool>> stack{{&t, false}};
    while (!stack.empty()) {
        auto [node, expanded] = stack.back();
        stack.pop_back();
        if (done.count(node)) continue;
        if (!expanded) {
            stack.push_back({node, true});
            for (const auto& c : node->classes())
                if (!done.count(c.tree.get())) stack.push_back({c.tree.get(), false});
            continue;
        }
        ClassList cls;
        for (const auto& c : node->classes())
            cls.push_back({done.at(c.tree.get()), static_cast<std::uint32_t>(c.multiplicity)});
        done[node] = in.intern(std::move(cls));
    }
    out.root = done.at(&t);
    return out;
}

PolyaTreeSampler::PolyaTreeSampler(std::size_t n_max) : n_max_(n_max) {
    if (n_max < 1) throw_invalid("sampler needs n_max >= 1");
    if (n_max > 1000000) throw_limit("sampler table too large");
    u_ = scaled_polya_counts(n_max, kScale);
    xp_.assign(n_max + 1, 1.0L);
    for (std::size_t k = 1; k <= n_max; ++k) xp_[k] = xp_[k - 1] * kScale;
    divisors_.resize(n_max + 1);
    for (std::size_t d = 1; d <= n_max; ++d)
        for (std::size_t m = d; m <= n_max; m += d) divisors_[m].push_back(static_cast<std::uint32_t>(d));
}

SampledTree PolyaTreeSampler::sample(std::size_t n, Rng& rng) const {
    if (n < 1) throw_invalid("tree size must be >= 1");
    if (n > n_max_) throw_limit("tree size exceeds the precomputed table");

    SampledTree out;
    out.nodes.reserve(n);
    Interner in(out);

    // A tree of size m is a tree of size r = m - j d with d copies of a
    // size-j tree added at its root, chosen with weight j t_j t_r.
    // Scaled: j u_j u_r x^(j (d - 1)), total (m - 1) u_m.
    struct Frame {
        std::size_t remaining;
        std::uint32_t pending_mult;
        ClassList children;
    };
    std::vector<Frame> stack;
    stack.push_back({n, 0, {}});
    std::uint32_t result = 0;
    bool have_result = false;

    while (!stack.empty()) {
        Frame& f = stack.back();
        if (have_result) {
            f.children.push_back({result, f.pending_mult});
            have_result = false;
        }
        const std::size_t m = f.remaining;
        if (m == 1) {
            result = in.intern(std::move(f.children));
            have_result = true;
            stack.pop_back();
            continue;
        }
        const long double target = static_cast<long double>(uniform01(rng)) *
                                   static_cast<long double>(m - 1) * u_[m];
        long double acc = 0;
        std::size_t pick_j = 1, pick_d = m - 1;
        bool found = false;
        auto consider = [&](std::size_t jd, std::size_t r) {
            for (std::uint32_t d : divisors_[jd]) {
                const std::size_t j = jd / d;
                acc += static_cast<long double>(j) * u_[j] * u_[r] * xp_[j * (d - 1)];
                pick_j = j;
                pick_d = d;
                if (acc > target) return true;
            }
            return false;
        };
        // Both ends carry most of the mass: scan r = k and r = m - k together.
        for (std::size_t k = 1; 2 * k <= m && !found; ++k) {
            found = consider(m - k, k);
            if (!found && m - k != k) found = consider(k, m - k);
        }
        // Rounding can leave target just above the scanned sum; the last pair
        // seen is then kept.
        f.remaining = m - pick_j * pick_d;
        f.pending_mult = static_cast<std::uint32_t>(pick_d);
        stack.push_back({pick_j, 0, {}});
    }
    out.root = result;
    return out;
}

TreePtr sample_polya_tree(std::size_t n, Rng& rng) {
    PolyaTreeSampler s(n);
    return s.sample(n, rng).to_canonical();
}

DecompositionSample sample_decomposition(const SampledTree& t, Rng& rng) {
    DecompositionSample out;
    out.n = t.size();
    std::vector<std::uint32_t> fixed{t.root};
    std::vector<std::uint32_t> perm;
    while (!fixed.empty()) {
        const auto& node = t.nodes[fixed.back()];
        fixed.pop_back();
        ++out.c_size;
        std::size_t forest = 0;
        for (const auto& [id, m] : node.classes) {
            std::size_t fixed_copies = m;
            if (m > 1) {
                perm.resize(m);
                std::iota(perm.begin(), perm.end(), 0u);
                for (std::uint32_t i = m - 1; i > 0; --i)
                    std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
                fixed_copies = 0;
                for (std::uint32_t i = 0; i < m; ++i)
                    if (perm[i] == i) ++fixed_copies;
            }
            const std::size_t moved = m - fixed_copies;
            forest += moved * t.nodes[id].size;
            out.y_count += moved;
            for (std::size_t k = 0; k < fixed_copies; ++k) fixed.push_back(id);
        }
        ++out.forest_size_histogram[forest];
        out.l_max = std::max(out.l_max, forest);
    }
    return out;
}

DecompositionSample sample_decomposition(const CanonicalTree& t, Rng& rng) {
    return sample_decomposition(SampledTree::from_canonical(t), rng);
}

namespace {

struct Accumulator {
    std::uint64_t c1 = 0, c2 = 0, l1 = 0, l2 = 0, y1 = 0, y2 = 0;
    std::vector<std::uint64_t> forest;  // indexed by forest size
    std::map<std::size_t, std::size_t> lmax;

    void add(const DecompositionSample& s) {
        c1 += s.c_size;
        c2 += static_cast<std::uint64_t>(s.c_size) * s.c_size;
        l1 += s.l_max;
        l2 += static_cast<std::uint64_t>(s.l_max) * s.l_max;
        y1 += s.y_count;
        y2 += static_cast<std::uint64_t>(s.y_count) * s.y_count;
        for (const auto& [size, count] : s.forest_size_histogram) {
            if (forest.size() <= size) forest.resize(size + 1, 0);
            forest[size] += count;
        }
        ++lmax[s.l_max];
    }

    void merge(const Accumulator& o) {
        c1 += o.c1; c2 += o.c2; l1 += o.l1; l2 += o.l2; y1 += o.y1; y2 += o.y2;
        if (forest.size() < o.forest.size()) forest.resize(o.forest.size(), 0);
        for (std::size_t i = 0; i < o.forest.size(); ++i) forest[i] += o.forest[i];
        for (const auto& [k, v] : o.lmax) lmax[k] += v;
    }
};

MomentEstimate estimate(std::uint64_t s1, std::uint64_t s2, std::size_t count) {
    MomentEstimate e;
    const long double N = static_cast<long double>(count);
    const long double mean = static_cast<long double>(s1) / N;
    e.mean = static_cast<double>(mean);
    if (count > 1) {
        // sum (x - mean)^2 = s2 - s1^2 / N, with the exact integer parts first
        const long double ss = static_cast<long double>(s2) - static_cast<long double>(s1) * mean;
        e.variance = static_cast<double>(std::max(0.0L, ss / (N - 1)));
        e.mean_half_width = 1.96 * std::sqrt(e.variance / static_cast<double>(count));
    }
    return e;
}

std::size_t resolve_threads(std::size_t threads, std::size_t samples) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    return std::max<std::size_t>(1, std::min(threads, samples));
}

}  // namespace

StatsReport run_experiment(std::size_t n, std::size_t samples, std::uint64_t master_seed,
                           std::size_t threads, const SamplerBudget& budget) {
    if (n < 1) throw_invalid("n must be >= 1");
    if (samples < 1) throw_invalid("samples must be >= 1");
    if (n > budget.max_n) throw_limit("n exceeds the sampler budget of " + std::to_string(budget.max_n));
    if (samples > budget.max_samples)
        throw_limit("samples exceed the sampler budget of " + std::to_string(budget.max_samples));

    const PolyaTreeSampler sampler(n);
    threads = resolve_threads(threads, samples);
    std::vector<Accumulator> parts(threads);
    std::vector<std::exception_ptr> errors(threads);

    auto worker = [&](std::size_t w) {
        try {
            for (std::size_t i = w; i < samples; i += threads) {
                Rng rng(sample_seed(master_seed, i));
                const SampledTree t = sampler.sample(n, rng);
                parts[w].add(sample_decomposition(t, rng));
            }
        } catch (...) {
            errors[w] = std::current_exception();
        }
    };
    if (threads == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < threads; ++w) pool.emplace_back(worker, w);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Accumulator total;
    for (const auto& p : parts) total.merge(p);

    StatsReport r;
    r.n = n;
    r.num_samples = samples;
    r.master_seed = master_seed;
    r.seed_rule = "seed_i = splitmix64(master_seed + (i + 1) * 0x9E3779B97F4A7C15), std::mt19937_64";
    r.seeds.reserve(samples);
    for (std::size_t i = 0; i < samples; ++i) r.seeds.push_back(sample_seed(master_seed, i));
    r.c_size = estimate(total.c1, total.c2, samples);
    r.l_max = estimate(total.l1, total.l2, samples);
    r.y_count = estimate(total.y1, total.y2, samples);
    const double nodes = static_cast<double>(total.c1);
    for (std::uint64_t count : total.forest) {
        const double p = static_cast<double>(count) / nodes;
        r.forest_size_distribution.push_back(p);
        r.forest_size_half_width.push_back(1.96 * std::sqrt(p * (1 - p) / nodes));
    }
    r.l_max_counts = std::move(total.lmax);
    r.threads_used = threads;
    return r;
}

LmaxReport lmax_check(const std::vector<std::size_t>& n_values, std::size_t samples, double s,
                      std::uint64_t master_seed, std::size_t threads, const SamplerBudget& budget) {
    if (!(s > 0 && s < 1)) throw_invalid("s must lie in (0, 1)");
    if (n_values.empty()) throw_invalid("no n values given");
    LmaxReport rep;
    rep.s = s;
    rep.master_seed = master_seed;
    const double log_rho = std::log(kRho);
    rep.growth_constant = 2.0 / std::fabs(log_rho);
    for (std::size_t n : n_values) {
        if (n < 2) throw_invalid("lmax_check needs n >= 2");
        const StatsReport st = run_experiment(n, samples, master_seed, threads, budget);
        LmaxRow row;
        row.n = n;
        row.samples = samples;
        const double ln = std::log(static_cast<double>(n));
        const double eps = std::pow(ln, -s);
        row.location = -2.0 * ln / log_rho;
        row.interval_lo = (1 - eps) * row.location;
        row.interval_hi = (1 + eps) * row.location;
        row.predicted_mean = row.location - 3.0 * std::log(ln) / log_rho;
        // Solving n m^(-3/2) rho^(m/2) = 1 for m puts the log log term below
        // the location, not above it.
        row.predicted_mean_corrected = row.location + 3.0 * std::log(ln) / log_rho;
        std::size_t inside = 0;
        for (const auto& [l, count] : st.l_max_counts) {
            const double v = static_cast<double>(l);
            if (v >= row.interval_lo && v <= row.interval_hi) inside += count;
        }
        row.in_interval_fraction = static_cast<double>(inside) / static_cast<double>(samples);
        row.mean_l_max = st.l_max.mean;
        row.mean_over_log_n = st.l_max.mean / ln;
        if (n <= 2000) {
            const auto m_max = static_cast<std::size_t>(4 * row.predicted_mean) + 20;
            const std::vector<double> cdf = lmax_cdf(n, m_max);
            double mean = 0;
            for (double c : cdf) mean += 1 - c;
            row.exact_mean = mean;
        }
        rep.rows.push_back(row);
    }
    rep.fraction_nondecreasing = true;
    for (std::size_t i = 1; i < rep.rows.size(); ++i)
        if (rep.rows[i].in_interval_fraction < rep.rows[i - 1].in_interval_fraction)
            rep.fraction_nondecreasing = false;
    return rep;
}

ChiSquareResult chi_square_test(const std::vector<std::size_t>& observed,
                                const std::vector<double>& probabilities, double alpha) {
    if (observed.size() != probabilities.size() || observed.size() < 2)
        throw_invalid("chi-square needs matching observed/expected vectors of length >= 2");
    const double total = static_cast<double>(std::accumulate(observed.begin(), observed.end(), std::size_t{0}));
    if (total <= 0) throw_invalid("chi-square needs at least one observation");
    ChiSquareResult r;
    std::size_t cells = 0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = probabilities[i] * total;
        if (e <= 0) {
            if (observed[i] != 0) {
                r.statistic = std::numeric_limits<double>::infinity();
                r.dof = observed.size() - 1;
                return r;
            }
            continue;
        }
        const double diff = static_cast<double>(observed[i]) - e;
        r.statistic += diff * diff / e;
        ++cells;
    }
    if (cells < 2) throw_invalid("chi-square needs two cells with positive probability");
    r.dof = cells - 1;
    const boost::math::chi_squared dist(static_cast<double>(r.dof));
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    r.passed = r.p_value >= alpha;
    return r;
}

ChiSquareResult uniformity_test(std::size_t n, std::size_t samples, std::uint64_t master_seed,
                                double alpha) {
    if (n < 2 || n > 10) throw_invalid("uniformity test supports 2 <= n <= 10");
    const std::vector<TreePtr> all = enumerate_trees(n);
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < all.size(); ++i) index[all[i]->encoding()] = i;
    const PolyaTreeSampler sampler(n);
    std::vector<std::size_t> counts(all.size(), 0);
    for (std::size_t i = 0; i < samples; ++i) {
        Rng rng(sample_seed(master_seed, i));
        const TreePtr t = sampler.sample(n, rng).to_canonical();
        ++counts.at(index.at(t->encoding()));
    }
    return chi_square_test(counts, std::vector<double>(all.size(), 1.0 / static_cast<double>(all.size())), alpha);
}

}  // namespace polya
