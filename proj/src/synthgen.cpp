#include "citerank/synthgen.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "citerank/measures.hpp"

namespace citerank {

namespace synth_rng {

namespace {

// splitmix64 finalizer: full-avalanche mixing of one 64-bit word.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

std::uint64_t hash3(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    return mix(mix(mix(seed) ^ index) ^ stream);
}

double uniform01(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    // Top 53 bits -> [0, 1).
    return static_cast<double>(hash3(seed, index, stream) >> 11) * 0x1.0p-53;
}

double normal(std::uint64_t seed, std::uint64_t index, std::uint64_t stream) {
    // Box-Muller from two dedicated sub-streams; 1-u keeps the log finite.
    double u1 = uniform01(seed, index, stream * 2);
    double u2 = uniform01(seed, index, stream * 2 + 1);
    return std::sqrt(-2.0 * std::log(1.0 - u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
}

} // namespace synth_rng

namespace {

// Per-index draw streams; record i depends on nothing but (seed, i).
enum Stream : std::uint64_t {
    kNormal = 0,     // occupies sub-streams 0 and 1
    kZero = 2,
    kAssistant = 3,
    kSeniorSplit = 4,
    kProfile = 5,
};

void check_config(const SynthConfig& c) {
    if (c.n < 1) throw std::invalid_argument("synth: n must be >= 1");
    if (!(c.sigma > 0.0)) throw std::invalid_argument("synth: sigma must be > 0");
    if (c.zero_fraction < 0.0 || c.zero_fraction >= 1.0)
        throw std::invalid_argument("synth: zero_fraction must be in [0, 1)");
    if (c.assistant_fraction < 0.0 || c.assistant_fraction >= 1.0)
        throw std::invalid_argument("synth: assistant_fraction must be in [0, 1)");
    if (!(c.assistant_t10_scale > 0.0))
        throw std::invalid_argument("synth: assistant_t10_scale must be > 0");
}

std::string faculty_name(std::size_t i) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "faculty-%06zu", i + 1);
    return buf;
}

std::vector<FacultyRecord> generate_impl(const SynthConfig& config, bool parallel) {
    check_config(config);
    const auto n = static_cast<std::ptrdiff_t>(config.n);

    // Pass 1: latent t10 and rank per index.
    std::vector<long long> true_t10(config.n);
    std::vector<Rank> ranks(config.n);
#ifdef _OPENMP
#pragma omp parallel for if (parallel)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto idx = static_cast<std::uint64_t>(i);
        if (synth_rng::uniform01(config.seed, idx, kAssistant) < config.assistant_fraction)
            ranks[i] = Rank::Assistant;
        else
            // Roughly one associate per two full professors.
            ranks[i] = synth_rng::uniform01(config.seed, idx, kSeniorSplit) < 0.35
                           ? Rank::Associate
                           : Rank::Full;
        if (synth_rng::uniform01(config.seed, idx, kZero) < config.zero_fraction) {
            true_t10[i] = 0;
        } else {
            double value = std::exp(config.mu + config.sigma *
                                                    synth_rng::normal(config.seed, idx, kNormal));
            if (ranks[i] == Rank::Assistant) value *= config.assistant_t10_scale;
            true_t10[i] = std::llround(value);
        }
    }

    // Percentile pool for the profile bias: senior latent values, falling back
    // to the whole population when the draw produced no seniors.
    std::vector<long long> pool_values;
    for (std::ptrdiff_t i = 0; i < n; ++i)
        if (is_senior(ranks[i])) pool_values.push_back(true_t10[i]);
    if (pool_values.empty()) pool_values = true_t10;
    SeniorPopulation pool(std::move(pool_values));

    // Pass 2: profile flag rises with percentile; records without a profile
    // hide their t10, mirroring how unprofiled faculty carry no index.
    std::vector<FacultyRecord> out(config.n);
#ifdef _OPENMP
#pragma omp parallel for if (parallel)
#endif
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        auto idx = static_cast<std::uint64_t>(i);
        double pct = pool.percentile_of(true_t10[i]);
        double p = 1.0 / (1.0 + std::exp(-config.profile_logistic_slope *
                                         (pct / 100.0 - 0.5)));
        FacultyRecord rec;
        rec.university_id = "synthetic";
        rec.name = faculty_name(static_cast<std::size_t>(i));
        rec.rank = ranks[i];
        rec.has_profile = synth_rng::uniform01(config.seed, idx, kProfile) < p;
        if (rec.has_profile) rec.t10 = true_t10[i];
        out[i] = std::move(rec);
    }
    return out;
}

} // namespace

std::vector<FacultyRecord> generate(const SynthConfig& config) {
    return generate_impl(config, true);
}

std::vector<FacultyRecord> generate_serial(const SynthConfig& config) {
    return generate_impl(config, false);
}

} // namespace citerank
