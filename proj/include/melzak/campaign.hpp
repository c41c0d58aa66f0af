#pragma once

/**
 * @file campaign.hpp
 * @brief Seeded random instances and verification campaigns.
 *
 * The generator is std::mt19937_64, whose output sequence is fixed by the
 * standard. Bounded draws use our own rejection sampling rather than
 * std::uniform_int_distribution, whose mapping differs between standard
 * libraries, so a seed reproduces the same campaign on every platform.
 */

#include "identity.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace melzak {

class Rng {
    std::mt19937_64 engine_;

public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        if (hi < lo) throw std::invalid_argument("Rng::uniform: empty range");
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0) return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t draw;
        do draw = engine_();
        while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    NaturalIndex index(NaturalIndex hi) { return static_cast<NaturalIndex>(uniform(0, static_cast<std::int64_t>(hi))); }

    /// p/q with p in [-bound, bound], q in [1, bound].
    Rational rational(std::int64_t bound) {
        const auto p = uniform(-bound, bound);
        const auto q = uniform(1, bound);
        return Rational(static_cast<long>(p), static_cast<long>(q));
    }

    Polynomial polynomial(NaturalIndex degree, std::int64_t bound) {
        std::vector<Rational> cs;
        cs.reserve(degree + 1);
        for (NaturalIndex r = 0; r <= degree; ++r) cs.push_back(rational(bound));
        return Polynomial(std::move(cs));
    }
};

inline constexpr int max_rejection_attempts = 1000;
inline constexpr NaturalIndex default_index_cap = 64;

/// Whether x + k == 0 for some k in 0..n.
inline bool has_pole(const Rational& x, NaturalIndex n) {
    return x.is_integer() && x.sign() <= 0 && -x <= Rational(n);
}

/// Random Melzak instance with n <= max_n and deg f <= n + extra_degree.
inline MelzakInstance random_melzak_instance(Rng& rng, NaturalIndex max_n, std::int64_t bound,
                                             NaturalIndex extra_degree = 0) {
    for (int attempt = 0; attempt < max_rejection_attempts; ++attempt) {
        MelzakInstance inst;
        inst.n = rng.index(max_n);
        inst.f = rng.polynomial(rng.index(inst.n + extra_degree), bound);
        inst.x = rng.rational(bound);
        inst.y = rng.rational(bound);
        if (!has_pole(inst.x, inst.n)) return inst;
    }
    throw std::runtime_error("no pole-free Melzak instance after " + std::to_string(max_rejection_attempts) +
                             " attempts");
}

/// Random generalized instance with n <= max_n, j <= max_j, deg f <= n + j.
inline GeneralizedInstance random_generalized_instance(Rng& rng, NaturalIndex max_n, NaturalIndex max_j,
                                                       std::int64_t bound) {
    for (int attempt = 0; attempt < max_rejection_attempts; ++attempt) {
        const NaturalIndex n = rng.index(max_n);
        const NaturalIndex j = rng.index(max_j);
        std::vector<Rational> knots;
        for (NaturalIndex i = 0; i <= j; ++i) knots.push_back(rng.rational(bound));
        const Rational y = rng.rational(bound);
        const Polynomial f = rng.polynomial(rng.index(n + j), bound);

        bool ok = true;
        for (NaturalIndex a = 0; a < knots.size() && ok; ++a) {
            if (has_pole(knots[a], n)) ok = false;
            for (NaturalIndex b = a + 1; b < knots.size() && ok; ++b)
                if (knots[a] == knots[b]) ok = false;
        }
        if (ok) return {f, KnotSet(std::move(knots)), y, n};
    }
    throw std::runtime_error("no valid generalized instance after " + std::to_string(max_rejection_attempts) +
                             " attempts");
}

enum class CampaignMode { melzak, generalized, both };

struct CampaignConfig {
    std::uint64_t trials = 100;
    NaturalIndex max_n = 6;
    NaturalIndex max_j = 3;
    std::int64_t coefficient_bound = 9;
    std::uint64_t seed = 0;
    CampaignMode mode = CampaignMode::melzak;
    NaturalIndex index_cap = default_index_cap;
};

inline void validate(const CampaignConfig& c) {
    if (c.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (c.coefficient_bound < 1) throw std::invalid_argument("coefficient bound must be >= 1");
    if (c.max_n + (c.mode == CampaignMode::melzak ? 0 : c.max_j) > c.index_cap)
        throw std::invalid_argument("max_n + max_j exceeds the index cap " + std::to_string(c.index_cap));
}

inline constexpr std::size_t max_reported_failures = 10;

struct CampaignSummary {
    std::uint64_t total = 0;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::vector<IdentityReport> failures;  // first max_reported_failures, in trial order
    std::uint64_t instance_digest = fnv_offset;  // FNV-1a over every instance in trial order

    void record(IdentityReport r) {
        absorb(r.instance);
        ++total;
        if (r.holds) {
            ++passed;
            return;
        }
        ++failed;
        if (failures.size() < max_reported_failures) failures.push_back(std::move(r));
    }

private:
    static constexpr std::uint64_t fnv_offset = 14695981039346656037ULL;
    static constexpr std::uint64_t fnv_prime = 1099511628211ULL;

    void absorb(const std::string& text) {
        for (unsigned char c : text) {
            instance_digest ^= c;
            instance_digest *= fnv_prime;
        }
        instance_digest ^= 0xFF;  // field separator
        instance_digest *= fnv_prime;
    }

    void absorb(const std::variant<MelzakInstance, GeneralizedInstance>& instance) {
        if (const auto* m = std::get_if<MelzakInstance>(&instance)) {
            absorb(m->f.to_string());
            absorb(m->x.to_string());
            absorb(m->y.to_string());
            absorb(std::to_string(m->n));
        } else {
            const auto& g = std::get<GeneralizedInstance>(instance);
            absorb(g.f.to_string());
            absorb(g.knots.to_string());
            absorb(g.y.to_string());
            absorb(std::to_string(g.n));
        }
    }
};

/// Runs config.trials trials; in "both" mode each trial checks one
/// instance of each identity, drawn from the same stream.
inline CampaignSummary run_campaign(const CampaignConfig& config) {
    validate(config);
    Rng rng(config.seed);
    CampaignSummary summary;
    for (std::uint64_t t = 0; t < config.trials; ++t) {
        if (config.mode != CampaignMode::generalized)
            summary.record(verify_melzak(random_melzak_instance(rng, config.max_n, config.coefficient_bound)));
        if (config.mode != CampaignMode::melzak)
            summary.record(verify_generalized(
                random_generalized_instance(rng, config.max_n, config.max_j, config.coefficient_bound)));
    }
    return summary;
}

}  // namespace melzak
