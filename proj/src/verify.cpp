#include "doob/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace doob {

namespace {

std::string verdict(bool pass) { return pass ? "pass" : "FAIL"; }

// Additive closure of a generator set inside Z4^rows.
uint64_t subgroup_order(const std::vector<SyndromeZ>& generators, int rows) {
    std::unordered_set<uint64_t> seen;
    std::vector<SyndromeZ> frontier;
    seen.insert(0);
    frontier.push_back(SyndromeZ(static_cast<std::size_t>(rows), 0));
    while (!frontier.empty()) {
        std::vector<SyndromeZ> next;
        for (const SyndromeZ& s : frontier)
            for (const SyndromeZ& g : generators) {
                SyndromeZ t(s.size());
                for (std::size_t i = 0; i < s.size(); ++i)
                    t[i] = static_cast<uint8_t>((s[i] + g[i]) & 3u);
                if (seen.insert(pack_syndrome(t)).second) next.push_back(std::move(t));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

}  // namespace

std::string CoverageReport::summary() const {
    return "coverage: " + verdict(pass()) + " (moves=" + std::to_string(total_moves) +
           ", distinct=" + std::to_string(distinct_syndromes) +
           ", zero=" + std::to_string(zero_syndrome_moves) +
           ", subgroup=" + std::to_string(subgroup_order) +
           ", ball=" + std::to_string(expected_ball) + ")";
}

CoverageReport verify_coverage(const CheckMatrixZ& M) {
    if (M.rows <= 0 || M.rows > 32)
        throw std::invalid_argument("verify_coverage: 1..32 rows supported");
    if (M.d_star.size() != 2 * static_cast<std::size_t>(M.m) ||
        M.d_prime.size() != 2 * static_cast<std::size_t>(M.n2) ||
        M.d_dprime.size() != static_cast<std::size_t>(M.n4))
        throw std::invalid_argument("verify_coverage: column group sizes disagree with (m,n',n'')");

    CoverageReport rep;
    rep.expected_ball = static_cast<uint64_t>(ball_size(M.m, M.n2 + M.n4));

    std::vector<uint64_t> keys;
    const auto moves = enumerate_weight_one_mixed(M.m, M.n2, M.n4);
    keys.reserve(moves.size());
    for (const auto& [mv, vtx] : moves) {
        (void)vtx;
        keys.push_back(pack_syndrome(move_syndrome_z(M, mv)));
    }
    rep.total_moves = keys.size();
    rep.zero_syndrome_moves = static_cast<uint64_t>(std::count(keys.begin(), keys.end(), 0u));
    std::sort(keys.begin(), keys.end());
    rep.distinct_syndromes =
        static_cast<uint64_t>(std::unique(keys.begin(), keys.end()) - keys.begin());

    // attainable syndromes: columns of D* and D'' act with Z4 coefficients,
    // columns of D' only through their doubles
    std::vector<SyndromeZ> gens;
    gens.reserve(M.d_star.size() + M.d_prime.size() + M.d_dprime.size());
    for (const auto& c : M.d_star) gens.push_back(c);
    for (const auto& c : M.d_prime) {
        SyndromeZ g(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) g[i] = static_cast<uint8_t>((2 * c[i]) & 3u);
        gens.push_back(std::move(g));
    }
    for (const auto& c : M.d_dprime) gens.push_back(c);
    rep.subgroup_order = subgroup_order(gens, M.rows);
    return rep;
}

CoverageReport verify_coverage(const CheckMatrixE& M) {
    return verify_coverage(expand_matrix(M));
}

std::string PartitionReport::summary() const {
    return "exhaustive: " + verdict(pass()) + " (space=" + std::to_string(space_size) +
           ", codewords=" + std::to_string(codeword_count) +
           ", uncovered=" + std::to_string(uncovered) +
           ", overcovered=" + std::to_string(overcovered) + ")";
}

namespace {

PartitionReport run_exhaustive(const MixedPredicate& member, const MixedAmbient& ambient,
                               uint64_t cap, bool parallel) {
    const uint64_t n = ambient.size();
    if (n > cap) throw std::invalid_argument("verify_exhaustive: space exceeds the cap");
    PartitionReport rep;
    rep.space_size = n;
    rep.ball = ambient.ball();

    std::vector<uint8_t> members(n, 0);
    uint64_t codewords = 0, uncovered = 0, overcovered = 0;
    const auto sn = static_cast<int64_t>(n);

    if (parallel) {
#pragma omp parallel
        {
            MixedVertex scratch;
#pragma omp for schedule(static) reduction(+ : codewords)
            for (int64_t i = 0; i < sn; ++i) {
                ambient.vertex_into(static_cast<uint64_t>(i), scratch);
                const bool in = member(scratch);
                members[static_cast<uint64_t>(i)] = in;
                codewords += in;
            }
        }
#pragma omp parallel
        {
            std::vector<uint64_t> ball;
#pragma omp for schedule(static) reduction(+ : uncovered, overcovered)
            for (int64_t i = 0; i < sn; ++i) {
                ambient.ball_indices(static_cast<uint64_t>(i), ball);
                int census = 0;
                for (uint64_t b : ball) census += members[b];
                uncovered += census == 0;
                overcovered += census >= 2;
            }
        }
    } else {
        MixedVertex scratch;
        for (int64_t i = 0; i < sn; ++i) {
            ambient.vertex_into(static_cast<uint64_t>(i), scratch);
            const bool in = member(scratch);
            members[static_cast<uint64_t>(i)] = in;
            codewords += in;
        }
        std::vector<uint64_t> ball;
        for (int64_t i = 0; i < sn; ++i) {
            ambient.ball_indices(static_cast<uint64_t>(i), ball);
            int census = 0;
            for (uint64_t b : ball) census += members[b];
            uncovered += census == 0;
            overcovered += census >= 2;
        }
    }
    rep.codeword_count = codewords;
    rep.uncovered = uncovered;
    rep.overcovered = overcovered;
    return rep;
}

}  // namespace

PartitionReport verify_exhaustive(const MixedPredicate& member, const MixedAmbient& ambient,
                                  uint64_t cap) {
    return run_exhaustive(member, ambient, cap, true);
}

PartitionReport verify_exhaustive_serial(const MixedPredicate& member, const MixedAmbient& ambient,
                                         uint64_t cap) {
    return run_exhaustive(member, ambient, cap, false);
}

std::string SampleReport::summary() const {
    return "sampled: " + verdict(pass()) + " (samples=" + std::to_string(samples) +
           ", seed=" + std::to_string(seed) + ", generator=splitmix64" +
           ", failures=" + std::to_string(failure_count) + ")";
}

namespace {

SampleReport run_sampled(const MixedPredicate& member, const MixedAmbient& ambient,
                         uint64_t samples, uint64_t seed, bool parallel) {
    SampleReport rep;
    rep.samples = samples;
    rep.seed = seed;
    const auto sn = static_cast<int64_t>(samples);
    uint64_t failure_count = 0;
    std::vector<SampleFailure> failures;

    if (parallel) {
#pragma omp parallel
        {
            std::vector<uint64_t> ball;
            MixedVertex scratch;
#pragma omp for schedule(static) reduction(+ : failure_count)
            for (int64_t i = 0; i < sn; ++i) {
                const MixedVertex v = ambient.random_vertex(seed, static_cast<uint64_t>(i));
                const uint64_t idx = ambient.index(v);
                ambient.ball_indices(idx, ball);
                int census = 0;
                for (uint64_t b : ball) {
                    ambient.vertex_into(b, scratch);
                    census += member(scratch);
                }
                if (census != 1) {
                    ++failure_count;
#pragma omp critical(doob_sample_failures)
                    failures.push_back({idx, census});
                }
            }
        }
    } else {
        std::vector<uint64_t> ball;
        MixedVertex scratch;
        for (int64_t i = 0; i < sn; ++i) {
            const MixedVertex v = ambient.random_vertex(seed, static_cast<uint64_t>(i));
            const uint64_t idx = ambient.index(v);
            ambient.ball_indices(idx, ball);
            int census = 0;
            for (uint64_t b : ball) {
                ambient.vertex_into(b, scratch);
                census += member(scratch);
            }
            if (census != 1) {
                ++failure_count;
                failures.push_back({idx, census});
            }
        }
    }
    rep.failure_count = failure_count;
    std::sort(failures.begin(), failures.end(),
              [](const SampleFailure& a, const SampleFailure& b) {
                  return a.vertex_index < b.vertex_index;
              });
    if (failures.size() > SampleReport::kMaxRecordedFailures)
        failures.resize(SampleReport::kMaxRecordedFailures);
    rep.failures = std::move(failures);
    return rep;
}

}  // namespace

SampleReport verify_sampled(const MixedPredicate& member, const MixedAmbient& ambient,
                            uint64_t samples, uint64_t seed) {
    return run_sampled(member, ambient, samples, seed, true);
}

SampleReport verify_sampled_serial(const MixedPredicate& member, const MixedAmbient& ambient,
                                   uint64_t samples, uint64_t seed) {
    return run_sampled(member, ambient, samples, seed, false);
}

}  // namespace doob
