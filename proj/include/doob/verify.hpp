#pragma once

// Executable perfectness certificates.
//
//   coverage    exact structural proof for kernel codes: every weight-1
//               syndrome distinct and nonzero, and the attainable-syndrome
//               subgroup has exactly ball-size elements.  Feasible for
//               codes far too large to enumerate.
//   exhaustive  radius-1 ball census over an entire small space.
//   sampled     seeded ball census around N random vertices.
//
// The exhaustive and sampled censuses are data-parallel over vertices and
// run under OpenMP; the *_serial variants are the reference implementations
// the tests compare against (OMP_NUM_THREADS controls the worker count).

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "doob/additive.hpp"
#include "doob/linear.hpp"
#include "doob/space.hpp"

namespace doob {

inline constexpr uint64_t kDefaultSpaceCap = uint64_t{1} << 20;

struct CoverageReport {
    uint64_t total_moves = 0;
    uint64_t distinct_syndromes = 0;
    uint64_t zero_syndrome_moves = 0;
    uint64_t subgroup_order = 0;
    uint64_t expected_ball = 0;
    bool pass() const {
        return distinct_syndromes == total_moves && zero_syndrome_moves == 0 &&
               subgroup_order == expected_ball;
    }
    std::string summary() const;
};

CoverageReport verify_coverage(const CheckMatrixZ& M);
CoverageReport verify_coverage(const CheckMatrixE& M);

struct PartitionReport {
    uint64_t space_size = 0;
    uint64_t codeword_count = 0;
    uint64_t uncovered = 0;    // vertices with no codeword in their ball
    uint64_t overcovered = 0;  // vertices with two or more
    int ball = 0;
    bool pass() const {
        return uncovered == 0 && overcovered == 0 &&
               codeword_count * static_cast<uint64_t>(ball) == space_size;
    }
    std::string summary() const;
};

using MixedPredicate = std::function<bool(const MixedVertex&)>;

PartitionReport verify_exhaustive(const MixedPredicate& member, const MixedAmbient& ambient,
                                  uint64_t cap = kDefaultSpaceCap);
PartitionReport verify_exhaustive_serial(const MixedPredicate& member, const MixedAmbient& ambient,
                                         uint64_t cap = kDefaultSpaceCap);

struct SampleFailure {
    uint64_t vertex_index = 0;
    int census = 0;
};

struct SampleReport {
    uint64_t samples = 0;
    uint64_t seed = 0;
    uint64_t failure_count = 0;
    std::vector<SampleFailure> failures;  // first kMaxRecordedFailures, by vertex index
    bool pass() const { return failure_count == 0; }
    std::string summary() const;
    static constexpr std::size_t kMaxRecordedFailures = 64;
};

SampleReport verify_sampled(const MixedPredicate& member, const MixedAmbient& ambient,
                            uint64_t samples, uint64_t seed);
SampleReport verify_sampled_serial(const MixedPredicate& member, const MixedAmbient& ambient,
                                   uint64_t samples, uint64_t seed);

}  // namespace doob
