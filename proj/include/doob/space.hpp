#pragma once

// Vertices of the Doob graph D(m,n) = Sh^m x K4^n in its two coordinate
// systems, the graph metric, weights, and weight-1 enumeration.
//
// The Shrikhande graph Sh is the Cayley graph of E4^+ with connecting set
// the unit-image set E (diameter 2); K4 is the Cayley graph of E2^+ with
// connecting set the nonzero elements.

#include <cstdint>
#include <utility>
#include <vector>

#include "doob/ring.hpp"

namespace doob {

struct DoobVertex {
    std::vector<GR16Elem> sh;  // E4 coordinates
    std::vector<GF4Elem> k4;   // E2 coordinates
    bool operator==(const DoobVertex&) const = default;
};

// A vertex of Z4^2m x Z2^2n' x Z4^n'' carrying the D(m, n'+n'')-metric.
struct MixedVertex {
    std::vector<Z4Pair> z4_pairs;
    std::vector<Z2Pair> z2_pairs;
    std::vector<uint8_t> z4_singles;
    bool operator==(const MixedVertex&) const = default;
};

int sh_dist(GR16Elem x, GR16Elem y);  // 0, 1, or 2
int k4_dist(GF4Elem x, GF4Elem y);    // 0 or 1

int doob_dist(const DoobVertex& u, const DoobVertex& v);
int mixed_dist(const MixedVertex& u, const MixedVertex& v);

int weight(const DoobVertex& v);
int mixed_weight(const MixedVertex& v);

constexpr long long ball_size(long long m, long long n) { return 6 * m + 3 * n + 1; }

struct WeightOneMove {
    enum class Kind : uint8_t { ShCoord, K4Coord, Z4Single };
    Kind kind{};
    int index = 0;
    uint8_t value = 0;  // GR16 code / GF4 code / residue in {1,2,3}
    bool operator==(const WeightOneMove&) const = default;
};

// All 6m+3n weight-1 vertices, paired with the move that produces each:
// Sh coordinates first (unit order per gr16::units), then K coordinates
// (values 1, w, w^2), then Z4 singles (1, 2, 3).
std::vector<std::pair<WeightOneMove, DoobVertex>> enumerate_weight_one(int m, int n);
std::vector<std::pair<WeightOneMove, MixedVertex>> enumerate_weight_one_mixed(int m, int n2, int n4);

DoobVertex apply_move(DoobVertex v, const WeightOneMove& mv);
MixedVertex apply_move_mixed(MixedVertex v, const WeightOneMove& mv);

// hat applied coordinatewise; defined for n'' = 0 and distance-preserving.
MixedVertex to_mixed(const DoobVertex& v);
DoobVertex from_mixed(const MixedVertex& v);
void from_mixed_into(const MixedVertex& v, DoobVertex& out);  // reuses out's storage

// Ambient space Z4^2m x Z2^2n2 x Z4^n4 with a dense vertex index
// (Sh pairs are the low digits, radix 16; then E2 pairs and singles,
// radix 4).  This is what the verification kernels iterate over.
struct MixedAmbient {
    int m = 0, n2 = 0, n4 = 0;

    bool operator==(const MixedAmbient&) const = default;

    uint64_t size() const;  // 16^m * 4^(n2+n4); throws std::overflow_error
    int ball() const { return static_cast<int>(ball_size(m, n2 + n4)); }

    MixedVertex vertex(uint64_t index) const;
    void vertex_into(uint64_t index, MixedVertex& out) const;  // reuses out's storage
    uint64_t index(const MixedVertex& v) const;

    // index itself followed by its 6m+3n2+3n4 neighbours
    void ball_indices(uint64_t index, std::vector<uint64_t>& out) const;

    // Deterministic vertex stream: draw `draw` of the splitmix64 stream
    // seeded with `seed`.  Independent draws may run in parallel.
    MixedVertex random_vertex(uint64_t seed, uint64_t draw) const;
};

}  // namespace doob
