#include "doob/space.hpp"

#include <stdexcept>

namespace doob {

namespace {

struct ShDistTable {
    uint8_t d[16][16];
    constexpr ShDistTable() : d{} {
        for (unsigned x = 0; x < 16; ++x)
            for (unsigned y = 0; y < 16; ++y) {
                const GR16Elem diff = GR16Elem(x) - GR16Elem(y);
                uint8_t v = 2;
                if (diff.is_zero()) v = 0;
                else if (coset_class(diff) == CosetClass::Unit) v = 1;
                d[x][y] = v;
            }
    }
};
constexpr ShDistTable kShDist{};

// For each Sh coordinate value, the six values at distance 1 (add a unit).
struct ShNeighborTable {
    uint8_t nb[16][6];
    constexpr ShNeighborTable() : nb{} {
        for (unsigned x = 0; x < 16; ++x)
            for (int k = 0; k < 6; ++k)
                nb[x][k] = (GR16Elem(x) + gr16::units[static_cast<size_t>(k)]).code;
    }
};
constexpr ShNeighborTable kShNeighbors{};

constexpr std::array<GF4Elem, 3> kK4Values = {gf4::one, gf4::omega, gf4::omega_bar};

uint64_t splitmix64(uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace

int sh_dist(GR16Elem x, GR16Elem y) { return kShDist.d[x.code][y.code]; }

int k4_dist(GF4Elem x, GF4Elem y) { return x == y ? 0 : 1; }

int doob_dist(const DoobVertex& u, const DoobVertex& v) {
    if (u.sh.size() != v.sh.size() || u.k4.size() != v.k4.size())
        throw std::invalid_argument("doob_dist: ambient mismatch");
    int d = 0;
    for (size_t i = 0; i < u.sh.size(); ++i) d += sh_dist(u.sh[i], v.sh[i]);
    for (size_t i = 0; i < u.k4.size(); ++i) d += k4_dist(u.k4[i], v.k4[i]);
    return d;
}

int mixed_dist(const MixedVertex& u, const MixedVertex& v) {
    if (u.z4_pairs.size() != v.z4_pairs.size() || u.z2_pairs.size() != v.z2_pairs.size() ||
        u.z4_singles.size() != v.z4_singles.size())
        throw std::invalid_argument("mixed_dist: ambient mismatch");
    int d = 0;
    for (size_t i = 0; i < u.z4_pairs.size(); ++i)
        d += sh_dist(unhat(u.z4_pairs[i]), unhat(v.z4_pairs[i]));
    for (size_t i = 0; i < u.z2_pairs.size(); ++i)
        d += k4_dist(unhat(u.z2_pairs[i]), unhat(v.z2_pairs[i]));
    for (size_t i = 0; i < u.z4_singles.size(); ++i)
        d += u.z4_singles[i] == v.z4_singles[i] ? 0 : 1;
    return d;
}

int weight(const DoobVertex& v) {
    int w = 0;
    for (GR16Elem x : v.sh) w += kShDist.d[x.code][0];
    for (GF4Elem y : v.k4) w += y.is_zero() ? 0 : 1;
    return w;
}

int mixed_weight(const MixedVertex& v) {
    int w = 0;
    for (Z4Pair p : v.z4_pairs) w += kShDist.d[unhat(p).code][0];
    for (Z2Pair p : v.z2_pairs) w += (p.a | p.b) ? 1 : 0;
    for (uint8_t z : v.z4_singles) w += z ? 1 : 0;
    return w;
}

std::vector<std::pair<WeightOneMove, DoobVertex>> enumerate_weight_one(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("enumerate_weight_one: negative ambient");
    std::vector<std::pair<WeightOneMove, DoobVertex>> out;
    out.reserve(static_cast<size_t>(6 * m + 3 * n));
    const DoobVertex zero{std::vector<GR16Elem>(static_cast<size_t>(m)),
                          std::vector<GF4Elem>(static_cast<size_t>(n))};
    for (int i = 0; i < m; ++i)
        for (GR16Elem u : gr16::units) {
            WeightOneMove mv{WeightOneMove::Kind::ShCoord, i, u.code};
            out.emplace_back(mv, apply_move(zero, mv));
        }
    for (int j = 0; j < n; ++j)
        for (GF4Elem a : kK4Values) {
            WeightOneMove mv{WeightOneMove::Kind::K4Coord, j, static_cast<uint8_t>(a.code)};
            out.emplace_back(mv, apply_move(zero, mv));
        }
    return out;
}

std::vector<std::pair<WeightOneMove, MixedVertex>> enumerate_weight_one_mixed(int m, int n2, int n4) {
    if (m < 0 || n2 < 0 || n4 < 0)
        throw std::invalid_argument("enumerate_weight_one_mixed: negative ambient");
    std::vector<std::pair<WeightOneMove, MixedVertex>> out;
    out.reserve(static_cast<size_t>(6 * m + 3 * n2 + 3 * n4));
    const MixedVertex zero{std::vector<Z4Pair>(static_cast<size_t>(m)),
                           std::vector<Z2Pair>(static_cast<size_t>(n2)),
                           std::vector<uint8_t>(static_cast<size_t>(n4))};
    for (int i = 0; i < m; ++i)
        for (GR16Elem u : gr16::units) {
            WeightOneMove mv{WeightOneMove::Kind::ShCoord, i, u.code};
            out.emplace_back(mv, apply_move_mixed(zero, mv));
        }
    for (int j = 0; j < n2; ++j)
        for (GF4Elem a : kK4Values) {
            WeightOneMove mv{WeightOneMove::Kind::K4Coord, j, static_cast<uint8_t>(a.code)};
            out.emplace_back(mv, apply_move_mixed(zero, mv));
        }
    for (int j = 0; j < n4; ++j)
        for (uint8_t z = 1; z <= 3; ++z) {
            WeightOneMove mv{WeightOneMove::Kind::Z4Single, j, z};
            out.emplace_back(mv, apply_move_mixed(zero, mv));
        }
    return out;
}

DoobVertex apply_move(DoobVertex v, const WeightOneMove& mv) {
    switch (mv.kind) {
        case WeightOneMove::Kind::ShCoord:
            v.sh.at(static_cast<size_t>(mv.index)) =
                v.sh.at(static_cast<size_t>(mv.index)) + GR16Elem(mv.value);
            break;
        case WeightOneMove::Kind::K4Coord:
            v.k4.at(static_cast<size_t>(mv.index)) =
                v.k4.at(static_cast<size_t>(mv.index)) + GF4Elem(mv.value);
            break;
        default:
            throw std::invalid_argument("apply_move: Z4 singles need the mixed form");
    }
    return v;
}

MixedVertex apply_move_mixed(MixedVertex v, const WeightOneMove& mv) {
    const auto i = static_cast<size_t>(mv.index);
    switch (mv.kind) {
        case WeightOneMove::Kind::ShCoord:
            v.z4_pairs.at(i) = hat(unhat(v.z4_pairs.at(i)) + GR16Elem(mv.value));
            break;
        case WeightOneMove::Kind::K4Coord:
            v.z2_pairs.at(i) = hat(unhat(v.z2_pairs.at(i)) + GF4Elem(mv.value));
            break;
        case WeightOneMove::Kind::Z4Single:
            v.z4_singles.at(i) = static_cast<uint8_t>((v.z4_singles.at(i) + mv.value) & 3u);
            break;
    }
    return v;
}

MixedVertex to_mixed(const DoobVertex& v) {
    MixedVertex out;
    out.z4_pairs.reserve(v.sh.size());
    out.z2_pairs.reserve(v.k4.size());
    for (GR16Elem x : v.sh) out.z4_pairs.push_back(hat(x));
    for (GF4Elem y : v.k4) out.z2_pairs.push_back(hat(y));
    return out;
}

DoobVertex from_mixed(const MixedVertex& v) {
    DoobVertex out;
    from_mixed_into(v, out);
    return out;
}

void from_mixed_into(const MixedVertex& v, DoobVertex& out) {
    if (!v.z4_singles.empty())
        throw std::invalid_argument("from_mixed: vertex has Z4-single coordinates");
    out.sh.resize(v.z4_pairs.size());
    out.k4.resize(v.z2_pairs.size());
    for (std::size_t i = 0; i < v.z4_pairs.size(); ++i) out.sh[i] = unhat(v.z4_pairs[i]);
    for (std::size_t i = 0; i < v.z2_pairs.size(); ++i) out.k4[i] = unhat(v.z2_pairs[i]);
}

uint64_t MixedAmbient::size() const {
    if (m < 0 || n2 < 0 || n4 < 0) throw std::invalid_argument("MixedAmbient: negative counts");
    if (4 * m + 2 * (n2 + n4) > 62) throw std::overflow_error("MixedAmbient: space too large");
    return uint64_t{1} << (4 * m + 2 * (n2 + n4));
}

MixedVertex MixedAmbient::vertex(uint64_t index) const {
    MixedVertex v;
    vertex_into(index, v);
    return v;
}

void MixedAmbient::vertex_into(uint64_t index, MixedVertex& v) const {
    v.z4_pairs.resize(static_cast<size_t>(m));
    v.z2_pairs.resize(static_cast<size_t>(n2));
    v.z4_singles.resize(static_cast<size_t>(n4));
    for (int i = 0; i < m; ++i) {
        const auto code = static_cast<uint8_t>(index & 15u);
        v.z4_pairs[static_cast<size_t>(i)] = hat(GR16Elem(code));
        index >>= 4;
    }
    for (int i = 0; i < n2; ++i) {
        const auto code = static_cast<uint8_t>(index & 3u);
        v.z2_pairs[static_cast<size_t>(i)] = hat(GF4Elem(code));
        index >>= 2;
    }
    for (int i = 0; i < n4; ++i) {
        v.z4_singles[static_cast<size_t>(i)] = static_cast<uint8_t>(index & 3u);
        index >>= 2;
    }
}

uint64_t MixedAmbient::index(const MixedVertex& v) const {
    if (v.z4_pairs.size() != static_cast<size_t>(m) || v.z2_pairs.size() != static_cast<size_t>(n2) ||
        v.z4_singles.size() != static_cast<size_t>(n4))
        throw std::invalid_argument("MixedAmbient::index: ambient mismatch");
    uint64_t idx = 0;
    int shift = 0;
    for (int i = 0; i < m; ++i, shift += 4)
        idx |= static_cast<uint64_t>(unhat(v.z4_pairs[static_cast<size_t>(i)]).code) << shift;
    for (int i = 0; i < n2; ++i, shift += 2)
        idx |= static_cast<uint64_t>(unhat(v.z2_pairs[static_cast<size_t>(i)]).code) << shift;
    for (int i = 0; i < n4; ++i, shift += 2)
        idx |= static_cast<uint64_t>(v.z4_singles[static_cast<size_t>(i)] & 3u) << shift;
    return idx;
}

void MixedAmbient::ball_indices(uint64_t index, std::vector<uint64_t>& out) const {
    out.clear();
    out.push_back(index);
    int shift = 0;
    for (int i = 0; i < m; ++i, shift += 4) {
        const auto digit = static_cast<unsigned>((index >> shift) & 15u);
        const uint64_t base = index - (static_cast<uint64_t>(digit) << shift);
        for (int k = 0; k < 6; ++k)
            out.push_back(base + (static_cast<uint64_t>(kShNeighbors.nb[digit][k]) << shift));
    }
    for (int i = 0; i < n2 + n4; ++i, shift += 2) {
        const auto digit = static_cast<unsigned>((index >> shift) & 3u);
        const uint64_t base = index - (static_cast<uint64_t>(digit) << shift);
        for (unsigned d = 0; d < 4; ++d)
            if (d != digit) out.push_back(base + (static_cast<uint64_t>(d) << shift));
    }
}

MixedVertex MixedAmbient::random_vertex(uint64_t seed, uint64_t draw) const {
    // per-draw substream; radices divide 2^64, so the digits are unbiased
    uint64_t state = seed + (draw + 1) * 0x9E3779B97F4A7C15ull;
    MixedVertex v;
    v.z4_pairs.resize(static_cast<size_t>(m));
    v.z2_pairs.resize(static_cast<size_t>(n2));
    v.z4_singles.resize(static_cast<size_t>(n4));
    for (int i = 0; i < m; ++i)
        v.z4_pairs[static_cast<size_t>(i)] = hat(GR16Elem(static_cast<unsigned>(splitmix64(state) & 15u)));
    for (int i = 0; i < n2; ++i)
        v.z2_pairs[static_cast<size_t>(i)] = hat(GF4Elem(static_cast<unsigned>(splitmix64(state) & 3u)));
    for (int i = 0; i < n4; ++i)
        v.z4_singles[static_cast<size_t>(i)] = static_cast<uint8_t>(splitmix64(state) & 3u);
    return v;
}

}  // namespace doob
