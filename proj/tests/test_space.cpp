#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>
#include <set>

#include "doob/space.hpp"

using namespace doob;

namespace {

// Oracle: BFS distances on the 16-vertex Cayley graph of E4^+ with the
// unit-image connecting set.
std::array<std::array<int, 16>, 16> shrikhande_bfs() {
    std::array<std::array<int, 16>, 16> dist{};
    for (unsigned s = 0; s < 16; ++s) {
        dist[s].fill(-1);
        dist[s][s] = 0;
        std::queue<unsigned> q;
        q.push(s);
        while (!q.empty()) {
            const unsigned x = q.front();
            q.pop();
            for (GR16Elem u : gr16::units) {
                const unsigned y = (GR16Elem(x) + u).code;
                if (dist[s][y] < 0) {
                    dist[s][y] = dist[s][x] + 1;
                    q.push(y);
                }
            }
        }
    }
    return dist;
}

DoobVertex d11_vertex(unsigned idx) {
    return DoobVertex{{GR16Elem(idx >> 2)}, {GF4Elem(idx & 3u)}};
}

}  // namespace

TEST_CASE("Shrikhande distance matches BFS on the Cayley graph") {
    const auto oracle = shrikhande_bfs();
    for (unsigned x = 0; x < 16; ++x)
        for (unsigned y = 0; y < 16; ++y)
            CHECK(sh_dist(GR16Elem(x), GR16Elem(y)) == oracle[x][y]);

    CHECK(sh_dist(gr16::zero, gr16::zero) == 0);
    CHECK(sh_dist(gr16::zero, gr16::one) == 1);
    CHECK(sh_dist(gr16::zero, gr16::psi) == 2);
}

TEST_CASE("K4 distance") {
    CHECK(k4_dist(gf4::zero, gf4::zero) == 0);
    CHECK(k4_dist(gf4::zero, gf4::omega) == 1);
    CHECK(k4_dist(gf4::one, gf4::omega_bar) == 1);
}

TEST_CASE("doob_dist is a metric on D(1,1), exhaustively") {
    for (unsigned a = 0; a < 64; ++a) {
        const DoobVertex u = d11_vertex(a);
        CHECK(doob_dist(u, u) == 0);
        for (unsigned b = 0; b < 64; ++b) {
            const DoobVertex v = d11_vertex(b);
            const int duv = doob_dist(u, v);
            CHECK(duv == doob_dist(v, u));
            CHECK((duv == 0) == (a == b));
            for (unsigned c = 0; c < 64; ++c)
                CHECK(duv <= doob_dist(u, d11_vertex(c)) + doob_dist(d11_vertex(c), v));
        }
    }
}

TEST_CASE("frozen distances") {
    // D(1,1): (0|0) vs (psi|w) -> 2 + 1
    CHECK(doob_dist(DoobVertex{{gr16::zero}, {gf4::zero}},
                    DoobVertex{{gr16::psi}, {gf4::omega}}) == 3);
    // D(2,1): one unit step
    CHECK(doob_dist(DoobVertex{{gr16::zero, gr16::zero}, {gf4::zero}},
                    DoobVertex{{gr16::one, gr16::zero}, {gf4::zero}}) == 1);
    CHECK_THROWS_AS(doob_dist(DoobVertex{{}, {gf4::zero}}, DoobVertex{{gr16::zero}, {}}),
                    std::invalid_argument);
}

TEST_CASE("every vertex of D(1,1) and D(1,3) has 6m+3n neighbours") {
    for (unsigned a = 0; a < 64; ++a) {
        int neighbours = 0;
        for (unsigned b = 0; b < 64; ++b)
            neighbours += doob_dist(d11_vertex(a), d11_vertex(b)) == 1;
        CHECK(neighbours == 9);
    }
    const MixedAmbient amb{1, 3, 0};
    std::vector<uint64_t> ball;
    for (uint64_t i = 0; i < amb.size(); i += 97) {
        amb.ball_indices(i, ball);
        std::set<uint64_t> uniq(ball.begin(), ball.end());
        CHECK(uniq.size() == ball.size());
        CHECK(static_cast<int>(ball.size()) == amb.ball());
        for (uint64_t b : ball)
            CHECK(mixed_dist(amb.vertex(i), amb.vertex(b)) <= 1);
    }
}

TEST_CASE("weights") {
    CHECK(weight(DoobVertex{{gr16::zero, gr16::zero}, {gf4::zero}}) == 0);
    CHECK(mixed_weight(MixedVertex{{Z4Pair{0, 3}}, {}, {}}) == 1);   // pair "03" = -1
    CHECK(mixed_weight(MixedVertex{{}, {}, {2}}) == 1);
    CHECK(mixed_weight(MixedVertex{{Z4Pair{1, 2}}, {}, {}}) == 2);   // psi
}

TEST_CASE("weight-1 enumeration: counts, distinctness, weight") {
    CHECK(enumerate_weight_one(0, 1).size() == 3);
    CHECK(enumerate_weight_one(2, 1).size() == 15);
    CHECK(enumerate_weight_one_mixed(7, 0, 7).size() == 63);

    const auto moves = enumerate_weight_one(2, 3);
    CHECK(moves.size() == 21);
    std::set<std::string> seen;
    for (const auto& [mv, v] : moves) {
        (void)mv;
        CHECK(weight(v) == 1);
        std::string key;
        for (auto x : v.sh) key += to_digits(x);
        for (auto y : v.k4) key += to_digits(y);
        CHECK(seen.insert(key).second);
    }

    const auto mixed = enumerate_weight_one_mixed(1, 1, 2);
    CHECK(mixed.size() == 15);
    for (const auto& [mv, v] : mixed) {
        (void)mv;
        CHECK(mixed_weight(v) == 1);
    }
}

TEST_CASE("ball sizes") {
    CHECK(ball_size(1, 3) == 16);
    CHECK(ball_size(2, 1) == 16);
    CHECK(ball_size(5, 11) == 64);
}

TEST_CASE("convert preserves distance on D(1,1) and round-trips") {
    const DoobVertex v{{gr16::psi}, {gf4::omega_bar}};
    const MixedVertex w = to_mixed(v);
    CHECK(w.z4_pairs[0] == Z4Pair{1, 2});
    CHECK(w.z2_pairs[0] == Z2Pair{1, 1});
    CHECK(from_mixed(w) == v);

    for (unsigned a = 0; a < 64; ++a)
        for (unsigned b = 0; b < 64; ++b)
            CHECK(doob_dist(d11_vertex(a), d11_vertex(b)) ==
                  mixed_dist(to_mixed(d11_vertex(a)), to_mixed(d11_vertex(b))));

    CHECK_THROWS_AS(from_mixed(MixedVertex{{}, {}, {1}}), std::invalid_argument);
}

TEST_CASE("mixed ambient indexing round-trips") {
    const MixedAmbient amb{2, 1, 2};
    CHECK(amb.size() == (1ull << 14));
    for (uint64_t i = 0; i < amb.size(); i += 13)
        CHECK(amb.index(amb.vertex(i)) == i);
    CHECK(amb.ball() == 6 * 2 + 3 * 3 + 1);
}

TEST_CASE("random vertex stream is deterministic and seed-sensitive") {
    const MixedAmbient amb{5, 11, 0};
    const MixedVertex a = amb.random_vertex(1, 42), b = amb.random_vertex(1, 42);
    CHECK(a == b);
    CHECK(amb.random_vertex(1, 42).z4_pairs != amb.random_vertex(2, 42).z4_pairs);
    // draws cover the space reasonably: indices within bounds
    for (uint64_t d = 0; d < 50; ++d)
        CHECK(amb.index(amb.random_vertex(7, d)) < amb.size());
}
