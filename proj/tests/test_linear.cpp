#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "doob/linear.hpp"
#include "doob/params.hpp"

using namespace doob;

namespace {

DoobVertex d21_vertex(unsigned idx) {
    return DoobVertex{{GR16Elem(idx >> 6), GR16Elem((idx >> 2) & 15u)}, {GF4Elem(idx & 3u)}};
}

bool column_ok(const CheckMatrixE& M, const std::vector<GR16Elem>& col) {
    //   (*) order 4, (**) first regular entry 1 or psi,
    // (***) last gamma entries zero divisors
    const auto firstreg = std::find_if(col.begin(), col.end(), is_regular);
    if (firstreg == col.end()) return false;
    if (!(*firstreg == gr16::one || *firstreg == gr16::psi)) return false;
    for (int t = M.delta; t < M.rows(); ++t)
        if (is_regular(col[static_cast<std::size_t>(t)])) return false;
    return true;
}

}  // namespace

TEST_CASE("A_{0,1} is (1 psi | 1)") {
    const CheckMatrixE M = build_check_matrix(0, 1);
    REQUIRE(M.m() == 2);
    REQUIRE(M.n() == 1);
    CHECK(M.a_star[0] == std::vector<GR16Elem>{gr16::one});
    CHECK(M.a_star[1] == std::vector<GR16Elem>{gr16::psi});
    CHECK(M.a_prime[0] == std::vector<GF4Elem>{gf4::one});
}

TEST_CASE("column predicates and counts hold for all gamma+2delta <= 6") {
    for (int g = 0; g <= 2; ++g)
        for (int d = 1; g + 2 * d <= 6; ++d) {
            const CheckMatrixE M = build_check_matrix(g, d);
            const auto [want_m, want_n] = linear_size(g, d);
            CHECK(M.m() == want_m);
            CHECK(M.n() == want_n);
            for (const auto& col : M.a_star) CHECK(column_ok(M, col));
            for (const auto& col : M.a_prime) {
                const auto first =
                    std::find_if(col.begin(), col.end(), [](GF4Elem x) { return !x.is_zero(); });
                REQUIRE(first != col.end());
                CHECK(*first == gf4::one);
            }
            // pairwise distinct columns
            std::set<std::vector<GR16Elem>> stars(M.a_star.begin(), M.a_star.end());
            CHECK(stars.size() == M.a_star.size());
            std::set<std::vector<GF4Elem>> primes(M.a_prime.begin(), M.a_prime.end());
            CHECK(primes.size() == M.a_prime.size());
            // sorted deterministically
            CHECK(std::is_sorted(M.a_star.begin(), M.a_star.end()));
            CHECK(std::is_sorted(M.a_prime.begin(), M.a_prime.end()));
        }
    CHECK_THROWS_AS(build_check_matrix(0, 1, 2), std::length_error);
    CHECK_THROWS_AS(build_check_matrix(-1, 1), std::invalid_argument);
    CHECK_THROWS_AS(build_check_matrix(0, 0), std::invalid_argument);
}

TEST_CASE("syndromes of frozen vertices under A_{0,1}") {
    const CheckMatrixE M = build_check_matrix(0, 1);
    const DoobVertex zero{{gr16::zero, gr16::zero}, {gf4::zero}};
    CHECK(syndrome(M, zero) == SyndromeE{gr16::zero});
    CHECK(syndrome(M, DoobVertex{{gr16::zero, gr16::zero}, {gf4::one}}) == SyndromeE{gr16::two});
    CHECK(syndrome(M, DoobVertex{{gr16::zero, gr16::psi}, {gf4::zero}}) ==
          SyndromeE{gr16::omega_bar});
    CHECK(is_codeword(M, zero));
    CHECK_FALSE(is_codeword(M, DoobVertex{{gr16::one, gr16::zero}, {gf4::zero}}));
}

TEST_CASE("syndrome is linear and the kernel is scalar-stable") {
    const CheckMatrixE M = build_check_matrix(1, 1);
    const auto vertex = [&](uint64_t bits) {
        DoobVertex v;
        for (int i = 0; i < 8; ++i) v.sh.push_back(GR16Elem(static_cast<unsigned>((bits >> (4 * i)) & 15u)));
        for (int i = 0; i < 5; ++i) v.k4.push_back(GF4Elem(static_cast<unsigned>((bits >> (32 + 2 * i)) & 3u)));
        return v;
    };
    uint64_t x = 0x9E3779B97F4A7C15ull;
    for (int trial = 0; trial < 50; ++trial) {
        x ^= x << 13; x ^= x >> 7; x ^= x << 17;
        const DoobVertex u = vertex(x);
        x ^= x << 13; x ^= x >> 7; x ^= x << 17;
        const DoobVertex v = vertex(x);
        DoobVertex sum;
        for (int i = 0; i < 8; ++i) sum.sh.push_back(u.sh[static_cast<size_t>(i)] + v.sh[static_cast<size_t>(i)]);
        for (int i = 0; i < 5; ++i) sum.k4.push_back(u.k4[static_cast<size_t>(i)] + v.k4[static_cast<size_t>(i)]);
        const SyndromeE su = syndrome(M, u), sv = syndrome(M, v), ss = syndrome(M, sum);
        for (std::size_t t = 0; t < ss.size(); ++t) CHECK(ss[t] == su[t] + sv[t]);
        // scalar stability: decode(u) is a codeword, and so is omega * decode(u)
        const DoobVertex c = decode(M, u);
        CHECK(is_codeword(M, c));
        DoobVertex wc;
        for (auto e : c.sh) wc.sh.push_back(gr16::omega * e);
        for (auto e : c.k4) wc.k4.push_back(reduce_mod2(gr16::omega) * e);
        CHECK(is_codeword(M, wc));
    }
}

TEST_CASE("decode_syndrome inverts the move-to-syndrome map for all built matrices") {
    for (int g = 0; g <= 2; ++g)
        for (int d = 1; g + 2 * d <= 6; ++d) {
            const CheckMatrixE M = build_check_matrix(g, d);
            const auto moves = enumerate_weight_one(M.m(), M.n());
            for (const auto& [mv, vtx] : moves) {
                (void)vtx;
                CHECK(decode_syndrome(M, move_syndrome(M, mv)) == mv);
            }
        }
}

TEST_CASE("decode_syndrome on frozen A_{0,1} syndromes") {
    const CheckMatrixE M = build_check_matrix(0, 1);
    // s = (2w): covered by the E2 coordinate with value w
    CHECK(decode_syndrome(M, {gr16::two * gr16::omega}) ==
          WeightOneMove{WeightOneMove::Kind::K4Coord, 0, gf4::omega.code});
    // s = (psi): covered by the second A* column with value 1
    CHECK(decode_syndrome(M, {gr16::psi}) ==
          WeightOneMove{WeightOneMove::Kind::ShCoord, 1, gr16::one.code});
    // s = (3) = (-1) * (first column)
    CHECK(decode_syndrome(M, {-gr16::one}) ==
          WeightOneMove{WeightOneMove::Kind::ShCoord, 0, (-gr16::one).code});

    CHECK_THROWS_AS(decode_syndrome(M, {gr16::zero}), std::invalid_argument);
    // admissibility: a regular entry in the last gamma rows is rejected
    const CheckMatrixE M11 = build_check_matrix(1, 1);
    CHECK_THROWS_AS(decode_syndrome(M11, {gr16::zero, gr16::one}), std::invalid_argument);
}

TEST_CASE("exhaustive ground truth: the (0,1) kernel is 1-perfect in D(2,1)") {
    const CheckMatrixE M = build_check_matrix(0, 1);
    std::vector<DoobVertex> codewords;
    for (unsigned idx = 0; idx < 1024; ++idx)
        if (is_codeword(M, d21_vertex(idx))) codewords.push_back(d21_vertex(idx));
    CHECK(codewords.size() == 64);
    CHECK(code_cardinality(2, 1) == 64);

    // oracle: radius-1 balls partition the space (checked via distances only)
    for (unsigned idx = 0; idx < 1024; ++idx) {
        int within = 0;
        for (const auto& c : codewords) within += doob_dist(d21_vertex(idx), c) <= 1;
        CHECK(within == 1);
    }

    // decode agrees with the oracle: nearest codeword at distance <= 1
    for (unsigned idx = 0; idx < 1024; ++idx) {
        const DoobVertex v = d21_vertex(idx);
        const DoobVertex c = decode(M, v);
        CHECK(is_codeword(M, c));
        CHECK(doob_dist(v, c) <= 1);
        if (is_codeword(M, v)) CHECK(c == v);
    }
}

TEST_CASE("decode returns the original codeword after one error") {
    const CheckMatrixE M = build_check_matrix(1, 1);
    // build a codeword from the zero vertex plus a decoded correction path:
    // start from any vertex, decode to get a codeword
    DoobVertex v{{gr16::psi, gr16::two, gr16::zero, gr16::one, gr16::zero, gr16::zero, gr16::zero, gr16::zero},
                 {gf4::omega, gf4::zero, gf4::one, gf4::zero, gf4::omega_bar}};
    const DoobVertex c = decode(M, v);
    REQUIRE(is_codeword(M, c));
    for (const auto& [mv, e] : enumerate_weight_one(8, 5)) {
        (void)e;
        const DoobVertex perturbed = apply_move(c, mv);
        CHECK(decode(M, perturbed) == c);
    }
}

TEST_CASE("code cardinality") {
    CHECK(code_cardinality(2, 1) == 64);
    CHECK(code_cardinality(8, 5) == (1ull << 36));  // 4^21 / 64
    CHECK(code_cardinality(1, 3) == 64);
    CHECK_THROWS_AS(code_cardinality(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(code_cardinality(672, 21), std::overflow_error);
}
