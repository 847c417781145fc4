#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "doob/product.hpp"
#include "doob/verify.hpp"

using namespace doob;

namespace {

MixedPredicate product_predicate(const ProductCodeSpec& S) {
    return [S](const MixedVertex& v) { return product_membership(S, from_mixed(v)); };
}

DoobVertex random_vertex(const ProductCodeSpec& S, uint64_t salt) {
    const MixedAmbient amb{S.ambient_m(), S.ambient_n(), 0};
    return from_mixed(amb.random_vertex(0xD00B, salt));
}

}  // namespace

TEST_CASE("block parity functions") {
    CHECK(block_f0(gf4::one, gf4::omega, gf4::omega_bar) == gf4::zero);  // 1+w+w^2
    CHECK(block_g0(gf4::zero, gf4::zero, gf4::zero) == gf4::zero);
    // f1(w*1 + 2, phi(3)) = phi(1+2+3) = phi(2) = w
    CHECK(block_f1(GR16Elem::from_coeffs(1, 2), kPhi[3]) == gf4::omega);
    CHECK(block_g1(gr16::zero, kPhi[0]) == gf4::zero);
}

TEST_CASE("both block codes are 1-perfect on their 1024-point spaces") {
    for (BlockKind kind : {BlockKind::Hamming5, BlockKind::Doob13}) {
        const BlockCode code = build_block_code(kind);  // throws if not 1-perfect
        int codewords = 0;
        for (unsigned p = 0; p < 1024; ++p) {
            CHECK(code.decode_table[p] < 1024);
            if (code.is_codeword(static_cast<uint16_t>(p))) ++codewords;
            // the covering codeword decodes to itself
            CHECK(code.decode_table[code.decode_table[p]] == code.decode_table[p]);
        }
        CHECK(codewords == 64);
    }
}

TEST_CASE("hamming components") {
    const ComponentCode c1 = hamming_component(1);
    CHECK(c1.length == 1);
    CHECK(component_member(c1, {gf4::zero}));
    CHECK_FALSE(component_member(c1, {gf4::one}));

    const ComponentCode c5 = hamming_component(5);
    CHECK(c5.redundancy() == 2);
    uint64_t members = 0;
    for (unsigned w = 0; w < 1024; ++w) {
        std::vector<GF4Elem> word;
        for (int i = 0; i < 5; ++i) word.push_back(GF4Elem((w >> (2 * i)) & 3u));
        const bool in = component_member(c5, word);
        members += in;
        const ComponentDecode d = component_decode(c5, word);
        CHECK(component_member(c5, d.codeword));
        if (in) {
            CHECK(d.error_pos == -1);
            CHECK(d.codeword == word);
        } else {
            REQUIRE(d.error_pos >= 0);
            CHECK(d.codeword[static_cast<std::size_t>(d.error_pos)] + d.error_val ==
                  word[static_cast<std::size_t>(d.error_pos)]);
        }
    }
    CHECK(members == 64);  // 4^5 / 16 = 4^3

    CHECK_THROWS_AS(hamming_component(2), std::invalid_argument);
    CHECK(hamming_component(21).redundancy() == 3);
}

TEST_CASE("product ambient shapes") {
    const ProductCodeSpec a = make_product_spec(1, 1, 1);
    CHECK(a.ambient_m() == 1);
    CHECK(a.ambient_n() == 3);  // D(1,3)
    const ProductCodeSpec b = make_product_spec(1, 1, 0);
    CHECK(b.ambient_n() == 5);  // H(5,4)
    const ProductCodeSpec c = product_for_mu(3, 5);
    CHECK(c.k == 1);
    CHECK(c.r == 5);
    CHECK(c.ambient_m() == 5);
    CHECK(c.ambient_n() == 11);  // D(5,11)
    CHECK_THROWS_AS(product_for_mu(3, 6), std::invalid_argument);
}

TEST_CASE("parity functions vanish on zero blocks and match single summands") {
    const ProductCodeSpec S = make_product_spec(1, 1, 1);
    DoobVertex zero{std::vector<GR16Elem>(1), std::vector<GF4Elem>(3)};
    CHECK(product_membership(S, zero));  // f,g vanish at zero and 0 in C', C''
    CHECK(parity_f(S, zero) == std::vector<GF4Elem>{gf4::zero});
    CHECK(parity_g(S, zero) == std::vector<GF4Elem>{gf4::zero});

    // k=r=1, one Doob block: membership iff u = f1(block), v = g1(block)
    for (unsigned bx = 0; bx < 16; ++bx)
        for (unsigned by = 0; by < 4; ++by) {
            const GR16Elem x(bx);
            const GF4Elem y(by);
            DoobVertex v{{x}, {y, block_f1(x, y), block_g1(x, y)}};
            CHECK(parity_f(S, v) == std::vector<GF4Elem>{block_f1(x, y)});
            CHECK(parity_g(S, v) == std::vector<GF4Elem>{block_g1(x, y)});
            CHECK(product_membership(S, v));
            DoobVertex bad = v;
            bad.k4[1] = bad.k4[1] + gf4::one;
            CHECK_FALSE(product_membership(S, bad));
        }
}

TEST_CASE("parity_f is linear along a Hamming-block row") {
    // k=r=1, m=0: a single f0 block; f0 is GF(4)-linear in the block
    const ProductCodeSpec S = make_product_spec(1, 1, 0);
    const auto vertex = [](GF4Elem a, GF4Elem b, GF4Elem c) {
        return DoobVertex{{}, {a, b, c, gf4::zero, gf4::zero}};
    };
    for (unsigned p = 0; p < 64; ++p)
        for (unsigned q = 0; q < 64; q += 7) {
            const GF4Elem a1(p >> 4), b1((p >> 2) & 3u), c1(p & 3u);
            const GF4Elem a2(q >> 4), b2((q >> 2) & 3u), c2(q & 3u);
            const GF4Elem sum_f = parity_f(S, vertex(a1, b1, c1))[0] +
                                  parity_f(S, vertex(a2, b2, c2))[0];
            CHECK(parity_f(S, vertex(a1 + a2, b1 + b2, c1 + c2))[0] == sum_f);
        }
}

TEST_CASE("product codes for k=r=1 are exactly 1-perfect (64 codewords)") {
    for (int m : {0, 1}) {
        const ProductCodeSpec S = make_product_spec(1, 1, m);
        const MixedAmbient amb{S.ambient_m(), S.ambient_n(), 0};
        const PartitionReport rep = verify_exhaustive(product_predicate(S), amb);
        CHECK(rep.pass());
        CHECK(rep.codeword_count == 64);
        CHECK(rep.space_size == 1024);
    }
}

TEST_CASE("product decode: identity, single u/v errors, block errors") {
    for (int m : {0, 1}) {
        const ProductCodeSpec S = make_product_spec(1, 1, m);
        const MixedAmbient amb{S.ambient_m(), S.ambient_n(), 0};
        for (uint64_t i = 0; i < amb.size(); ++i) {
            const DoobVertex v = from_mixed(amb.vertex(i));
            const DoobVertex c = product_decode(S, v);
            CHECK(product_membership(S, c));
            CHECK(doob_dist(v, c) <= 1);
            if (product_membership(S, v)) CHECK(c == v);
        }
    }
}

TEST_CASE("product decode on D(5,11): codeword + move decodes back, sampled") {
    const ProductCodeSpec S = product_for_mu(3, 5);
    for (uint64_t salt = 0; salt < 20; ++salt) {
        const DoobVertex c = product_decode(S, random_vertex(S, salt));
        REQUIRE(product_membership(S, c));
        for (const auto& [mv, e] : enumerate_weight_one(5, 11)) {
            (void)e;
            const DoobVertex perturbed = apply_move(c, mv);
            const DoobVertex back = product_decode(S, perturbed);
            CHECK(back == c);
        }
    }
}

TEST_CASE("cardinality identities") {
    CHECK(product_cardinality(make_product_spec(1, 1, 1)) == 64);
    CHECK(product_log2_cardinality(product_for_mu(3, 5)) == 36);  // 64^5 * 1 * 64
    // |C| * (3k+1)(3r+1) = 4^(3kr+k+r) in exponents, for all built specs
    for (int mu = 2; mu <= 4; ++mu) {
        const ProductCodeSpec S = product_for_mu(mu, 0);
        const int log2_ball = 2 * mu;  // (3k+1)(3r+1)
        CHECK(product_log2_cardinality(S) + log2_ball == 2 * (3 * S.k * S.r + S.k + S.r));
    }
}

TEST_CASE("any m-subset of cells may be the Doob blocks") {
    // k=r=1 trivially; exercise (k,r)=(1,5) with scattered masks
    const std::vector<std::vector<uint8_t>> masks = {
        {1, 0, 1, 0, 1},  // m=3 scattered
        {0, 1, 0, 1, 0},  // m=2
        {0, 0, 0, 0, 1},  // m=1 at the far end
    };
    for (const auto& mask : masks) {
        const ProductCodeSpec S = make_product_spec(1, 5, mask);
        const MixedAmbient amb{S.ambient_m(), S.ambient_n(), 0};
        const SampleReport rep = verify_sampled(product_predicate(S), amb, 400, 7);
        CHECK(rep.pass());
        // decode still lands on codewords at distance <= 1
        for (uint64_t salt = 0; salt < 5; ++salt) {
            const DoobVertex v = random_vertex(S, salt);
            const DoobVertex c = product_decode(S, v);
            CHECK(product_membership(S, c));
            CHECK(doob_dist(v, c) <= 1);
        }
    }
}
