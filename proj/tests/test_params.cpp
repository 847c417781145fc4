#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "doob/params.hpp"

using namespace doob;

TEST_CASE("mu_for") {
    CHECK(mu_for(1, 3) == 2);
    CHECK(mu_for(7, 7) == 3);
    CHECK(mu_for(1, 4) == std::nullopt);
    CHECK(mu_for(0, 1) == 1);
    CHECK(mu_for(0, 0) == std::nullopt);
}

TEST_CASE("group_params accepts the paper's parameter sets") {
    const auto a = group_params({7, 0, 7});
    REQUIRE(a.ok());
    CHECK(*a.params == GroupParams{0, 3});

    const auto b = group_params({8, 1, 4});
    REQUIRE(b.ok());
    CHECK(*b.params == GroupParams{0, 3});

    const auto c = group_params({9, 2, 1});
    CHECK_FALSE(c.ok());
    CHECK(c.reject == GroupReject::NFourIsOne);
    REQUIRE(c.raw.has_value());
    CHECK(*c.raw == GroupParams{0, 3});
}

TEST_CASE("group_params rejection reasons fire in order") {
    CHECK(group_params({1, 1, 0}).reject == GroupReject::TotalNotPowerOfTwo);
    // (3,6,0): total 37 no; (5,11,0): total 64, order-2 count 34 not a power
    CHECK(group_params({5, 11, 0}).reject == GroupReject::OrderTwoNotPowerOfTwo);
    // (2,0,1): total 16, order-2 2 -> Gamma = -2
    CHECK(group_params({2, 0, 1}).reject == GroupReject::GammaNotEven);
    // (1,10,0): total 37... pick (10,1,0): 60+3+1=64, 3*1+1=4 -> Delta=4, Gamma=-2
    CHECK(group_params({10, 1, 0}).reject == GroupReject::GammaNotEven);
    // Delta too small: (0,21,0): total 64, order-2 64 -> Delta 0
    CHECK(group_params({0, 21, 0}).reject == GroupReject::DeltaTooSmall);
    // n'' too large: (6,3,6): total 64, S = 16 -> (Gamma,Delta)=(2,2), n''=6 > 3
    CHECK(group_params({6, 3, 6}).reject == GroupReject::NFourTooLarge);
}

TEST_CASE("group_params solution is unique (exhaustive over Gamma+2Delta <= 20)") {
    // for admissible triples, the solving (Gamma,Delta) is unique because
    // equations (1)-(2) determine both exponents; cross-check by scanning
    for (int GG = 0; GG <= 20; GG += 2)
        for (int DD = 2; GG + 2 * DD <= 20; ++DD) {
            const long long total = (1ll << (GG + 2 * DD)) - 1;     // 3(2m+n)
            const long long ord2 = (1ll << (GG + DD)) - 1;          // 3n'+n''
            // pick the n''=0 split when divisible
            if (ord2 % 3 != 0) continue;
            const long long n2 = ord2 / 3;
            if ((total / 3 - n2) % 2 != 0) continue;
            const long long m = (total / 3 - n2) / 2;
            if (m < 0) continue;
            int matches = 0;
            GroupParams found{};
            for (int g2 = 0; g2 <= 20; g2 += 2)
                for (int d2 = 2; g2 + 2 * d2 <= 22; ++d2)
                    if ((1ll << (g2 + 2 * d2)) == total + 1 && (1ll << (g2 + d2)) == ord2 + 1) {
                        ++matches;
                        found = {g2, d2};
                    }
            CHECK(matches == 1);
            const auto res = group_params({m, n2, 0});
            REQUIRE(res.ok());
            CHECK(*res.params == found);
        }
}

TEST_CASE("linear parameters and sizes are mutually inverse") {
    CHECK(linear_size(0, 1) == std::pair<long long, long long>{2, 1});
    CHECK(linear_size(1, 1) == std::pair<long long, long long>{8, 5});
    CHECK(linear_size(0, 2) == std::pair<long long, long long>{40, 5});
    CHECK(linear_size(2, 1) == std::pair<long long, long long>{32, 21});
    CHECK(linear_size(1, 2) == std::pair<long long, long long>{160, 21});
    CHECK(linear_size(0, 3) == std::pair<long long, long long>{672, 21});

    CHECK(linear_params(2, 1) == LinearParams{0, 1});
    CHECK(linear_params(8, 5) == LinearParams{1, 1});
    CHECK(linear_params(6, 9) == std::nullopt);

    for (int g = 0; g <= 3; ++g)
        for (int d = 1; g + 2 * d <= 8; ++d) {
            const auto [m, n] = linear_size(g, d);
            CHECK(linear_params(m, n) == LinearParams{g, d});
        }
}

TEST_CASE("linear parameters imply group parameters with Gamma=2gamma, Delta=2delta") {
    for (int mu = 1; mu <= 6; ++mu) {
        const long long diameter = ((1ll << (2 * mu)) - 1) / 3;
        for (long long m = 0; 2 * m <= diameter; ++m) {
            const long long n = diameter - 2 * m;
            const auto lp = linear_params(m, n);
            if (!lp) continue;
            const auto g = group_params({m, n, 0});
            REQUIRE(g.ok());
            CHECK(g.params->Gamma == 2 * lp->gamma);
            CHECK(g.params->Delta == 2 * lp->delta);
        }
    }
}

TEST_CASE("product bound and grid") {
    CHECK(product_bound(3) == 5);
    CHECK(product_kr(3) == std::pair<long long, long long>{1, 5});
    CHECK(product_bound(4) == 25);
    CHECK(product_kr(4) == std::pair<long long, long long>{5, 5});
    CHECK(product_bound(2) == 1);
    CHECK(product_kr(2) == std::pair<long long, long long>{1, 1});
    CHECK_THROWS_AS(product_bound(1), std::invalid_argument);

    for (int mu = 2; mu <= 10; ++mu) {
        const auto [k, r] = product_kr(mu);
        CHECK(product_bound(mu) == k * r);
        CHECK((3 * k + 1) * (3 * r + 1) == 1ll << (2 * mu));
    }
}

TEST_CASE("classify: mu=3 leaves exactly m in {6,9,10} open") {
    std::vector<long long> open;
    for (long long m = 0; m <= 10; ++m) {
        const auto tags = classify(m, 21 - 2 * m);
        REQUIRE_FALSE(tags.empty());
        if (tags.size() == 1 && tags[0].kind == ConstructionTag::Kind::Open) open.push_back(m);
    }
    CHECK(open == std::vector<long long>{6, 9, 10});
}

TEST_CASE("classify: known constructions are tagged") {
    const auto t85 = classify(8, 5);
    CHECK(std::count(t85.begin(), t85.end(),
                     ConstructionTag{ConstructionTag::Kind::Linear, 1, 1, 0}) == 1);

    const auto t77 = classify(7, 7);
    CHECK(std::count(t77.begin(), t77.end(),
                     ConstructionTag{ConstructionTag::Kind::SpecialD77, 0, 0, 0}) == 1);
    CHECK(std::count(t77.begin(), t77.end(),
                     ConstructionTag{ConstructionTag::Kind::AdditiveEvenDelta, 2, 2, 3}) == 1);

    const auto t69 = classify(6, 9);
    CHECK(t69 == std::vector<ConstructionTag>{{ConstructionTag::Kind::Open, 0, 0, 0}});

    CHECK_THROWS_AS(classify(1, 4), std::invalid_argument);

    // m=0 rows report only n''=0 splits
    for (const auto& t : classify(0, 21))
        if (t.kind == ConstructionTag::Kind::AdditiveEvenDelta) CHECK(t.c == 0);
}
