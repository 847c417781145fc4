#include "doob/params.hpp"

#include <stdexcept>

namespace doob {

namespace {

// log2(x) when x is a positive power of two
std::optional<int> log2_exact(long long x) {
    if (x <= 0 || (x & (x - 1)) != 0) return std::nullopt;
    int e = 0;
    while (x > 1) {
        x >>= 1;
        ++e;
    }
    return e;
}

long long pow2(int e) {
    if (e < 0 || e > 62) throw std::overflow_error("pow2: exponent out of range");
    return 1ll << e;
}

}  // namespace

const char* describe(GroupReject r) {
    switch (r) {
        case GroupReject::TotalNotPowerOfTwo: return "6m+3n'+3n''+1 is not a power of two";
        case GroupReject::OrderTwoNotPowerOfTwo: return "3n'+n''+1 is not a power of two";
        case GroupReject::GammaNotEven: return "Gamma is negative or odd";
        case GroupReject::DeltaTooSmall: return "Delta < 2";
        case GroupReject::NFourTooLarge: return "n'' > 2^Delta - 1";
        case GroupReject::NFourIsOne: return "n'' = 1";
    }
    return "?";
}

GroupCheck group_params(const DoobParams& p) {
    if (p.m < 0 || p.n2 < 0 || p.n4 < 0)
        throw std::invalid_argument("group_params: negative parameters");
    GroupCheck out;
    const auto total = log2_exact(6 * p.m + 3 * p.n2 + 3 * p.n4 + 1);  // Gamma + 2 Delta
    if (!total) {
        out.reject = GroupReject::TotalNotPowerOfTwo;
        return out;
    }
    const auto ord2 = log2_exact(3 * p.n2 + p.n4 + 1);  // Gamma + Delta
    if (!ord2) {
        out.reject = GroupReject::OrderTwoNotPowerOfTwo;
        return out;
    }
    const int Delta = *total - *ord2;
    const int Gamma = 2 * *ord2 - *total;
    out.raw = GroupParams{Gamma, Delta};
    if (Gamma < 0 || Gamma % 2 != 0) {
        out.reject = GroupReject::GammaNotEven;
        return out;
    }
    if (Delta < 2) {
        out.reject = GroupReject::DeltaTooSmall;
        return out;
    }
    if (p.n4 > pow2(Delta) - 1) {
        out.reject = GroupReject::NFourTooLarge;
        return out;
    }
    if (p.n4 == 1) {
        out.reject = GroupReject::NFourIsOne;
        return out;
    }
    out.params = GroupParams{Gamma, Delta};
    return out;
}

std::optional<int> mu_for(long long m, long long n) {
    if (m < 0 || n < 0) return std::nullopt;
    const auto e = log2_exact(3 * (2 * m + n) + 1);
    if (!e || *e % 2 != 0 || *e == 0) return std::nullopt;
    return *e / 2;
}

std::optional<LinearParams> linear_params(long long m, long long n) {
    if (m < 0 || n < 0) return std::nullopt;
    const auto t2 = log2_exact(3 * n + 1);
    if (!t2 || *t2 % 2 != 0) return std::nullopt;
    const int t = *t2 / 2;  // gamma + delta
    const auto u2 = log2_exact(6 * m + pow2(*t2));
    if (!u2 || *u2 % 2 != 0) return std::nullopt;
    const int u = *u2 / 2;  // gamma + 2 delta
    const int delta = u - t, gamma = 2 * t - u;
    if (delta < 1 || gamma < 0) return std::nullopt;
    return LinearParams{gamma, delta};
}

std::pair<long long, long long> linear_size(int gamma, int delta) {
    if (gamma < 0 || delta < 1) throw std::invalid_argument("linear_size: need gamma >= 0, delta >= 1");
    if (gamma + 2 * delta > 30) throw std::overflow_error("linear_size: parameters too large");
    const long long n = (pow2(2 * (gamma + delta)) - 1) / 3;
    const long long m = (pow2(2 * (gamma + 2 * delta)) - pow2(2 * (gamma + delta))) / 6;
    return {m, n};
}

long long product_bound(int mu) {
    if (mu < 2) throw std::invalid_argument("product_bound: mu >= 2 required");
    if (mu > 30) throw std::overflow_error("product_bound: mu too large");
    const long long p4 = pow2(2 * mu), p2 = pow2(mu);
    return mu % 2 ? (p4 - 5 * (p2 / 2) + 1) / 9 : (p4 - 2 * p2 + 1) / 9;
}

std::pair<long long, long long> product_kr(int mu) {
    if (mu < 2) throw std::invalid_argument("product_kr: mu >= 2 required");
    if (mu > 30) throw std::overflow_error("product_kr: mu too large");
    if (mu % 2) return {(pow2(mu - 1) - 1) / 3, (pow2(mu + 1) - 1) / 3};
    const long long k = (pow2(mu) - 1) / 3;
    return {k, k};
}

std::string ConstructionTag::str() const {
    switch (kind) {
        case Kind::Linear:
            return "linear(gamma=" + std::to_string(a) + ",delta=" + std::to_string(b) + ")";
        case Kind::AdditiveEvenDelta:
            return "additive(Gamma=" + std::to_string(a) + ",Delta=" + std::to_string(b) +
                   ",n4=" + std::to_string(c) + ")";
        case Kind::SpecialD77:
            return "d77";
        case Kind::Product:
            return "product(k=" + std::to_string(a) + ",r=" + std::to_string(b) + ")";
        case Kind::Open:
            return "open";
    }
    return "?";
}

std::vector<ConstructionTag> classify(long long m, long long n) {
    const auto mu = mu_for(m, n);
    if (!mu) throw std::invalid_argument("classify: 2m+n is not an admissible diameter");
    std::vector<ConstructionTag> tags;
    if (const auto lp = linear_params(m, n))
        tags.push_back({ConstructionTag::Kind::Linear, lp->gamma, lp->delta, 0});
    // m = 0 is the Hamming case: additive codes there need n'' = 0.
    const long long n4_max = m == 0 ? 0 : n;
    for (long long n4 = 0; n4 <= n4_max; ++n4) {
        const auto g = group_params({m, n - n4, n4});
        if (g.ok() && g.params->Delta % 2 == 0)
            tags.push_back({ConstructionTag::Kind::AdditiveEvenDelta, g.params->Gamma,
                            g.params->Delta, n4});
    }
    if (m == 7 && n == 7) tags.push_back({ConstructionTag::Kind::SpecialD77, 0, 0, 0});
    if (*mu >= 2 && m <= product_bound(*mu)) {
        const auto [k, r] = product_kr(*mu);
        tags.push_back({ConstructionTag::Kind::Product, k, r, 0});
    }
    if (tags.empty()) tags.push_back({ConstructionTag::Kind::Open, 0, 0, 0});
    return tags;
}

}  // namespace doob
