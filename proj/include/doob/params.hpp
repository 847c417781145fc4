#pragma once

// Admissibility arithmetic for 1-perfect codes in D(m,n): sphere-packing
// diameters, the (Gamma,Delta) factor-group restrictions on additive codes,
// the (gamma,delta) parameters of linear codes, the product-construction
// bound, and a classifier reporting which construction covers which (m,n).

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace doob {

struct DoobParams {
    long long m = 0;   // Shrikhande coordinates
    long long n2 = 0;  // E2 coordinates (n')
    long long n4 = 0;  // Z4 singles (n'')
};

// Factor group Z2^Gamma x Z4^Delta of the cosets of an additive code.
struct GroupParams {
    int Gamma = 0;
    int Delta = 0;
    bool operator==(const GroupParams&) const = default;
};

struct LinearParams {
    int gamma = 0;
    int delta = 0;
    bool operator==(const LinearParams&) const = default;
};

enum class GroupReject {
    TotalNotPowerOfTwo,     // 6m+3n'+3n''+1 is not a power of two
    OrderTwoNotPowerOfTwo,  // 3n'+n''+1 is not a power of two
    GammaNotEven,           // Gamma negative or odd
    DeltaTooSmall,          // Delta < 2
    NFourTooLarge,          // n'' > 2^Delta - 1
    NFourIsOne,             // n'' = 1
};
const char* describe(GroupReject r);

struct GroupCheck {
    std::optional<GroupParams> params;
    GroupReject reject{};          // meaningful when !params
    std::optional<GroupParams> raw;  // (Gamma,Delta) solving (1)-(2), even if rejected
    bool ok() const { return params.has_value(); }
};

// The unique (Gamma,Delta) permitted by the additive-code restrictions, or
// the first violated condition (checked in the order of GroupReject).
GroupCheck group_params(const DoobParams& p);

// mu with 2m+n = (4^mu - 1)/3, when it exists.
std::optional<int> mu_for(long long m, long long n);

// (gamma,delta) with n = (4^(gamma+delta)-1)/3, m = (4^(gamma+2delta)-4^(gamma+delta))/6.
std::optional<LinearParams> linear_params(long long m, long long n);
std::pair<long long, long long> linear_size(int gamma, int delta);  // (m, n)

// Largest m covered by the product construction for diameter parameter mu,
// and the grid shape (k, r) it uses; bound = k*r.
long long product_bound(int mu);                      // mu >= 2
std::pair<long long, long long> product_kr(int mu);   // mu >= 2

struct ConstructionTag {
    enum class Kind { Linear, AdditiveEvenDelta, SpecialD77, Product, Open };
    Kind kind{};
    long long a = 0, b = 0, c = 0;  // Linear: gamma,delta; Additive: Gamma,Delta,n''; Product: k,r

    std::string str() const;
    bool operator==(const ConstructionTag&) const = default;
};

// Every construction whose existence condition holds at (m,n); {Open} if
// none does.  Requires mu_for(m,n) to be defined.
std::vector<ConstructionTag> classify(long long m, long long n);

}  // namespace doob
