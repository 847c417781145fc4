#pragma once

// Exact arithmetic in the two Eisenstein residue rings used throughout:
//
//   E2 = E/2E, the field GF(4), elements a*w + b with a,b mod 2,
//   E4 = E/4E, the Galois ring GR(4^2), elements a*w + b with a,b mod 4,
//
// where w (omega) is a primitive cube root of unity, so 1 + w + w^2 = 0
// and w^2 = -1 - w.  Elements are encoded by their coordinate pair (a,b)
// in the basis (w,1); the packed code is 2a+b resp. 4a+b, which makes the
// numeric order of codes coincide with the lexicographic order of the
// two-digit strings "ab".

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace doob {

struct GF4Elem {
    uint8_t code = 0;  // 2*a + b

    constexpr GF4Elem() = default;
    constexpr explicit GF4Elem(unsigned c) : code(static_cast<uint8_t>(c & 3u)) {}
    static constexpr GF4Elem from_coeffs(unsigned a, unsigned b) {
        return GF4Elem(((a & 1u) << 1) | (b & 1u));
    }
    constexpr unsigned a() const { return code >> 1; }
    constexpr unsigned b() const { return code & 1u; }
    constexpr bool is_zero() const { return code == 0; }

    friend constexpr bool operator==(GF4Elem x, GF4Elem y) { return x.code == y.code; }
    friend constexpr bool operator<(GF4Elem x, GF4Elem y) { return x.code < y.code; }
};

constexpr GF4Elem operator+(GF4Elem x, GF4Elem y) { return GF4Elem(x.code ^ y.code); }
constexpr GF4Elem operator-(GF4Elem x, GF4Elem y) { return x + y; }
constexpr GF4Elem operator-(GF4Elem x) { return x; }

constexpr GF4Elem operator*(GF4Elem x, GF4Elem y) {
    // (a*w+b)(c*w+d) with w^2 = -1-w; signs vanish in characteristic 2.
    const unsigned a = x.a(), b = x.b(), c = y.a(), d = y.b();
    return GF4Elem::from_coeffs(a * d + b * c + a * c, b * d + a * c);
}

struct GR16Elem {
    uint8_t code = 0;  // 4*a + b

    constexpr GR16Elem() = default;
    constexpr explicit GR16Elem(unsigned c) : code(static_cast<uint8_t>(c & 15u)) {}
    static constexpr GR16Elem from_coeffs(unsigned a, unsigned b) {
        return GR16Elem(((a & 3u) << 2) | (b & 3u));
    }
    constexpr unsigned a() const { return code >> 2; }
    constexpr unsigned b() const { return code & 3u; }
    constexpr bool is_zero() const { return code == 0; }

    friend constexpr bool operator==(GR16Elem x, GR16Elem y) { return x.code == y.code; }
    friend constexpr bool operator<(GR16Elem x, GR16Elem y) { return x.code < y.code; }
};

constexpr GR16Elem operator+(GR16Elem x, GR16Elem y) {
    return GR16Elem::from_coeffs(x.a() + y.a(), x.b() + y.b());
}
constexpr GR16Elem operator-(GR16Elem x) {
    return GR16Elem::from_coeffs(4u - x.a(), 4u - x.b());
}
constexpr GR16Elem operator-(GR16Elem x, GR16Elem y) { return x + (-y); }

constexpr GR16Elem operator*(GR16Elem x, GR16Elem y) {
    // (a*w+b)(c*w+d) = (ad+bc-ac)*w + (bd-ac) using w^2 = -1-w.
    const unsigned a = x.a(), b = x.b(), c = y.a(), d = y.b();
    return GR16Elem::from_coeffs(a * d + b * c + 3u * a * c, b * d + 3u * a * c);
}

namespace gf4 {
inline constexpr GF4Elem zero{0u}, one{1u}, omega{2u}, omega_bar{3u};
}  // namespace gf4

namespace gr16 {
inline constexpr GR16Elem zero = GR16Elem::from_coeffs(0, 0);
inline constexpr GR16Elem one = GR16Elem::from_coeffs(0, 1);
inline constexpr GR16Elem two = GR16Elem::from_coeffs(0, 2);
inline constexpr GR16Elem omega = GR16Elem::from_coeffs(1, 0);
inline constexpr GR16Elem omega_bar = omega * omega;  // = 3w + 3
inline constexpr GR16Elem psi = GR16Elem::from_coeffs(1, 2);  // 2 + w

// The six residues of the Eisenstein units, in the order the Shrikhande
// generating set is listed: 1, -w, w^2, -1, w, -w^2 (hat codes 01, 30,
// 33, 03, 10, 11).  This order is used for all weight-1 enumeration.
inline constexpr std::array<GR16Elem, 6> units = {
    one, -omega, omega_bar, -one, omega, -omega_bar};
}  // namespace gr16

// x has additive order 4 exactly when it is a non-zero-divisor.
constexpr bool is_regular(GR16Elem x) { return ((x.a() | x.b()) & 1u) != 0; }

enum class CosetClass : uint8_t { Zero, Unit, TwoUnit, PsiUnit };

// Partition of E4 into the multiplicative cosets {0}, E, 2E, psi*E of the
// unit-image set E (sizes 1, 6, 3, 6).
constexpr CosetClass coset_class(GR16Elem x) {
    if (x.is_zero()) return CosetClass::Zero;
    if (!is_regular(x)) return CosetClass::TwoUnit;
    for (GR16Elem u : gr16::units)
        if (u == x) return CosetClass::Unit;
    return CosetClass::PsiUnit;
}

// Coordinates of an element in the basis (w,1).
struct Z4Pair {
    uint8_t a = 0, b = 0;
    friend constexpr bool operator==(Z4Pair x, Z4Pair y) { return x.a == y.a && x.b == y.b; }
};
struct Z2Pair {
    uint8_t a = 0, b = 0;
    friend constexpr bool operator==(Z2Pair x, Z2Pair y) { return x.a == y.a && x.b == y.b; }
};

constexpr Z4Pair hat(GR16Elem x) { return {static_cast<uint8_t>(x.a()), static_cast<uint8_t>(x.b())}; }
constexpr Z2Pair hat(GF4Elem x) { return {static_cast<uint8_t>(x.a()), static_cast<uint8_t>(x.b())}; }
constexpr GR16Elem unhat(Z4Pair p) { return GR16Elem::from_coeffs(p.a, p.b); }
constexpr GF4Elem unhat(Z2Pair p) { return GF4Elem::from_coeffs(p.a, p.b); }

using Mat2 = std::array<std::array<uint8_t, 2>, 2>;

// Multiplication-by-x as a 2x2 matrix: hat(x*y)^T = tilde(x) * hat(y)^T.
// Its columns are hat(x*w) and hat(x).
constexpr Mat2 tilde(GR16Elem x) {
    const unsigned a = x.a(), b = x.b();
    return {{{static_cast<uint8_t>((b + 4u - a) & 3u), static_cast<uint8_t>(a)},
             {static_cast<uint8_t>((4u - a) & 3u), static_cast<uint8_t>(b)}}};
}
constexpr Mat2 tilde(GF4Elem x) {
    const unsigned a = x.a(), b = x.b();
    return {{{static_cast<uint8_t>((a + b) & 1u), static_cast<uint8_t>(a)},
             {static_cast<uint8_t>(a), static_cast<uint8_t>(b)}}};
}

// Ring surjection E4 -> E2 (coefficients mod 2).
constexpr GF4Elem reduce_mod2(GR16Elem x) {
    return GF4Elem::from_coeffs(x.a() & 1u, x.b() & 1u);
}

// Image of an E2 element under multiplication by 2 into E4; the result has
// additive order at most 2 and depends only on the residue, not on a lift.
constexpr GR16Elem two_lift(GF4Elem y) {
    return GR16Elem::from_coeffs(2u * y.a(), 2u * y.b());
}

// The section of reduce_mod2 sending 0, 1, w, w^2 of E2 to the E4 elements
// of the same name (note w^2 = (1,1) in E2 but (3,3) in E4).
constexpr GR16Elem symbol_lift(GF4Elem y) {
    return y == gf4::omega_bar ? gr16::omega_bar : GR16Elem::from_coeffs(y.a(), y.b());
}

struct UnitDecomposition {
    GR16Elem beta;    // in the unit-image set E
    bool psi_factor;  // input = psi * beta when set, beta otherwise
};

// Writes a regular element as beta or psi*beta with beta in E (unique).
// Rejects 0 and the zero divisors.
inline UnitDecomposition unit_decompose(GR16Elem x) {
    switch (coset_class(x)) {
        case CosetClass::Unit:
            return {x, false};
        case CosetClass::PsiUnit:
            for (GR16Elem u : gr16::units)
                if (gr16::psi * u == x) return {u, true};
            throw std::logic_error("unit_decompose: psi coset scan failed");
        default:
            throw std::invalid_argument("unit_decompose: element is not regular");
    }
}

// Multiplicative inverse of a regular element.
inline GR16Elem inverse(GR16Elem x) {
    if (!is_regular(x)) throw std::invalid_argument("inverse: element is not regular");
    for (unsigned c = 0; c < 16; ++c)
        if (x * GR16Elem(c) == gr16::one) return GR16Elem(c);
    throw std::logic_error("inverse: scan failed");
}

inline GF4Elem inverse(GF4Elem x) {
    if (x.is_zero()) throw std::invalid_argument("inverse: zero has no inverse");
    for (unsigned c = 1; c < 4; ++c)
        if (x * GF4Elem(c) == gf4::one) return GF4Elem(c);
    throw std::logic_error("inverse: scan failed");
}

// Two-digit text form "ab" (a = coefficient of w).
inline std::string to_digits(GR16Elem x) {
    return {static_cast<char>('0' + x.a()), static_cast<char>('0' + x.b())};
}
inline std::string to_digits(GF4Elem x) {
    return {static_cast<char>('0' + x.a()), static_cast<char>('0' + x.b())};
}

}  // namespace doob
