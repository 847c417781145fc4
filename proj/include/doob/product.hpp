#pragma once

// The product construction: 64-word block codes in H(5,4) and D(1,3) from
// the explicit parity functions, quaternary Hamming component codes, and
// membership/decoding for the resulting nonlinear 1-perfect codes in
// (Sh x K)^m x (K^3)^(kr-m) x K^k x K^r.
//
// A code vertex is carried as a DoobVertex of D(m, 3kr-2m+k+r) with the
// layout: sh = E4 halves of the Doob cells in row-major cell order; k4 =
// per-cell E2 coordinates (1 per Doob cell, 3 per Hamming cell, row-major),
// then the k-tuple u, then the r-tuple v.

#include <array>
#include <cstdint>
#include <vector>

#include "doob/space.hpp"

namespace doob {

// phi: the fixed bijection Z4 -> E2 used by the D(1,3) block functions
inline constexpr std::array<GF4Elem, 4> kPhi = {gf4::zero, gf4::one, gf4::omega, gf4::omega_bar};

GF4Elem block_f0(GF4Elem x, GF4Elem y, GF4Elem z);  // x + y + z
GF4Elem block_g0(GF4Elem x, GF4Elem y, GF4Elem z);  // x + w y + w^2 z
GF4Elem block_f1(GR16Elem u, GF4Elem w);            // phi(x+y+z)   for u = w*x+y, w = phi(z)
GF4Elem block_g1(GR16Elem u, GF4Elem w);            // phi(x+2y+3z)

enum class BlockKind : uint8_t { Hamming5, Doob13 };

// One of the two 64-word 1-perfect block codes on a 1024-point extended
// space (block coordinates plus the two tail coordinates f, g).  Points are
// indexed mixed-radix, block coordinates high to low then f then g.
struct BlockCode {
    BlockKind kind{};
    std::vector<uint16_t> decode_table;  // point -> index of the covering codeword
    bool is_codeword(uint16_t point) const { return decode_table[point] == point; }
};

// Builds and exhaustively certifies the block code (throws std::logic_error
// if some point is not covered exactly once).
BlockCode build_block_code(BlockKind kind);
const BlockCode& hamming5_block();
const BlockCode& doob13_block();

// 1-perfect code in H(k,4), 3k+1 a power of 4; k = 1 gives {0}.
struct ComponentCode {
    int length = 0;
    std::vector<std::vector<GF4Elem>> check;  // projective columns, one per position
    int redundancy() const { return length ? static_cast<int>(check[0].size()) : 0; }
};
ComponentCode hamming_component(int k);

struct ComponentDecode {
    std::vector<GF4Elem> codeword;
    int error_pos = -1;     // -1 when the word is already a codeword
    GF4Elem error_val{};
};
ComponentDecode component_decode(const ComponentCode& C, const std::vector<GF4Elem>& word);
bool component_member(const ComponentCode& C, const std::vector<GF4Elem>& word);

struct ProductCodeSpec {
    int k = 0, r = 0, m = 0;
    std::vector<uint8_t> doob_cell;  // k*r row-major mask; exactly m set
    ComponentCode comp_row;          // C', length k
    ComponentCode comp_col;          // C'', length r

    int ambient_m() const { return m; }
    int ambient_n() const { return 3 * k * r - 2 * m + k + r; }
};

ProductCodeSpec make_product_spec(int k, int r, int m);  // first m cells row-major are Doob
ProductCodeSpec make_product_spec(int k, int r, std::vector<uint8_t> doob_mask);
ProductCodeSpec product_for_mu(int mu, int m);

// Generalized parity checks over the block grid of X: row sums of f_{i,j}
// and column sums of g_{i,j} (the u and v parts of X are ignored).
std::vector<GF4Elem> parity_f(const ProductCodeSpec& S, const DoobVertex& X);  // length k
std::vector<GF4Elem> parity_g(const ProductCodeSpec& S, const DoobVertex& X);  // length r

bool product_membership(const ProductCodeSpec& S, const DoobVertex& X);
DoobVertex product_decode(const ProductCodeSpec& S, const DoobVertex& X);

int product_log2_cardinality(const ProductCodeSpec& S);   // log2 |C|
unsigned long long product_cardinality(const ProductCodeSpec& S);  // throws if > 2^63

}  // namespace doob
