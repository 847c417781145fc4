#pragma once

// Z4-additive 1-perfect codes: the expansion A -> B by tilde blocks, the
// column surgery B -> D = D*|D'|D'' trading E2 pairs for Z4 singles, the
// fixed D(7,7) matrix, and table-driven syndrome decoding over MixedVertex.

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "doob/linear.hpp"
#include "doob/space.hpp"

namespace doob {

struct CheckMatrixZ {
    int rows = 0;
    int m = 0, n2 = 0, n4 = 0;
    std::vector<std::vector<uint8_t>> d_star;    // 2m columns over Z4, consecutive pairs
    std::vector<std::vector<uint8_t>> d_prime;   // 2n2 columns over Z2, consecutive pairs
    std::vector<std::vector<uint8_t>> d_dprime;  // n4 single columns over Z4
};

// Replace every matrix entry x by the 2x2 block tilde(x).
CheckMatrixZ expand_matrix(const CheckMatrixE& A);

struct LambdaSelection {
    std::vector<int> indices;  // into A.a_prime, ascending
};

// n4/3 columns of A' with zeros in the last gamma rows; the default picks
// the lexicographically last eligible columns.
LambdaSelection select_lambdas(const CheckMatrixE& A, int n4);

// Remove the B-pairs matching each lambda (in A* via the symbol lift, and
// in A'), append the three single columns hat(lambda), hat(w lambda),
// hat(w^2 lambda) per lambda.
CheckMatrixZ build_D(const CheckMatrixE& A, const LambdaSelection& sel);

// The explicit 3x21 check matrix of the additive 1-perfect code in D(7,7).
CheckMatrixZ special_d77();

using SyndromeZ = std::vector<uint8_t>;

SyndromeZ syndrome_z(const CheckMatrixZ& M, const MixedVertex& v);  // D*x^T + 2D'y^T + D''z^T
SyndromeZ move_syndrome_z(const CheckMatrixZ& M, const WeightOneMove& mv);
bool is_codeword_z(const CheckMatrixZ& M, const MixedVertex& v);

uint64_t pack_syndrome(const SyndromeZ& s);  // 2 bits per row, rows <= 32

struct MoveTable {
    std::unordered_map<uint64_t, WeightOneMove> by_syndrome;
};

// Syndrome -> weight-1 move over all 6m+3n2+3n4 moves.  Throws on a
// duplicate key (minimum distance < 3) or a zero-syndrome move.
MoveTable build_move_table(const CheckMatrixZ& M);

// Nearest codeword (distance <= 1); throws if the syndrome is not covered.
MixedVertex decode_z(const CheckMatrixZ& M, const MoveTable& table, const MixedVertex& v);

}  // namespace doob
