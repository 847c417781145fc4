#pragma once

// GR(4^2)-linear 1-perfect codes: the check matrix A = A*|A', syndromes,
// membership, and syndrome decoding by the order-2 / order-4 case split.

#include <cstddef>
#include <vector>

#include "doob/space.hpp"

namespace doob {

inline constexpr std::size_t kDefaultColumnCap = std::size_t{1} << 16;

struct CheckMatrixE {
    int gamma = 0, delta = 0;
    std::vector<std::vector<GR16Elem>> a_star;   // columns over E4, length gamma+delta
    std::vector<std::vector<GF4Elem>> a_prime;   // columns over E2

    int rows() const { return gamma + delta; }
    int m() const { return static_cast<int>(a_star.size()); }
    int n() const { return static_cast<int>(a_prime.size()); }
};

// All nonzero columns of E2^rows whose first nonzero entry is 1, in
// lexicographic order of their digit strings; (4^rows - 1)/3 of them.
std::vector<std::vector<GF4Elem>> projective_columns(int rows);

// A_{gamma,delta}: A* holds every order-4 column whose first regular entry
// is 1 or psi and whose last gamma entries are zero divisors; A' holds the
// projective columns.  Columns are sorted lexicographically by digits.
CheckMatrixE build_check_matrix(int gamma, int delta, std::size_t column_cap = kDefaultColumnCap);

using SyndromeE = std::vector<GR16Elem>;

SyndromeE syndrome(const CheckMatrixE& M, const DoobVertex& v);  // A* x^T + 2 A' y^T
SyndromeE move_syndrome(const CheckMatrixE& M, const WeightOneMove& mv);
bool is_codeword(const CheckMatrixE& M, const DoobVertex& v);

// The unique weight-1 move whose vertex has syndrome s.  Throws on the zero
// syndrome and on syndromes no move covers (malformed matrix).
WeightOneMove decode_syndrome(const CheckMatrixE& M, const SyndromeE& s);

// Nearest codeword (distance <= 1); identity on codewords.
DoobVertex decode(const CheckMatrixE& M, const DoobVertex& v);

// 16^m 4^n / (6m+3n+1); throws std::overflow_error when it exceeds 2^63.
unsigned long long code_cardinality(long long m, long long n);

}  // namespace doob
