#include "doob/additive.hpp"

#include <algorithm>
#include <stdexcept>

namespace doob {

namespace {

// the two Z-columns of the stacked tilde blocks of an E4 column
template <typename Elem>
std::pair<std::vector<uint8_t>, std::vector<uint8_t>> tilde_pair(const std::vector<Elem>& col) {
    std::vector<uint8_t> left, right;
    left.reserve(2 * col.size());
    right.reserve(2 * col.size());
    for (const Elem& x : col) {
        const Mat2 t = tilde(x);
        left.push_back(t[0][0]);
        left.push_back(t[1][0]);
        right.push_back(t[0][1]);
        right.push_back(t[1][1]);
    }
    return {left, right};
}

std::vector<uint8_t> hat_concat(const std::vector<GR16Elem>& col) {
    std::vector<uint8_t> out;
    out.reserve(2 * col.size());
    for (GR16Elem x : col) {
        out.push_back(static_cast<uint8_t>(x.a()));
        out.push_back(static_cast<uint8_t>(x.b()));
    }
    return out;
}

constexpr std::array<GF4Elem, 3> kK4Values = {gf4::one, gf4::omega, gf4::omega_bar};

}  // namespace

CheckMatrixZ expand_matrix(const CheckMatrixE& A) {
    CheckMatrixZ B;
    B.rows = 2 * A.rows();
    B.m = A.m();
    B.n2 = A.n();
    B.n4 = 0;
    for (const auto& col : A.a_star) {
        auto [l, r] = tilde_pair(col);
        B.d_star.push_back(std::move(l));
        B.d_star.push_back(std::move(r));
    }
    for (const auto& col : A.a_prime) {
        auto [l, r] = tilde_pair(col);
        B.d_prime.push_back(std::move(l));
        B.d_prime.push_back(std::move(r));
    }
    return B;
}

LambdaSelection select_lambdas(const CheckMatrixE& A, int n4) {
    if (n4 < 0 || n4 % 3 != 0) throw std::invalid_argument("select_lambdas: n'' must be a nonnegative multiple of 3");
    std::vector<int> eligible;
    for (int j = 0; j < A.n(); ++j) {
        const auto& col = A.a_prime[static_cast<std::size_t>(j)];
        bool zeros = true;
        for (int t = A.delta; t < A.rows(); ++t)
            zeros = zeros && col[static_cast<std::size_t>(t)].is_zero();
        if (zeros) eligible.push_back(j);
    }
    const int need = n4 / 3;
    if (need > static_cast<int>(eligible.size()))
        throw std::invalid_argument("select_lambdas: not enough columns with zeros in the last gamma rows");
    LambdaSelection sel;
    sel.indices.assign(eligible.end() - need, eligible.end());
    return sel;
}

CheckMatrixZ build_D(const CheckMatrixE& A, const LambdaSelection& sel) {
    CheckMatrixZ B = expand_matrix(A);
    std::vector<bool> drop_star(B.d_star.size(), false), drop_prime(B.d_prime.size(), false);
    CheckMatrixZ D;
    D.rows = B.rows;

    for (int j : sel.indices) {
        if (j < 0 || j >= A.n()) throw std::invalid_argument("build_D: lambda index out of range");
        const auto& lambda = A.a_prime[static_cast<std::size_t>(j)];
        for (int t = A.delta; t < A.rows(); ++t)
            if (!lambda[static_cast<std::size_t>(t)].is_zero())
                throw std::invalid_argument("build_D: lambda has a nonzero entry in the last gamma rows");
        // A* contains the same column read over E4
        std::vector<GR16Elem> lifted(lambda.size());
        for (std::size_t t = 0; t < lambda.size(); ++t) lifted[t] = symbol_lift(lambda[t]);
        const auto it = std::find(A.a_star.begin(), A.a_star.end(), lifted);
        if (it == A.a_star.end())
            throw std::invalid_argument("build_D: lifted lambda is not a column of A*");
        const auto i = static_cast<std::size_t>(it - A.a_star.begin());
        drop_star[2 * i] = drop_star[2 * i + 1] = true;
        drop_prime[2 * static_cast<std::size_t>(j)] = drop_prime[2 * static_cast<std::size_t>(j) + 1] = true;

        std::vector<GR16Elem> wl(lifted.size()), w2l(lifted.size());
        for (std::size_t t = 0; t < lifted.size(); ++t) {
            wl[t] = gr16::omega * lifted[t];
            w2l[t] = gr16::omega_bar * lifted[t];
        }
        D.d_dprime.push_back(hat_concat(lifted));
        D.d_dprime.push_back(hat_concat(wl));
        D.d_dprime.push_back(hat_concat(w2l));
    }

    for (std::size_t c = 0; c < B.d_star.size(); ++c)
        if (!drop_star[c]) D.d_star.push_back(B.d_star[c]);
    for (std::size_t c = 0; c < B.d_prime.size(); ++c)
        if (!drop_prime[c]) D.d_prime.push_back(B.d_prime[c]);

    const int removed = static_cast<int>(sel.indices.size());
    D.m = A.m() - removed;
    D.n2 = A.n() - removed;
    D.n4 = 3 * removed;
    return D;
}

CheckMatrixZ special_d77() {
    // transcribed row by row; 7 pairs then 7 singles
    static constexpr uint8_t rows[3][21] = {
        {1, 2, 2, 2, 0, 3, 3, 2, 0, 3, 1, 3, 1, 1, 1, 0, 0, 1, 2, 3, 1},
        {0, 3, 3, 0, 2, 3, 1, 1, 3, 3, 3, 0, 0, 2, 0, 1, 0, 3, 3, 3, 2},
        {2, 2, 0, 3, 3, 2, 0, 3, 1, 3, 1, 1, 1, 2, 0, 0, 1, 2, 3, 1, 1}};
    CheckMatrixZ M;
    M.rows = 3;
    M.m = 7;
    M.n2 = 0;
    M.n4 = 7;
    for (int c = 0; c < 14; ++c)
        M.d_star.push_back({rows[0][c], rows[1][c], rows[2][c]});
    for (int c = 14; c < 21; ++c)
        M.d_dprime.push_back({rows[0][c], rows[1][c], rows[2][c]});
    return M;
}

SyndromeZ syndrome_z(const CheckMatrixZ& M, const MixedVertex& v) {
    if (v.z4_pairs.size() != static_cast<std::size_t>(M.m) ||
        v.z2_pairs.size() != static_cast<std::size_t>(M.n2) ||
        v.z4_singles.size() != static_cast<std::size_t>(M.n4))
        throw std::invalid_argument("syndrome_z: ambient mismatch");
    const auto rows = static_cast<std::size_t>(M.rows);
    SyndromeZ s(rows, 0);
    for (std::size_t p = 0; p < v.z4_pairs.size(); ++p) {
        const Z4Pair pv = v.z4_pairs[p];
        if (!(pv.a | pv.b)) continue;
        const auto& cl = M.d_star[2 * p];
        const auto& cr = M.d_star[2 * p + 1];
        for (std::size_t t = 0; t < rows; ++t)
            s[t] = static_cast<uint8_t>((s[t] + pv.a * cl[t] + pv.b * cr[t]) & 3u);
    }
    if (M.n2 > 0) {
        std::vector<uint8_t> s2(rows, 0);
        for (std::size_t p = 0; p < v.z2_pairs.size(); ++p) {
            const Z2Pair pv = v.z2_pairs[p];
            if (!(pv.a | pv.b)) continue;
            const auto& cl = M.d_prime[2 * p];
            const auto& cr = M.d_prime[2 * p + 1];
            for (std::size_t t = 0; t < rows; ++t)
                s2[t] = static_cast<uint8_t>((s2[t] + pv.a * cl[t] + pv.b * cr[t]) & 1u);
        }
        for (std::size_t t = 0; t < rows; ++t)
            s[t] = static_cast<uint8_t>((s[t] + 2 * s2[t]) & 3u);
    }
    for (std::size_t j = 0; j < v.z4_singles.size(); ++j) {
        const uint8_t z = v.z4_singles[j];
        if (!z) continue;
        const auto& c = M.d_dprime[j];
        for (std::size_t t = 0; t < rows; ++t)
            s[t] = static_cast<uint8_t>((s[t] + z * c[t]) & 3u);
    }
    return s;
}

SyndromeZ move_syndrome_z(const CheckMatrixZ& M, const WeightOneMove& mv) {
    const auto rows = static_cast<std::size_t>(M.rows);
    SyndromeZ s(rows, 0);
    const auto i = static_cast<std::size_t>(mv.index);
    switch (mv.kind) {
        case WeightOneMove::Kind::ShCoord: {
            const Z4Pair pv = hat(GR16Elem(mv.value));
            const auto& cl = M.d_star.at(2 * i);
            const auto& cr = M.d_star.at(2 * i + 1);
            for (std::size_t t = 0; t < rows; ++t)
                s[t] = static_cast<uint8_t>((pv.a * cl[t] + pv.b * cr[t]) & 3u);
            break;
        }
        case WeightOneMove::Kind::K4Coord: {
            const Z2Pair pv = hat(GF4Elem(mv.value));
            const auto& cl = M.d_prime.at(2 * i);
            const auto& cr = M.d_prime.at(2 * i + 1);
            for (std::size_t t = 0; t < rows; ++t)
                s[t] = static_cast<uint8_t>((2 * ((pv.a * cl[t] + pv.b * cr[t]) & 1u)) & 3u);
            break;
        }
        case WeightOneMove::Kind::Z4Single: {
            const auto& c = M.d_dprime.at(i);
            for (std::size_t t = 0; t < rows; ++t)
                s[t] = static_cast<uint8_t>((mv.value * c[t]) & 3u);
            break;
        }
    }
    return s;
}

bool is_codeword_z(const CheckMatrixZ& M, const MixedVertex& v) {
    const SyndromeZ s = syndrome_z(M, v);
    return std::all_of(s.begin(), s.end(), [](uint8_t x) { return x == 0; });
}

uint64_t pack_syndrome(const SyndromeZ& s) {
    if (s.size() > 32) throw std::length_error("pack_syndrome: more than 32 rows");
    uint64_t key = 0;
    for (std::size_t t = 0; t < s.size(); ++t)
        key |= static_cast<uint64_t>(s[t] & 3u) << (2 * t);
    return key;
}

MoveTable build_move_table(const CheckMatrixZ& M) {
    MoveTable table;
    const auto moves = enumerate_weight_one_mixed(M.m, M.n2, M.n4);
    table.by_syndrome.reserve(moves.size());
    for (const auto& [mv, vtx] : moves) {
        (void)vtx;
        const uint64_t key = pack_syndrome(move_syndrome_z(M, mv));
        if (key == 0)
            throw std::runtime_error("build_move_table: a weight-1 move has zero syndrome");
        if (!table.by_syndrome.emplace(key, mv).second)
            throw std::runtime_error("build_move_table: duplicate syndrome (minimum distance < 3)");
    }
    return table;
}

MixedVertex decode_z(const CheckMatrixZ& M, const MoveTable& table, const MixedVertex& v) {
    const SyndromeZ s = syndrome_z(M, v);
    const uint64_t key = pack_syndrome(s);
    if (key == 0) return v;
    const auto it = table.by_syndrome.find(key);
    if (it == table.by_syndrome.end())
        throw std::runtime_error("decode_z: syndrome not covered (malformed check matrix)");
    const WeightOneMove& mv = it->second;
    MixedVertex c = v;
    const auto i = static_cast<std::size_t>(mv.index);
    switch (mv.kind) {
        case WeightOneMove::Kind::ShCoord:
            c.z4_pairs[i] = hat(unhat(c.z4_pairs[i]) - GR16Elem(mv.value));
            break;
        case WeightOneMove::Kind::K4Coord:
            c.z2_pairs[i] = hat(unhat(c.z2_pairs[i]) + GF4Elem(mv.value));
            break;
        case WeightOneMove::Kind::Z4Single:
            c.z4_singles[i] = static_cast<uint8_t>((c.z4_singles[i] + 4 - mv.value) & 3u);
            break;
    }
    return c;
}

}  // namespace doob
