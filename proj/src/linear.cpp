#include "doob/linear.hpp"

#include <algorithm>
#include <stdexcept>

#include "doob/params.hpp"

namespace doob {

namespace {

constexpr std::array<GR16Elem, 4> kZeroDivisors = {
    gr16::zero, gr16::two, gr16::two * gr16::omega, gr16::two * gr16::omega_bar};

bool column_less_e(const std::vector<GR16Elem>& x, const std::vector<GR16Elem>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

bool column_less_f(const std::vector<GF4Elem>& x, const std::vector<GF4Elem>& y) {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

// Enumerates the cartesian product of per-row candidate lists.
template <typename Elem, typename Sink>
void odometer(const std::vector<std::vector<Elem>>& choices, Sink&& sink) {
    std::vector<std::size_t> pos(choices.size(), 0);
    std::vector<Elem> col(choices.size());
    for (;;) {
        for (std::size_t i = 0; i < choices.size(); ++i) col[i] = choices[i][pos[i]];
        sink(col);
        std::size_t i = 0;
        while (i < choices.size() && ++pos[i] == choices[i].size()) pos[i++] = 0;
        if (i == choices.size()) break;
    }
}

}  // namespace

std::vector<std::vector<GF4Elem>> projective_columns(int rows) {
    if (rows < 1) throw std::invalid_argument("projective_columns: rows >= 1 required");
    if (rows > 15) throw std::length_error("projective_columns: rows too large");
    std::vector<std::vector<GF4Elem>> cols;
    const std::vector<GF4Elem> all = {gf4::zero, gf4::one, gf4::omega, gf4::omega_bar};
    for (int p = 0; p < rows; ++p) {
        std::vector<std::vector<GF4Elem>> choices(static_cast<std::size_t>(rows));
        for (int i = 0; i < p; ++i) choices[static_cast<std::size_t>(i)] = {gf4::zero};
        choices[static_cast<std::size_t>(p)] = {gf4::one};
        for (int i = p + 1; i < rows; ++i) choices[static_cast<std::size_t>(i)] = all;
        odometer(choices, [&](const std::vector<GF4Elem>& c) { cols.push_back(c); });
    }
    std::sort(cols.begin(), cols.end(), column_less_f);
    return cols;
}

CheckMatrixE build_check_matrix(int gamma, int delta, std::size_t column_cap) {
    if (gamma < 0 || delta < 1)
        throw std::invalid_argument("build_check_matrix: need gamma >= 0, delta >= 1");
    const auto [want_m, want_n] = linear_size(gamma, delta);
    if (static_cast<unsigned long long>(want_m + want_n) > column_cap)
        throw std::length_error("build_check_matrix: column cap exceeded");

    CheckMatrixE M;
    M.gamma = gamma;
    M.delta = delta;
    const int rows = gamma + delta;
    const std::vector<GR16Elem> zd(kZeroDivisors.begin(), kZeroDivisors.end());
    std::vector<GR16Elem> all(16);
    for (unsigned c = 0; c < 16; ++c) all[c] = GR16Elem(c);

    // First regular entry sits at row p (necessarily above the gamma zone);
    // rows before it are zero divisors, rows after are unconstrained except
    // for the trailing gamma rows.
    for (int p = 0; p < delta; ++p) {
        std::vector<std::vector<GR16Elem>> choices(static_cast<std::size_t>(rows));
        for (int i = 0; i < p; ++i) choices[static_cast<std::size_t>(i)] = zd;
        choices[static_cast<std::size_t>(p)] = {gr16::one, gr16::psi};
        for (int i = p + 1; i < delta; ++i) choices[static_cast<std::size_t>(i)] = all;
        for (int i = delta; i < rows; ++i) choices[static_cast<std::size_t>(i)] = zd;
        odometer(choices, [&](const std::vector<GR16Elem>& c) { M.a_star.push_back(c); });
    }
    std::sort(M.a_star.begin(), M.a_star.end(), column_less_e);
    M.a_prime = projective_columns(rows);

    if (M.m() != want_m || M.n() != want_n)
        throw std::logic_error("build_check_matrix: column count mismatch");
    return M;
}

SyndromeE syndrome(const CheckMatrixE& M, const DoobVertex& v) {
    if (v.sh.size() != static_cast<std::size_t>(M.m()) ||
        v.k4.size() != static_cast<std::size_t>(M.n()))
        throw std::invalid_argument("syndrome: ambient mismatch");
    const auto rows = static_cast<std::size_t>(M.rows());
    SyndromeE s(rows, gr16::zero);
    for (std::size_t i = 0; i < v.sh.size(); ++i) {
        if (v.sh[i].is_zero()) continue;
        for (std::size_t t = 0; t < rows; ++t) s[t] = s[t] + v.sh[i] * M.a_star[i][t];
    }
    std::vector<GF4Elem> s2(rows, gf4::zero);
    for (std::size_t j = 0; j < v.k4.size(); ++j) {
        if (v.k4[j].is_zero()) continue;
        for (std::size_t t = 0; t < rows; ++t) s2[t] = s2[t] + v.k4[j] * M.a_prime[j][t];
    }
    for (std::size_t t = 0; t < rows; ++t) s[t] = s[t] + two_lift(s2[t]);
    return s;
}

SyndromeE move_syndrome(const CheckMatrixE& M, const WeightOneMove& mv) {
    const auto rows = static_cast<std::size_t>(M.rows());
    SyndromeE s(rows, gr16::zero);
    const auto i = static_cast<std::size_t>(mv.index);
    switch (mv.kind) {
        case WeightOneMove::Kind::ShCoord:
            for (std::size_t t = 0; t < rows; ++t) s[t] = GR16Elem(mv.value) * M.a_star.at(i)[t];
            break;
        case WeightOneMove::Kind::K4Coord:
            for (std::size_t t = 0; t < rows; ++t)
                s[t] = two_lift(GF4Elem(mv.value) * M.a_prime.at(i)[t]);
            break;
        default:
            throw std::invalid_argument("move_syndrome: no Z4 singles in an E-matrix ambient");
    }
    return s;
}

bool is_codeword(const CheckMatrixE& M, const DoobVertex& v) {
    const SyndromeE s = syndrome(M, v);
    return std::all_of(s.begin(), s.end(), [](GR16Elem x) { return x.is_zero(); });
}

WeightOneMove decode_syndrome(const CheckMatrixE& M, const SyndromeE& s) {
    if (s.size() != static_cast<std::size_t>(M.rows()))
        throw std::invalid_argument("decode_syndrome: syndrome length mismatch");
    const auto first_regular = std::find_if(s.begin(), s.end(), [](GR16Elem x) { return is_regular(x); });
    for (std::size_t t = s.size() - static_cast<std::size_t>(M.gamma); t < s.size(); ++t)
        if (is_regular(s[t]))
            throw std::invalid_argument("decode_syndrome: inadmissible syndrome (regular entry in the last gamma rows)");

    if (first_regular == s.end()) {
        // order <= 2: s = 2t for t over E2; find t = alpha * (column of A')
        std::vector<GF4Elem> t(s.size());
        bool zero = true;
        for (std::size_t i = 0; i < s.size(); ++i) {
            t[i] = GF4Elem::from_coeffs(s[i].a() / 2, s[i].b() / 2);
            zero = zero && t[i].is_zero();
        }
        if (zero) throw std::invalid_argument("decode_syndrome: zero syndrome");
        const auto first = std::find_if(t.begin(), t.end(), [](GF4Elem x) { return !x.is_zero(); });
        const GF4Elem alpha = *first;
        const GF4Elem ainv = inverse(alpha);
        std::vector<GF4Elem> col(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) col[i] = ainv * t[i];
        const auto it = std::find(M.a_prime.begin(), M.a_prime.end(), col);
        if (it == M.a_prime.end())
            throw std::invalid_argument("decode_syndrome: syndrome not covered (malformed matrix)");
        return {WeightOneMove::Kind::K4Coord, static_cast<int>(it - M.a_prime.begin()),
                static_cast<uint8_t>(alpha.code)};
    }

    // order 4: the first regular entry is beta or psi*beta; s = beta * column of A*
    const auto [beta, psi_factor] = unit_decompose(*first_regular);
    (void)psi_factor;
    const GR16Elem binv = inverse(beta);
    std::vector<GR16Elem> col(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) col[i] = binv * s[i];
    const auto it = std::find(M.a_star.begin(), M.a_star.end(), col);
    if (it == M.a_star.end())
        throw std::invalid_argument("decode_syndrome: syndrome not covered (malformed matrix)");
    return {WeightOneMove::Kind::ShCoord, static_cast<int>(it - M.a_star.begin()),
            static_cast<uint8_t>(beta.code)};
}

DoobVertex decode(const CheckMatrixE& M, const DoobVertex& v) {
    const SyndromeE s = syndrome(M, v);
    if (std::all_of(s.begin(), s.end(), [](GR16Elem x) { return x.is_zero(); })) return v;
    const WeightOneMove mv = decode_syndrome(M, s);
    DoobVertex c = v;
    if (mv.kind == WeightOneMove::Kind::ShCoord)
        c.sh[static_cast<std::size_t>(mv.index)] =
            c.sh[static_cast<std::size_t>(mv.index)] - GR16Elem(mv.value);
    else
        c.k4[static_cast<std::size_t>(mv.index)] =
            c.k4[static_cast<std::size_t>(mv.index)] + GF4Elem(mv.value);
    return c;
}

unsigned long long code_cardinality(long long m, long long n) {
    const auto mu = mu_for(m, n);
    if (!mu) throw std::invalid_argument("code_cardinality: 2m+n is not an admissible diameter");
    const long long e = 2 * m + n - *mu;  // |C| = 4^e
    if (e > 31) throw std::overflow_error("code_cardinality: result exceeds 2^63");
    return 1ull << (2 * e);
}

}  // namespace doob
