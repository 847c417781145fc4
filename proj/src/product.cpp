#include "doob/product.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "doob/linear.hpp"
#include "doob/params.hpp"

namespace doob {

namespace {

unsigned phi_inv(GF4Elem w) {
    for (unsigned z = 0; z < 4; ++z)
        if (kPhi[z] == w) return z;
    throw std::logic_error("phi_inv: not a bijection");
}

// extended-point codecs (1024 points each)

struct Ham5Point {
    GF4Elem x[3], f, g;
};
Ham5Point ham5_decode_idx(unsigned p) {
    Ham5Point v;
    v.g = GF4Elem(p & 3u);
    v.f = GF4Elem((p >> 2) & 3u);
    v.x[2] = GF4Elem((p >> 4) & 3u);
    v.x[1] = GF4Elem((p >> 6) & 3u);
    v.x[0] = GF4Elem((p >> 8) & 3u);
    return v;
}
unsigned ham5_index(GF4Elem x0, GF4Elem x1, GF4Elem x2, GF4Elem f, GF4Elem g) {
    return (((x0.code * 4u + x1.code) * 4u + x2.code) * 4u + f.code) * 4u + g.code;
}

struct Doob13Point {
    GR16Elem x;
    GF4Elem y, f, g;
};
Doob13Point doob13_decode_idx(unsigned p) {
    Doob13Point v;
    v.g = GF4Elem(p & 3u);
    v.f = GF4Elem((p >> 2) & 3u);
    v.y = GF4Elem((p >> 4) & 3u);
    v.x = GR16Elem((p >> 6) & 15u);
    return v;
}
unsigned doob13_index(GR16Elem x, GF4Elem y, GF4Elem f, GF4Elem g) {
    return ((x.code * 4u + y.code) * 4u + f.code) * 4u + g.code;
}

int point_dist(BlockKind kind, unsigned p, unsigned q) {
    if (kind == BlockKind::Hamming5) {
        const Ham5Point a = ham5_decode_idx(p), b = ham5_decode_idx(q);
        int d = 0;
        for (int i = 0; i < 3; ++i) d += k4_dist(a.x[i], b.x[i]);
        return d + k4_dist(a.f, b.f) + k4_dist(a.g, b.g);
    }
    const Doob13Point a = doob13_decode_idx(p), b = doob13_decode_idx(q);
    return sh_dist(a.x, b.x) + k4_dist(a.y, b.y) + k4_dist(a.f, b.f) + k4_dist(a.g, b.g);
}

}  // namespace

GF4Elem block_f0(GF4Elem x, GF4Elem y, GF4Elem z) { return x + y + z; }
GF4Elem block_g0(GF4Elem x, GF4Elem y, GF4Elem z) {
    return x + gf4::omega * y + gf4::omega_bar * z;
}
GF4Elem block_f1(GR16Elem u, GF4Elem w) {
    return kPhi[(u.a() + u.b() + phi_inv(w)) & 3u];
}
GF4Elem block_g1(GR16Elem u, GF4Elem w) {
    return kPhi[(u.a() + 2 * u.b() + 3 * phi_inv(w)) & 3u];
}

BlockCode build_block_code(BlockKind kind) {
    BlockCode code;
    code.kind = kind;
    std::vector<uint16_t> codewords;
    codewords.reserve(64);
    if (kind == BlockKind::Hamming5) {
        for (unsigned b = 0; b < 64; ++b) {
            const GF4Elem x0(b >> 4), x1((b >> 2) & 3u), x2(b & 3u);
            codewords.push_back(static_cast<uint16_t>(
                ham5_index(x0, x1, x2, block_f0(x0, x1, x2), block_g0(x0, x1, x2))));
        }
    } else {
        for (unsigned b = 0; b < 64; ++b) {
            const GR16Elem x(b >> 2);
            const GF4Elem y(b & 3u);
            codewords.push_back(static_cast<uint16_t>(
                doob13_index(x, y, block_f1(x, y), block_g1(x, y))));
        }
    }
    code.decode_table.assign(1024, 0);
    for (unsigned p = 0; p < 1024; ++p) {
        int hits = 0;
        for (uint16_t c : codewords)
            if (point_dist(kind, p, c) <= 1) {
                code.decode_table[p] = c;
                ++hits;
            }
        if (hits != 1)
            throw std::logic_error("build_block_code: block code is not 1-perfect");
    }
    return code;
}

const BlockCode& hamming5_block() {
    static const BlockCode code = build_block_code(BlockKind::Hamming5);
    return code;
}

const BlockCode& doob13_block() {
    static const BlockCode code = build_block_code(BlockKind::Doob13);
    return code;
}

ComponentCode hamming_component(int k) {
    int t = 0;
    long long len = 0;
    while (len < k) len = len * 4 + 1, ++t;
    if (len != k) throw std::invalid_argument("hamming_component: 3k+1 must be a power of 4");
    ComponentCode C;
    C.length = k;
    C.check = projective_columns(t);
    return C;
}

bool component_member(const ComponentCode& C, const std::vector<GF4Elem>& word) {
    if (word.size() != static_cast<std::size_t>(C.length))
        throw std::invalid_argument("component_member: length mismatch");
    const auto t = static_cast<std::size_t>(C.redundancy());
    for (std::size_t row = 0; row < t; ++row) {
        GF4Elem s = gf4::zero;
        for (std::size_t i = 0; i < word.size(); ++i) s = s + word[i] * C.check[i][row];
        if (!s.is_zero()) return false;
    }
    return true;
}

ComponentDecode component_decode(const ComponentCode& C, const std::vector<GF4Elem>& word) {
    if (word.size() != static_cast<std::size_t>(C.length))
        throw std::invalid_argument("component_decode: length mismatch");
    const auto t = static_cast<std::size_t>(C.redundancy());
    std::vector<GF4Elem> s(t, gf4::zero);
    for (std::size_t i = 0; i < word.size(); ++i)
        for (std::size_t row = 0; row < t; ++row) s[row] = s[row] + word[i] * C.check[i][row];
    ComponentDecode out;
    out.codeword = word;
    const auto first = std::find_if(s.begin(), s.end(), [](GF4Elem x) { return !x.is_zero(); });
    if (first == s.end()) return out;
    const GF4Elem alpha = *first;
    const GF4Elem ainv = inverse(alpha);
    std::vector<GF4Elem> col(t);
    for (std::size_t row = 0; row < t; ++row) col[row] = ainv * s[row];
    const auto it = std::find(C.check.begin(), C.check.end(), col);
    if (it == C.check.end())
        throw std::logic_error("component_decode: uncovered syndrome in a Hamming code");
    out.error_pos = static_cast<int>(it - C.check.begin());
    out.error_val = alpha;
    out.codeword[static_cast<std::size_t>(out.error_pos)] =
        out.codeword[static_cast<std::size_t>(out.error_pos)] + alpha;  // subtract = add
    return out;
}

ProductCodeSpec make_product_spec(int k, int r, std::vector<uint8_t> doob_mask) {
    if (k < 1 || r < 1) throw std::invalid_argument("make_product_spec: k, r >= 1 required");
    if (doob_mask.size() != static_cast<std::size_t>(k) * static_cast<std::size_t>(r))
        throw std::invalid_argument("make_product_spec: mask size mismatch");
    ProductCodeSpec S;
    S.k = k;
    S.r = r;
    S.m = static_cast<int>(std::count(doob_mask.begin(), doob_mask.end(), uint8_t{1}));
    S.doob_cell = std::move(doob_mask);
    S.comp_row = hamming_component(k);
    S.comp_col = hamming_component(r);
    hamming5_block();  // certify both block codes up front
    doob13_block();
    return S;
}

ProductCodeSpec make_product_spec(int k, int r, int m) {
    if (m < 0 || m > k * r) throw std::invalid_argument("make_product_spec: need 0 <= m <= k*r");
    std::vector<uint8_t> mask(static_cast<std::size_t>(k) * static_cast<std::size_t>(r), 0);
    std::fill(mask.begin(), mask.begin() + m, uint8_t{1});
    return make_product_spec(k, r, std::move(mask));
}

ProductCodeSpec product_for_mu(int mu, int m) {
    if (m > product_bound(mu))
        throw std::invalid_argument("product_for_mu: m exceeds the product bound");
    const auto [k, r] = product_kr(mu);
    return make_product_spec(static_cast<int>(k), static_cast<int>(r), m);
}

namespace {

struct ParityState {
    std::vector<GF4Elem> frow, gcol;  // row sums of f_{i,j}, column sums of g_{i,j}
    std::size_t u_at = 0;             // k4 offset of the u part
};

void parities(const ProductCodeSpec& S, const DoobVertex& X, ParityState& st) {
    if (X.sh.size() != static_cast<std::size_t>(S.ambient_m()) ||
        X.k4.size() != static_cast<std::size_t>(S.ambient_n()))
        throw std::invalid_argument("product code: ambient mismatch");
    st.frow.assign(static_cast<std::size_t>(S.k), gf4::zero);
    st.gcol.assign(static_cast<std::size_t>(S.r), gf4::zero);
    std::size_t si = 0, ki = 0;
    for (int i = 0; i < S.k; ++i)
        for (int j = 0; j < S.r; ++j) {
            const auto cell = static_cast<std::size_t>(i * S.r + j);
            GF4Elem f, g;
            if (S.doob_cell[cell]) {
                const GR16Elem x = X.sh[si++];
                const GF4Elem y = X.k4[ki++];
                f = block_f1(x, y);
                g = block_g1(x, y);
            } else {
                const GF4Elem x = X.k4[ki], y = X.k4[ki + 1], z = X.k4[ki + 2];
                ki += 3;
                f = block_f0(x, y, z);
                g = block_g0(x, y, z);
            }
            st.frow[static_cast<std::size_t>(i)] = st.frow[static_cast<std::size_t>(i)] + f;
            st.gcol[static_cast<std::size_t>(j)] = st.gcol[static_cast<std::size_t>(j)] + g;
        }
    st.u_at = ki;
}

// k4 offset and sh offset of cell (i,j)
std::pair<std::size_t, std::size_t> cell_offsets(const ProductCodeSpec& S, int ci, int cj) {
    std::size_t si = 0, ki = 0;
    for (int c = 0; c < ci * S.r + cj; ++c) {
        if (S.doob_cell[static_cast<std::size_t>(c)]) {
            ++si;
            ++ki;
        } else {
            ki += 3;
        }
    }
    return {si, ki};
}

}  // namespace

std::vector<GF4Elem> parity_f(const ProductCodeSpec& S, const DoobVertex& X) {
    ParityState st;
    parities(S, X, st);
    return st.frow;
}

std::vector<GF4Elem> parity_g(const ProductCodeSpec& S, const DoobVertex& X) {
    ParityState st;
    parities(S, X, st);
    return st.gcol;
}

bool product_membership(const ProductCodeSpec& S, const DoobVertex& X) {
    // scratch stays allocated across calls: this is the verification kernels'
    // inner loop
    static thread_local ParityState st;
    static thread_local std::vector<GF4Elem> su, sv;
    parities(S, X, st);
    su.resize(static_cast<std::size_t>(S.k));
    sv.resize(static_cast<std::size_t>(S.r));
    for (int i = 0; i < S.k; ++i)
        su[static_cast<std::size_t>(i)] =
            X.k4[st.u_at + static_cast<std::size_t>(i)] + st.frow[static_cast<std::size_t>(i)];
    for (int j = 0; j < S.r; ++j)
        sv[static_cast<std::size_t>(j)] =
            X.k4[st.u_at + static_cast<std::size_t>(S.k + j)] + st.gcol[static_cast<std::size_t>(j)];
    return component_member(S.comp_row, su) && component_member(S.comp_col, sv);
}

DoobVertex product_decode(const ProductCodeSpec& S, const DoobVertex& X) {
    ParityState st;
    parities(S, X, st);
    std::vector<GF4Elem> su(static_cast<std::size_t>(S.k)), sv(static_cast<std::size_t>(S.r));
    for (int i = 0; i < S.k; ++i)
        su[static_cast<std::size_t>(i)] =
            X.k4[st.u_at + static_cast<std::size_t>(i)] + st.frow[static_cast<std::size_t>(i)];
    for (int j = 0; j < S.r; ++j)
        sv[static_cast<std::size_t>(j)] =
            X.k4[st.u_at + static_cast<std::size_t>(S.k + j)] + st.gcol[static_cast<std::size_t>(j)];
    const ComponentDecode du = component_decode(S.comp_row, su);
    const ComponentDecode dv = component_decode(S.comp_col, sv);

    DoobVertex out = X;
    if (du.error_pos < 0 || dv.error_pos < 0) {
        // at most one of the two tails is off; snap both onto f+c', g+c''
        for (int i = 0; i < S.k; ++i)
            out.k4[st.u_at + static_cast<std::size_t>(i)] =
                st.frow[static_cast<std::size_t>(i)] + du.codeword[static_cast<std::size_t>(i)];
        for (int j = 0; j < S.r; ++j)
            out.k4[st.u_at + static_cast<std::size_t>(S.k + j)] =
                st.gcol[static_cast<std::size_t>(j)] + dv.codeword[static_cast<std::size_t>(j)];
        return out;
    }

    // both components see an error: repair block (i,j) through its block code
    const int ci = du.error_pos, cj = dv.error_pos;
    const auto cell = static_cast<std::size_t>(ci * S.r + cj);
    const auto [si, ki] = cell_offsets(S, ci, cj);
    if (S.doob_cell[cell]) {
        const GR16Elem x = X.sh[si];
        const GF4Elem y = X.k4[ki];
        const unsigned ext = doob13_index(x, y, block_f1(x, y) + du.error_val,
                                          block_g1(x, y) + dv.error_val);
        const Doob13Point z = doob13_decode_idx(doob13_block().decode_table[ext]);
        if (!(z.f == block_f1(x, y) + du.error_val && z.g == block_g1(x, y) + dv.error_val))
            throw std::logic_error("product_decode: block decode moved a tail coordinate");
        out.sh[si] = z.x;
        out.k4[ki] = z.y;
    } else {
        const GF4Elem x = X.k4[ki], y = X.k4[ki + 1], z3 = X.k4[ki + 2];
        const unsigned ext = ham5_index(x, y, z3, block_f0(x, y, z3) + du.error_val,
                                        block_g0(x, y, z3) + dv.error_val);
        const Ham5Point z = ham5_decode_idx(hamming5_block().decode_table[ext]);
        if (!(z.f == block_f0(x, y, z3) + du.error_val && z.g == block_g0(x, y, z3) + dv.error_val))
            throw std::logic_error("product_decode: block decode moved a tail coordinate");
        out.k4[ki] = z.x[0];
        out.k4[ki + 1] = z.x[1];
        out.k4[ki + 2] = z.x[2];
    }
    return out;
}

int product_log2_cardinality(const ProductCodeSpec& S) {
    return 6 * S.k * S.r + 2 * (S.k - S.comp_row.redundancy()) +
           2 * (S.r - S.comp_col.redundancy());
}

unsigned long long product_cardinality(const ProductCodeSpec& S) {
    const int e = product_log2_cardinality(S);
    if (e > 63) throw std::overflow_error("product_cardinality: result exceeds 2^63");
    return 1ull << e;
}

}  // namespace doob
