#include "doob/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace doob {

namespace {

using nlohmann::json;

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= text.size(); ++i)
        if (i == text.size() || text[i] == sep) {
            parts.push_back(text.substr(start, i - start));
            start = i + 1;
        }
    return parts;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::pair<unsigned, unsigned> parse_digit_pair(std::string_view tok, unsigned modulus) {
    tok = trim(tok);
    if (tok.empty() || tok.size() > 2)
        throw std::invalid_argument("vertex parse: element '" + std::string(tok) +
                                    "' is not one or two digits");
    unsigned a = 0, b = 0;
    for (char c : tok)
        if (c < '0' || c > '9')
            throw std::invalid_argument("vertex parse: non-digit in element '" + std::string(tok) + "'");
    if (tok.size() == 1) {
        b = static_cast<unsigned>(tok[0] - '0');
    } else {
        a = static_cast<unsigned>(tok[0] - '0');
        b = static_cast<unsigned>(tok[1] - '0');
    }
    if (a >= modulus || b >= modulus)
        throw std::invalid_argument("vertex parse: digit out of range in '" + std::string(tok) + "'");
    return {a, b};
}

std::vector<std::string_view> coord_tokens(std::string_view part) {
    part = trim(part);
    if (part.empty()) return {};
    return split(part, ',');
}

template <typename Col>
json columns_to_json_digits(const std::vector<Col>& cols) {
    json arr = json::array();
    for (const auto& col : cols) {
        json c = json::array();
        for (const auto& e : col) c.push_back(to_digits(e));
        arr.push_back(std::move(c));
    }
    return arr;
}

json columns_to_json_ints(const std::vector<std::vector<uint8_t>>& cols) {
    json arr = json::array();
    for (const auto& col : cols) {
        json c = json::array();
        for (uint8_t e : col) c.push_back(static_cast<int>(e));
        arr.push_back(std::move(c));
    }
    return arr;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

GR16Elem e4_from_digits(const std::string& s) {
    const auto [a, b] = parse_digit_pair(s, 4);
    return GR16Elem::from_coeffs(a, b);
}

GF4Elem e2_from_digits(const std::string& s) {
    const auto [a, b] = parse_digit_pair(s, 2);
    return GF4Elem::from_coeffs(a, b);
}

json parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("code file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || doc.value("format", "") != "doob-code")
        throw std::invalid_argument("code file: missing format marker 'doob-code'");
    if (doc.value("version", -1) != kFormatVersion)
        throw std::invalid_argument("code file: unsupported format version");
    return doc;
}

std::vector<std::vector<uint8_t>> int_columns(const json& arr, int rows, unsigned modulus,
                                              const char* what) {
    std::vector<std::vector<uint8_t>> cols;
    for (const auto& jc : arr) {
        std::vector<uint8_t> col;
        for (const auto& je : jc) {
            const int v = je.get<int>();
            if (v < 0 || static_cast<unsigned>(v) >= modulus)
                throw std::invalid_argument(std::string("code file: ") + what + " entry out of range");
            col.push_back(static_cast<uint8_t>(v));
        }
        if (static_cast<int>(col.size()) != rows)
            throw std::invalid_argument(std::string("code file: ") + what + " column length mismatch");
        cols.push_back(std::move(col));
    }
    return cols;
}

}  // namespace

std::string vertex_to_text(const DoobVertex& v) {
    std::string out;
    for (std::size_t i = 0; i < v.sh.size(); ++i) {
        if (i) out += ',';
        out += to_digits(v.sh[i]);
    }
    out += '|';
    for (std::size_t i = 0; i < v.k4.size(); ++i) {
        if (i) out += ',';
        out += to_digits(v.k4[i]);
    }
    return out;
}

std::string vertex_to_text(const MixedVertex& v) {
    std::string out;
    for (std::size_t i = 0; i < v.z4_pairs.size(); ++i) {
        if (i) out += ',';
        out += to_digits(unhat(v.z4_pairs[i]));
    }
    out += '|';
    for (std::size_t i = 0; i < v.z2_pairs.size(); ++i) {
        if (i) out += ',';
        out += to_digits(unhat(v.z2_pairs[i]));
    }
    out += '|';
    for (std::size_t i = 0; i < v.z4_singles.size(); ++i) {
        if (i) out += ',';
        out += static_cast<char>('0' + v.z4_singles[i]);
    }
    return out;
}

DoobVertex parse_doob_vertex(std::string_view text, int m, int n) {
    const auto parts = split(text, '|');
    if (parts.size() != 2)
        throw std::invalid_argument("vertex parse: expected two |-separated parts");
    const auto sh_toks = coord_tokens(parts[0]);
    const auto k4_toks = coord_tokens(parts[1]);
    if (static_cast<int>(sh_toks.size()) != m || static_cast<int>(k4_toks.size()) != n)
        throw std::invalid_argument("vertex parse: coordinate counts do not match the ambient");
    DoobVertex v;
    for (auto tok : sh_toks) {
        const auto [a, b] = parse_digit_pair(tok, 4);
        v.sh.push_back(GR16Elem::from_coeffs(a, b));
    }
    for (auto tok : k4_toks) {
        const auto [a, b] = parse_digit_pair(tok, 2);
        v.k4.push_back(GF4Elem::from_coeffs(a, b));
    }
    return v;
}

MixedVertex parse_mixed_vertex(std::string_view text, const MixedAmbient& ambient) {
    const auto parts = split(text, '|');
    if (parts.size() != 3)
        throw std::invalid_argument("vertex parse: expected three |-separated parts");
    const auto p4 = coord_tokens(parts[0]);
    const auto p2 = coord_tokens(parts[1]);
    const auto ps = coord_tokens(parts[2]);
    if (static_cast<int>(p4.size()) != ambient.m || static_cast<int>(p2.size()) != ambient.n2 ||
        static_cast<int>(ps.size()) != ambient.n4)
        throw std::invalid_argument("vertex parse: coordinate counts do not match the ambient");
    MixedVertex v;
    for (auto tok : p4) {
        const auto [a, b] = parse_digit_pair(tok, 4);
        v.z4_pairs.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
    }
    for (auto tok : p2) {
        const auto [a, b] = parse_digit_pair(tok, 2);
        v.z2_pairs.push_back({static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
    }
    for (auto tok : ps) {
        tok = trim(tok);
        if (tok.size() != 1 || tok[0] < '0' || tok[0] > '3')
            throw std::invalid_argument("vertex parse: Z4 single must be one digit 0..3");
        v.z4_singles.push_back(static_cast<uint8_t>(tok[0] - '0'));
    }
    return v;
}

std::string serialize_linear(const CheckMatrixE& M) {
    json doc;
    doc["format"] = "doob-code";
    doc["version"] = kFormatVersion;
    doc["family"] = "linear";
    doc["gamma"] = M.gamma;
    doc["delta"] = M.delta;
    doc["a_star"] = columns_to_json_digits(M.a_star);
    doc["a_prime"] = columns_to_json_digits(M.a_prime);
    return dump(doc);
}

std::string serialize_additive(const CheckMatrixZ& M) {
    json doc;
    doc["format"] = "doob-code";
    doc["version"] = kFormatVersion;
    doc["family"] = "additive";
    doc["rows"] = M.rows;
    doc["m"] = M.m;
    doc["n2"] = M.n2;
    doc["n4"] = M.n4;
    doc["d_star"] = columns_to_json_ints(M.d_star);
    doc["d_prime"] = columns_to_json_ints(M.d_prime);
    doc["d_dprime"] = columns_to_json_ints(M.d_dprime);
    return dump(doc);
}

std::string serialize_product(int k, int r, int m) {
    json doc;
    doc["format"] = "doob-code";
    doc["version"] = kFormatVersion;
    doc["family"] = "product";
    doc["k"] = k;
    doc["r"] = r;
    doc["m"] = m;
    json phi = json::array();
    for (GF4Elem e : kPhi) phi.push_back(to_digits(e));
    doc["phi"] = phi;
    doc["component_prime"] = "hamming-" + std::to_string(k);
    doc["component_dprime"] = "hamming-" + std::to_string(r);
    return dump(doc);
}

MixedAmbient LoadedCode::ambient() const {
    if (family == "linear") return {linear.m(), linear.n(), 0};
    if (family == "additive") return {additive.m, additive.n2, additive.n4};
    return {product.ambient_m(), product.ambient_n(), 0};
}

MixedPredicate LoadedCode::membership() const {
    if (family == "linear") {
        const CheckMatrixE M = linear;
        return [M](const MixedVertex& v) {
            static thread_local DoobVertex scratch;
            from_mixed_into(v, scratch);
            return is_codeword(M, scratch);
        };
    }
    if (family == "additive") {
        const CheckMatrixZ M = additive;
        return [M](const MixedVertex& v) { return is_codeword_z(M, v); };
    }
    const ProductCodeSpec S = product;
    return [S](const MixedVertex& v) {
        static thread_local DoobVertex scratch;
        from_mixed_into(v, scratch);
        return product_membership(S, scratch);
    };
}

int LoadedCode::log2_cardinality() const {
    if (family == "linear") {
        const auto mu = mu_for(linear.m(), linear.n());
        if (!mu) throw std::invalid_argument("log2_cardinality: inadmissible ambient");
        return static_cast<int>(2 * (2 * linear.m() + linear.n() - *mu));
    }
    if (family == "additive") {
        // |C| = |space| / ball for a perfect kernel code
        const auto g = group_params({additive.m, additive.n2, additive.n4});
        if (!g.raw) throw std::invalid_argument("log2_cardinality: ball size is not a power of two");
        return 4 * additive.m + 2 * (additive.n2 + additive.n4) - (g.raw->Gamma + 2 * g.raw->Delta);
    }
    return product_log2_cardinality(product);
}

std::pair<MixedVertex, int> LoadedCode::decode_vertex(const MixedVertex& v) const {
    if (family == "linear") {
        const DoobVertex c = decode(linear, from_mixed(v));
        return {to_mixed(c), doob_dist(c, from_mixed(v))};
    }
    if (family == "additive") {
        const MoveTable table = build_move_table(additive);
        const MixedVertex c = decode_z(additive, table, v);
        return {c, mixed_dist(c, v)};
    }
    const DoobVertex c = product_decode(product, from_mixed(v));
    return {to_mixed(c), doob_dist(c, from_mixed(v))};
}

LoadedCode build_code(const CodeDescriptor& d) {
    LoadedCode code;
    if (d.family == "linear") {
        code.family = "linear";
        code.linear = build_check_matrix(d.gamma, d.delta);
    } else if (d.family == "additive") {
        const auto [m, n] = linear_size(d.gamma, d.delta);
        if (d.n4 > 0) {
            const DoobParams target{m - d.n4 / 3, n - d.n4 / 3, d.n4};
            const auto g = group_params(target);
            if (!g.ok())
                throw std::invalid_argument(std::string("build additive: target parameters rejected: ") +
                                            describe(g.reject));
        }
        code.family = "additive";
        const CheckMatrixE A = build_check_matrix(d.gamma, d.delta);
        code.additive = d.n4 == 0 ? expand_matrix(A) : build_D(A, select_lambdas(A, d.n4));
    } else if (d.family == "special-d77") {
        code.family = "additive";
        code.additive = special_d77();
    } else if (d.family == "product") {
        code.family = "product";
        code.product = product_for_mu(d.mu, d.m);
    } else {
        throw std::invalid_argument("build_code: unknown family '" + d.family + "'");
    }
    return code;
}

std::string serialize_code(const LoadedCode& code) {
    if (code.family == "linear") return serialize_linear(code.linear);
    if (code.family == "additive") return serialize_additive(code.additive);
    return serialize_product(code.product.k, code.product.r, code.product.m);
}

LoadedCode parse_code_file(const std::string& json_text) {
    const json doc = parse_document(json_text);
    const std::string family = doc.value("family", "");
    LoadedCode code;
    if (family == "linear") {
        code.family = "linear";
        CheckMatrixE& M = code.linear;
        M.gamma = doc.at("gamma").get<int>();
        M.delta = doc.at("delta").get<int>();
        if (M.gamma < 0 || M.delta < 1)
            throw std::invalid_argument("code file: need gamma >= 0, delta >= 1");
        for (const auto& jc : doc.at("a_star")) {
            std::vector<GR16Elem> col;
            for (const auto& je : jc) col.push_back(e4_from_digits(je.get<std::string>()));
            if (static_cast<int>(col.size()) != M.rows())
                throw std::invalid_argument("code file: a_star column length mismatch");
            M.a_star.push_back(std::move(col));
        }
        for (const auto& jc : doc.at("a_prime")) {
            std::vector<GF4Elem> col;
            for (const auto& je : jc) col.push_back(e2_from_digits(je.get<std::string>()));
            if (static_cast<int>(col.size()) != M.rows())
                throw std::invalid_argument("code file: a_prime column length mismatch");
            M.a_prime.push_back(std::move(col));
        }
    } else if (family == "additive") {
        code.family = "additive";
        CheckMatrixZ& M = code.additive;
        M.rows = doc.at("rows").get<int>();
        M.m = doc.at("m").get<int>();
        M.n2 = doc.at("n2").get<int>();
        M.n4 = doc.at("n4").get<int>();
        if (M.rows < 1 || M.m < 0 || M.n2 < 0 || M.n4 < 0)
            throw std::invalid_argument("code file: bad additive shape");
        M.d_star = int_columns(doc.at("d_star"), M.rows, 4, "d_star");
        M.d_prime = int_columns(doc.at("d_prime"), M.rows, 2, "d_prime");
        M.d_dprime = int_columns(doc.at("d_dprime"), M.rows, 4, "d_dprime");
        if (M.d_star.size() != 2 * static_cast<std::size_t>(M.m) ||
            M.d_prime.size() != 2 * static_cast<std::size_t>(M.n2) ||
            M.d_dprime.size() != static_cast<std::size_t>(M.n4))
            throw std::invalid_argument("code file: column groups disagree with (m,n2,n4)");
    } else if (family == "product") {
        code.family = "product";
        const int k = doc.at("k").get<int>(), r = doc.at("r").get<int>(), m = doc.at("m").get<int>();
        json phi = json::array();
        for (GF4Elem e : kPhi) phi.push_back(to_digits(e));
        if (doc.at("phi") != phi)
            throw std::invalid_argument("code file: unsupported phi table");
        if (doc.at("component_prime").get<std::string>() != "hamming-" + std::to_string(k) ||
            doc.at("component_dprime").get<std::string>() != "hamming-" + std::to_string(r))
            throw std::invalid_argument("code file: unsupported component codes");
        code.product = make_product_spec(k, r, m);
    } else {
        throw std::invalid_argument("code file: unknown family '" + family + "'");
    }
    return code;
}

LoadedCode load_code_file(const std::string& path) { return parse_code_file(read_file(path)); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string params_table(int mu) {
    if (mu < 1) throw std::invalid_argument("params_table: mu >= 1 required");
    const long long diameter = ((1ll << (2 * mu)) - 1) / 3;
    std::ostringstream out;
    out << "mu=" << mu << ": 2m+n = " << diameter << "\n";
    for (long long m = 0; 2 * m <= diameter; ++m) {
        const long long n = diameter - 2 * m;
        out << "  m=" << m << " n=" << n << " ";
        const auto tags = classify(m, n);
        for (std::size_t i = 0; i < tags.size(); ++i) {
            if (i) out << " ";
            out << tags[i].str();
        }
        out << "\n";
    }
    return out.str();
}

std::string params_triple_report(const DoobParams& p) {
    std::ostringstream out;
    out << "(m=" << p.m << ", n'=" << p.n2 << ", n''=" << p.n4 << "): ";
    const auto g = group_params(p);
    if (!g.ok()) {
        out << "rejected: " << describe(g.reject);
        if (g.raw) out << " [equations (1)-(2) give Gamma=" << g.raw->Gamma << ", Delta=" << g.raw->Delta << "]";
        out << "\n";
        return out.str();
    }
    out << "admissible, Gamma=" << g.params->Gamma << ", Delta=" << g.params->Delta << "\n";
    if (g.params->Delta % 2 == 0) {
        out << "  additive even-Delta construction: build --family additive --gamma "
            << g.params->Gamma / 2 << " --delta " << g.params->Delta / 2 << " --n4 " << p.n4 << "\n";
    } else if (p.m == 7 && p.n2 == 0 && p.n4 == 7) {
        out << "  covered by the built-in d77 code (build --family special-d77)\n";
    } else {
        out << "  additive odd-Delta: open\n";
    }
    return out.str();
}

std::string report_json(const CoverageReport& r) {
    json doc;
    doc["mode"] = "coverage";
    doc["total_moves"] = r.total_moves;
    doc["distinct_syndromes"] = r.distinct_syndromes;
    doc["zero_syndrome_moves"] = r.zero_syndrome_moves;
    doc["subgroup_order"] = r.subgroup_order;
    doc["expected_ball"] = r.expected_ball;
    doc["verdict"] = r.pass() ? "pass" : "fail";
    return dump(doc);
}

std::string report_json(const PartitionReport& r) {
    json doc;
    doc["mode"] = "exhaustive";
    doc["space_size"] = r.space_size;
    doc["codeword_count"] = r.codeword_count;
    doc["uncovered"] = r.uncovered;
    doc["overcovered"] = r.overcovered;
    doc["ball"] = r.ball;
    doc["verdict"] = r.pass() ? "pass" : "fail";
    return dump(doc);
}

std::string report_json(const SampleReport& r) {
    json doc;
    doc["mode"] = "sample";
    doc["samples"] = r.samples;
    doc["seed"] = r.seed;
    doc["generator"] = "splitmix64";
    doc["failure_count"] = r.failure_count;
    json fails = json::array();
    for (const auto& f : r.failures) {
        json jf;
        jf["vertex_index"] = f.vertex_index;
        jf["census"] = f.census;
        fails.push_back(std::move(jf));
    }
    doc["failures"] = fails;
    doc["verdict"] = r.pass() ? "pass" : "fail";
    return dump(doc);
}

}  // namespace doob
