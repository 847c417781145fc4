// doobcode: build, classify, verify, decode and enumerate 1-perfect codes
// in Doob graphs D(m,n).
//
// Exit status: 0 pass, 1 verification failure, 2 usage/parameter error.

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "doob/io.hpp"

using namespace doob;

namespace {

struct VerifyOpts {
    std::string file;
    std::string mode = "coverage";
    uint64_t samples = 10000;
    uint64_t seed = 1;
    uint64_t cap = kDefaultSpaceCap;
    std::string report_path;
};

int run_params(std::optional<int> mu, std::optional<long long> m, std::optional<long long> n,
               std::optional<long long> n2, std::optional<long long> n4) {
    if (mu) {
        std::cout << params_table(*mu);
        return 0;
    }
    if (m && (n2 || n4)) {
        std::cout << params_triple_report({*m, n2.value_or(0), n4.value_or(0)});
        return 0;
    }
    if (m && n) {
        if (!mu_for(*m, *n)) {
            std::cout << "(m=" << *m << ", n=" << *n
                      << "): rejected, 2m+n is not an admissible diameter (4^mu-1)/3\n";
            return 2;
        }
        std::cout << "(m=" << *m << ", n=" << *n << "):";
        for (const auto& tag : classify(*m, *n)) std::cout << " " << tag.str();
        std::cout << "\n";
        return 0;
    }
    std::cerr << "params: give --mu, or -m with -n, or -m with --n2/--n4\n";
    return 2;
}

int run_build(const CodeDescriptor& d, const std::string& out_path) {
    const LoadedCode code = build_code(d);
    write_file(out_path, serialize_code(code));
    const MixedAmbient amb = code.ambient();
    std::cout << "wrote " << out_path << ": family=" << code.family << " D(" << amb.m << ","
              << amb.n2 + amb.n4 << ")";
    if (amb.n4) std::cout << " [n'=" << amb.n2 << ", n''=" << amb.n4 << "]";
    std::cout << " log2|C|=" << code.log2_cardinality() << "\n";
    return 0;
}

int run_verify(const VerifyOpts& opt) {
    const LoadedCode code = load_code_file(opt.file);
    std::string summary, json;
    bool pass = false;
    if (opt.mode == "coverage") {
        if (code.family == "product")
            throw std::invalid_argument("coverage mode applies to kernel codes (linear/additive)");
        const CoverageReport rep = code.family == "linear" ? verify_coverage(code.linear)
                                                           : verify_coverage(code.additive);
        pass = rep.pass();
        summary = rep.summary();
        json = report_json(rep);
    } else if (opt.mode == "exhaustive") {
        const PartitionReport rep = verify_exhaustive(code.membership(), code.ambient(), opt.cap);
        pass = rep.pass();
        summary = rep.summary();
        json = report_json(rep);
    } else if (opt.mode == "sample") {
        const SampleReport rep =
            verify_sampled(code.membership(), code.ambient(), opt.samples, opt.seed);
        pass = rep.pass();
        summary = rep.summary();
        json = report_json(rep);
    } else {
        throw std::invalid_argument("verify: unknown mode '" + opt.mode + "'");
    }
    std::cout << summary << "\n";
    if (!opt.report_path.empty()) write_file(opt.report_path, json);
    return pass ? 0 : 1;
}

int run_decode(const std::string& file, const std::string& vertex_text) {
    const LoadedCode code = load_code_file(file);
    const MixedAmbient amb = code.ambient();
    MixedVertex v;
    if (code.family == "additive")
        v = parse_mixed_vertex(vertex_text, amb);
    else
        v = to_mixed(parse_doob_vertex(vertex_text, amb.m, amb.n2));
    const auto [c, dist] = code.decode_vertex(v);
    const std::string ctext =
        code.family == "additive" ? vertex_to_text(c) : vertex_to_text(from_mixed(c));
    std::cout << "codeword: " << ctext << "\n";
    std::cout << "distance: " << dist << "\n";
    return 0;
}

int run_enumerate(const std::string& file, const std::string& out_path, uint64_t cap) {
    const LoadedCode code = load_code_file(file);
    const int log2card = code.log2_cardinality();
    if (log2card >= 63 || (uint64_t{1} << log2card) > cap)
        throw std::invalid_argument("enumerate: cardinality 2^" + std::to_string(log2card) +
                                    " exceeds the cap");
    const MixedAmbient amb = code.ambient();
    const MixedPredicate member = code.membership();
    std::vector<std::string> lines;
    for (uint64_t i = 0; i < amb.size(); ++i) {
        const MixedVertex v = amb.vertex(i);
        if (!member(v)) continue;
        lines.push_back(code.family == "additive" ? vertex_to_text(v)
                                                  : vertex_to_text(from_mixed(v)));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const auto& l : lines) {
        out += l;
        out += '\n';
    }
    write_file(out_path, out);
    std::cout << "wrote " << out_path << ": " << lines.size() << " codewords\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"1-perfect codes in Doob graphs D(m,n)"};
    app.require_subcommand(1);
    int status = 0;

    // params
    auto* params = app.add_subcommand("params", "classify (m,n) or check an (m,n',n'') triple");
    std::optional<int> p_mu;
    std::optional<long long> p_m, p_n, p_n2, p_n4;
    params->add_option("--mu", p_mu, "diameter parameter: table over all m");
    params->add_option("-m", p_m, "Shrikhande coordinate count");
    params->add_option("-n", p_n, "total K4 coordinate count");
    params->add_option("--n2", p_n2, "E2-pair count n'");
    params->add_option("--n4", p_n4, "Z4-single count n''");
    params->callback([&] { status = run_params(p_mu, p_m, p_n, p_n2, p_n4); });

    // build
    auto* build = app.add_subcommand("build", "construct a code and write its file");
    CodeDescriptor desc;
    std::string out_path;
    build->add_option("--family", desc.family, "linear | additive | special-d77 | product")
        ->required();
    build->add_option("--gamma", desc.gamma, "linear/additive parameter gamma");
    build->add_option("--delta", desc.delta, "linear/additive parameter delta");
    build->add_option("--n4", desc.n4, "additive: number of Z4-single coordinates");
    build->add_option("--mu", desc.mu, "product: diameter parameter");
    build->add_option("-m", desc.m, "product: number of Doob blocks");
    build->add_option("-o", out_path, "output file")->required();
    build->callback([&] { status = run_build(desc, out_path); });

    // verify
    auto* verify = app.add_subcommand("verify", "run a perfectness certificate");
    VerifyOpts vopt;
    verify->add_option("file", vopt.file, "code file")->required();
    verify->add_option("--mode", vopt.mode, "coverage | exhaustive | sample");
    verify->add_option("--sample", vopt.samples, "sample count for --mode sample");
    verify->add_option("--seed", vopt.seed, "seed for --mode sample");
    verify->add_option("--cap", vopt.cap, "space-size cap for --mode exhaustive");
    verify->add_option("-o", vopt.report_path, "write the machine-readable report here");
    verify->callback([&] { status = run_verify(vopt); });

    // decode
    auto* decode = app.add_subcommand("decode", "decode a vertex to the nearest codeword");
    std::string dec_file, dec_vertex;
    decode->add_option("file", dec_file, "code file")->required();
    decode->add_option("vertex", dec_vertex, "vertex text, e.g. \"30,00|1\"")->required();
    decode->callback([&] { status = run_decode(dec_file, dec_vertex); });

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "list all codewords of a small code");
    std::string enum_file, enum_out;
    uint64_t enum_cap = kDefaultSpaceCap;
    enumerate->add_option("file", enum_file, "code file")->required();
    enumerate->add_option("-o", enum_out, "output file")->required();
    enumerate->add_option("--cap", enum_cap, "maximum cardinality to enumerate");
    enumerate->callback([&] { status = run_enumerate(enum_file, enum_out, enum_cap); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return status;
}
