#pragma once

// Text formats shared by the library, the files on disk, and the CLI.
//
// Elements: two digits "ab" (a = coefficient of omega), mod 4 for E4 and
// mod 2 for E2; a single digit is accepted on input as shorthand for a = 0.
// Z4 singles are one digit.  Vertices: comma-separated coordinates, parts
// separated by "|" as in (x | y | z).
//
// Code files: one versioned JSON document for every family; builds are
// deterministic and serialization round-trips byte-exactly.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "doob/additive.hpp"
#include "doob/linear.hpp"
#include "doob/params.hpp"
#include "doob/product.hpp"
#include "doob/space.hpp"
#include "doob/verify.hpp"

namespace doob {

inline constexpr int kFormatVersion = 1;

std::string vertex_to_text(const DoobVertex& v);
std::string vertex_to_text(const MixedVertex& v);
DoobVertex parse_doob_vertex(std::string_view text, int m, int n);
MixedVertex parse_mixed_vertex(std::string_view text, const MixedAmbient& ambient);

std::string serialize_linear(const CheckMatrixE& M);
std::string serialize_additive(const CheckMatrixZ& M);
std::string serialize_product(int k, int r, int m);

// What the CLI asks to build.
struct CodeDescriptor {
    std::string family;  // "linear" | "additive" | "special-d77" | "product"
    int gamma = 0, delta = 0;  // linear, additive
    int n4 = 0;                // additive
    int mu = 0, m = 0;         // product
};

// A code loaded from a file (or built from a descriptor), with everything
// needed to verify, decode and enumerate it.
struct LoadedCode {
    std::string family;  // "linear" | "additive" | "product"
    CheckMatrixE linear;
    CheckMatrixZ additive;
    ProductCodeSpec product;

    MixedAmbient ambient() const;
    MixedPredicate membership() const;
    // log2 |C| via the family's cardinality formula
    int log2_cardinality() const;
    // decoded codeword and its distance to the input
    std::pair<MixedVertex, int> decode_vertex(const MixedVertex& v) const;
};

// Validates the descriptor against the parameter theory, then builds.
LoadedCode build_code(const CodeDescriptor& d);
std::string serialize_code(const LoadedCode& code);
LoadedCode parse_code_file(const std::string& json_text);

LoadedCode load_code_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

// Classification table for one diameter parameter (one row per m).
std::string params_table(int mu);
// Verdict text for a (m, n', n'') triple.
std::string params_triple_report(const DoobParams& p);

std::string report_json(const CoverageReport& r);
std::string report_json(const PartitionReport& r);
std::string report_json(const SampleReport& r);

}  // namespace doob
