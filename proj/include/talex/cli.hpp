#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "talex/field_spec.hpp"
#include "talex/report.hpp"
#include "talex/representation.hpp"

namespace talex {

// One command invocation.  Exactly one input source (a built-in table name
// or a presentation file) except for selftest, which takes none.
struct RunConfig {
    std::string command; // compute | orders | check-symmetry | check-parity |
                         // palindrome | enumerate | selftest
    std::optional<std::string> knot;
    std::optional<std::string> presentation_path;
    std::optional<std::string> rep_path;
    std::string field = "Q";          // coefficient field when no rep file is given
    std::optional<long> prime;        // enumerate only
    int jobs = 1;                     // corpus-level parallelism
    std::optional<std::string> out_path; // JSON report file
    bool json_output = false;            // JSON instead of text on the stream
};

// Representation file, parsed up to (but not including) coefficient
// parsing, so the caller can dispatch on the field first.  Format:
//   # comment
//   field: Fp:5
//   dim: 2
//   mat: 0 1 4 0      <- one generator image, d*d row-major entries
//   mat: 2 0 1 3
// Entries use the coefficient syntax of the field ("3/2", "1+2i", "4").
struct RepFileData {
    InvolutiveField field;
    int dim = 0;
    std::vector<std::vector<std::string>> matrices;
};

RepFileData parse_representation_text(const std::string& text);
std::string read_text_file(const std::string& path);

template <class K>
Representation<K> realize_representation(const RepFileData& data) {
    Representation<K> r;
    r.dim = data.dim;
    r.field = data.field;
    for (const auto& entries : data.matrices) {
        Mat<K> m(data.dim, data.dim);
        for (int i = 0; i < data.dim; ++i)
            for (int j = 0; j < data.dim; ++j)
                m(i, j) = scalar_traits<K>::parse(
                    entries[static_cast<std::size_t>(i * data.dim + j)], data.field);
        r.images.push_back(std::move(m));
    }
    return r;
}

// Runs the command, writes the report to os (aligned text, or JSON when
// cfg.json_output) and to cfg.out_path as JSON when set.  Returns the exit
// code: 0 success / check holds, 1 check failed, 2 input error,
// 3 inconclusive-only outcome.
int run(const RunConfig& cfg, std::ostream& os);

} // namespace talex
