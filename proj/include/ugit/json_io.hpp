#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ugit/mpoly.hpp"
#include "ugit/rep.hpp"
#include "ugit/sl2.hpp"

namespace ugit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolName = "ugit";
inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kInputVersion = 1;

// Top-level input file: a rep plus optional twist, point lists and probe
// parameters. Schema-checked on load; unknown keys are rejected
// (Error("BadInput")).
struct InputDocument {
    int version = kInputVersion;
    GradedUnipotentRep rep;
    std::optional<CharacterTwist> twist;
    std::vector<std::vector<Rat>> points;
    std::optional<unsigned> probe_limit;   // probe.K
    std::optional<long long> n_param;      // probe.n_param
    std::optional<unsigned> m_max;         // probe.m_max
};

// Rationals travel as strings "p/q" ("p" when the denominator is 1); integer
// JSON numbers are accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& context);

Json vec_to_json(const std::vector<Rat>& v);
std::vector<Rat> vec_from_json(const Json& j, const std::string& context);

Json matrix_to_json(const QMatrix& m);
QMatrix matrix_from_json(const Json& j, const std::string& context);

Json rep_to_json(const GradedUnipotentRep& rep);
GradedUnipotentRep rep_from_json(const Json& j);

Json twist_to_json(const CharacterTwist& twist);
CharacterTwist twist_from_json(const Json& j);

Json input_to_json(const InputDocument& doc);
InputDocument input_from_json(const Json& j);

// Reads and parses a file (Error("IoError") / Error("BadInput")).
InputDocument load_input(const std::string& path);

// {ell, blocks: [{a, l, chain_indices}], basis_change}; chain_indices are the
// basis_change columns carrying the block's chain.
Json decomposition_to_json(const Sl2Decomposition& dec);

// Polynomial as a monomial-coefficient list plus a display string.
Json poly_to_json(const MPoly& f);

// Report envelope with deterministic field order:
// {tool, version, command, input, result}.
Json report_envelope(const std::string& command, Json input_echo, Json result);

// Canonical serialization: 2-space indent, trailing newline. Reports are
// byte-identical across reruns of the same input.
std::string to_text(const Json& j);

// Indented key/value rendering of a report for human consumption.
std::string render_text(const Json& j);

// Parses "p,q,..." into rationals (Error("BadInput") on empty entries).
std::vector<Rat> parse_point_csv(const std::string& text);

// Accepts a coordinate name "x3" or a CSV of dim coefficients; returns the
// degree-one section as a polynomial in dim variables.
MPoly parse_linear_section(const std::string& text, std::size_t dim);

// Writes to the path, or to stdout when the path is empty.
void write_output(const std::string& path, const std::string& text);

} // namespace ugit
