#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "skewinfo/quantum_objects.hpp"

namespace skewinfo {

// JSON input formats. A matrix is
//
//   {"dim": 2, "entries": [[re, im], [re, im], [re, im], [re, im]]}
//
// with dim*dim [re, im] pairs in row-major order. Files:
//
//   state:        a matrix
//   observables:  {"observables": [matrix, ...]}
//   channels:     {"channels": [{"name": "...", "kraus": [matrix, ...]}, ...]}
//
// Malformed JSON, missing fields, wrong entry counts and dimensions that
// disagree across a file raise ParseError with the source name, line and
// column or the JSON path of the offending field. Well-formed objects that
// violate a physical invariant raise ValidationError naming it
// ("hermitian", "trace", "positivity", "completeness").

DensityMatrix parse_state(std::string_view text, std::string_view source = "<state>");
std::vector<Observable> parse_observables(std::string_view text,
                                          std::string_view source = "<observables>");
std::vector<QuantumChannel> parse_channels(std::string_view text,
                                           std::string_view source = "<channels>");

/// Reads a whole file; ParseError if it cannot be opened.
std::string read_text_file(const std::string& path);

}  // namespace skewinfo
