#pragma once

#include <cstdint>
#include <string>

#include "misspec/model.hpp"

namespace misspec {

// Formats a double with enough digits to round-trip exactly ("%.17g").
std::string format_double(double v);

// Model file schema (JSON): keys `theta_labels`, `x_labels`, `likelihoods`
// (array of rows, rows = theta), `true_dgp`. Probabilities may be JSON
// numbers or rational strings like "1/3" (parsed as exact integer ratio,
// then converted to double). See README for the full grammar.
ModelData parse_model_json(const std::string& text);

Model load_model_file(const std::string& path);

// Canonical serialization; parsing it back reproduces the matrices
// bit-for-bit for finite decimal inputs.
std::string serialize_model(const Model& m);

void save_model_file(const Model& m, const std::string& path);

// FNV-1a hash of the canonical serialization; stamped on all outputs.
std::uint64_t model_hash(const Model& m);
std::string model_hash_hex(const Model& m);

}  // namespace misspec
