#include "misspec/model_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace misspec {

using nlohmann::json;

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

double number_from(const json& j, const std::string& where) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const auto slash = s.find('/');
    try {
      std::size_t used = 0;
      if (slash == std::string::npos) {
        const double v = std::stod(s, &used);
        if (used != s.size()) throw ParseError(where + ": trailing characters in '" + s + "'");
        return v;
      }
      const long long num = std::stoll(s.substr(0, slash), &used);
      if (used != slash) throw ParseError(where + ": bad numerator in '" + s + "'");
      const long long den = std::stoll(s.substr(slash + 1), &used);
      if (used != s.size() - slash - 1) throw ParseError(where + ": bad denominator in '" + s + "'");
      if (den == 0) throw ParseError(where + ": zero denominator in '" + s + "'");
      return static_cast<double>(num) / static_cast<double>(den);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError(where + ": cannot parse '" + s + "' as a number or rational");
    }
  }
  throw ParseError(where + ": expected a number or a rational string");
}

std::vector<std::string> labels_from(const json& j, const std::string& key) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError("model file: missing or non-array '" + key + "'");
  std::vector<std::string> out;
  for (const auto& item : j[key]) {
    if (!item.is_string()) throw ParseError("model file: '" + key + "' entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

ModelData parse_model_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("model file: invalid JSON: ") + e.what());
  }
  ModelData d;
  d.theta_labels = labels_from(j, "theta_labels");
  d.x_labels = labels_from(j, "x_labels");

  if (!j.contains("likelihoods") || !j["likelihoods"].is_array())
    throw ParseError("model file: missing or non-array 'likelihoods'");
  const auto& rows = j["likelihoods"];
  const Index k = static_cast<Index>(rows.size());
  const Index n = static_cast<Index>(d.x_labels.size());
  d.likelihoods.resize(k, n);
  for (Index t = 0; t < k; ++t) {
    const auto& row = rows[static_cast<std::size_t>(t)];
    if (!row.is_array() || static_cast<Index>(row.size()) != n)
      throw ParseError("model file: likelihood row " + std::to_string(t) + " must have " +
                       std::to_string(n) + " entries");
    for (Index x = 0; x < n; ++x)
      d.likelihoods(t, x) = number_from(row[static_cast<std::size_t>(x)],
                                        "likelihoods[" + std::to_string(t) + "][" + std::to_string(x) + "]");
  }

  if (!j.contains("true_dgp") || !j["true_dgp"].is_array())
    throw ParseError("model file: missing or non-array 'true_dgp'");
  const auto& dgp = j["true_dgp"];
  if (static_cast<Index>(dgp.size()) != n)
    throw ParseError("model file: true_dgp must have " + std::to_string(n) + " entries");
  d.true_dgp.resize(n);
  for (Index x = 0; x < n; ++x)
    d.true_dgp[x] = number_from(dgp[static_cast<std::size_t>(x)], "true_dgp[" + std::to_string(x) + "]");
  return d;
}

Model load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return validate_model(parse_model_json(ss.str()));
}

std::string serialize_model(const Model& m) {
  std::ostringstream out;
  auto quoted = [](const std::string& s) {
    return json(s).dump();  // JSON-escaped label
  };
  out << "{\n  \"theta_labels\": [";
  for (Index t = 0; t < m.n_params(); ++t)
    out << (t ? ", " : "") << quoted(m.theta_labels()[static_cast<std::size_t>(t)]);
  out << "],\n  \"x_labels\": [";
  for (Index x = 0; x < m.n_obs(); ++x)
    out << (x ? ", " : "") << quoted(m.x_labels()[static_cast<std::size_t>(x)]);
  out << "],\n  \"likelihoods\": [\n";
  for (Index t = 0; t < m.n_params(); ++t) {
    out << "    [";
    for (Index x = 0; x < m.n_obs(); ++x)
      out << (x ? ", " : "") << format_double(m.likelihoods()(t, x));
    out << (t + 1 < m.n_params() ? "],\n" : "]\n");
  }
  out << "  ],\n  \"true_dgp\": [";
  for (Index x = 0; x < m.n_obs(); ++x) out << (x ? ", " : "") << format_double(m.true_dgp()[x]);
  out << "]\n}\n";
  return out.str();
}

void save_model_file(const Model& m, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write model file '" + path + "'");
  out << serialize_model(m);
}

std::uint64_t model_hash(const Model& m) {
  const std::string text = serialize_model(m);
  std::uint64_t h = 1469598103934665603ull;
  for (const unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string model_hash_hex(const Model& m) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(model_hash(m)));
  return buf;
}

}  // namespace misspec
