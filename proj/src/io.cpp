#include "skewinfo/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "skewinfo/errors.hpp"

namespace skewinfo {

namespace {

using nlohmann::json;

std::string where(std::string_view source, const std::string& path) {
  return std::string(source) + ": " + (path.empty() ? "/" : path);
}

json parse_json(std::string_view text, std::string_view source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line:column.
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ":" +
                                    std::to_string(col) + ": malformed JSON");
  }
}

const json& field(const json& obj, const char* key, std::string_view source, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) {
    fail(ErrorCode::ParseError, where(source, path) + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

ComplexMatrix parse_matrix(const json& node, std::string_view source, const std::string& path) {
  const json& dim_node = field(node, "dim", source, path);
  if (!dim_node.is_number_integer() || dim_node.get<long long>() < 1) {
    fail(ErrorCode::ParseError, where(source, path + "/dim") + ": expected a positive integer");
  }
  const auto dim = static_cast<std::size_t>(dim_node.get<long long>());
  const json& entries = field(node, "entries", source, path);
  if (!entries.is_array() || entries.size() != dim * dim) {
    fail(ErrorCode::ParseError, where(source, path + "/entries") + ": expected " +
                                    std::to_string(dim * dim) + " [re, im] pairs");
  }
  ComplexMatrix m(dim);
  for (std::size_t k = 0; k < entries.size(); ++k) {
    const json& pair = entries[k];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      fail(ErrorCode::ParseError, where(source, path + "/entries/" + std::to_string(k)) +
                                      ": expected [re, im]");
    }
    m(k / dim, k % dim) = Complex(pair[0].get<double>(), pair[1].get<double>());
  }
  return m;
}

const json& array_field(const json& root, const char* key, std::string_view source) {
  const json& arr = field(root, key, source, "");
  if (!arr.is_array() || arr.empty()) {
    fail(ErrorCode::ParseError, where(source, std::string("/") + key) + ": expected a non-empty array");
  }
  return arr;
}

void require_dim(std::size_t got, std::size_t expected, std::string_view source, const std::string& path) {
  if (got != expected) {
    fail(ErrorCode::ParseError, where(source, path) + ": dimension " + std::to_string(got) +
                                    " does not match " + std::to_string(expected));
  }
}

}  // namespace

DensityMatrix parse_state(std::string_view text, std::string_view source) {
  const json root = parse_json(text, source);
  return DensityMatrix::from_matrix(parse_matrix(root, source, ""));
}

std::vector<Observable> parse_observables(std::string_view text, std::string_view source) {
  const json root = parse_json(text, source);
  const json& arr = array_field(root, "observables", source);
  std::vector<Observable> out;
  std::size_t dim = 0;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string path = "/observables/" + std::to_string(i);
    ComplexMatrix m = parse_matrix(arr[i], source, path);
    if (i == 0) dim = m.dim();
    require_dim(m.dim(), dim, source, path);
    if (!is_hermitian(m)) {
      fail(ErrorCode::ValidationError, "hermitian: " + where(source, path) + " is not Hermitian");
    }
    out.emplace_back(std::move(m));
  }
  return out;
}

std::vector<QuantumChannel> parse_channels(std::string_view text, std::string_view source) {
  const json root = parse_json(text, source);
  const json& arr = array_field(root, "channels", source);
  std::vector<QuantumChannel> out;
  std::size_t dim = 0;
  for (std::size_t t = 0; t < arr.size(); ++t) {
    const std::string path = "/channels/" + std::to_string(t);
    const json& node = arr[t];
    std::string name = "channel" + std::to_string(t + 1);
    if (node.is_object() && node.contains("name")) {
      if (!node["name"].is_string()) fail(ErrorCode::ParseError, where(source, path + "/name") + ": expected a string");
      name = node["name"].get<std::string>();
    }
    const json& kraus = field(node, "kraus", source, path);
    if (!kraus.is_array() || kraus.empty()) {
      fail(ErrorCode::ParseError, where(source, path + "/kraus") + ": expected a non-empty array");
    }
    std::vector<ComplexMatrix> ops;
    for (std::size_t i = 0; i < kraus.size(); ++i) {
      const std::string kpath = path + "/kraus/" + std::to_string(i);
      ComplexMatrix m = parse_matrix(kraus[i], source, kpath);
      if (t == 0 && i == 0) dim = m.dim();
      require_dim(m.dim(), dim, source, kpath);
      ops.push_back(std::move(m));
    }
    const double defect = completeness_defect(ops);
    if (defect > 1e-9) {
      fail(ErrorCode::ValidationError, "completeness: " + where(source, path) +
                                           " has ||sum K^dagger K - I||_F = " + std::to_string(defect));
    }
    out.emplace_back(std::move(name), std::move(ops));
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::ParseError, path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace skewinfo
