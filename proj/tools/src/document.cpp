#include "kofn/cli/document.hpp"

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kofn/error.hpp"

namespace kofn::cli {

namespace {

using json = nlohmann::json;

[[noreturn]] void malformed(const std::string& message) {
  throw Error(ErrorCode::MalformedDocument, message);
}

std::size_t read_count(const json& doc, const char* field,
                       const std::string& where = "") {
  const std::string prefix = where.empty() ? "" : where + ": ";
  if (!doc.contains(field)) {
    malformed(prefix + "missing field '" + field + "'");
  }
  const json& v = doc.at(field);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    malformed(prefix + "field '" + field + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Matrix3 read_rows(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 3) {
    malformed(where + ": expected an array of 3 rows");
  }
  Matrix3 rows{};
  for (std::size_t r = 0; r < 3; ++r) {
    const json& row = v[r];
    if (!row.is_array() || row.size() != 3) {
      malformed(where + ", row " + std::to_string(r) +
                ": expected an array of 3 numbers");
    }
    for (std::size_t c = 0; c < 3; ++c) {
      if (!row[c].is_number()) {
        malformed(where + ", row " + std::to_string(r) + ", column " +
                  std::to_string(c) + ": expected a number");
      }
      rows[r][c] = row[c].get<double>();
    }
  }
  return rows;
}

TransitionMatrix read_matrix(const json& v, const std::string& where) {
  const Matrix3 rows = read_rows(v, where);
  try {
    return TransitionMatrix::from_rows(rows);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.what());
  }
}

}  // namespace

SpecDocument parse_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    malformed(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) malformed("document must be a JSON object");

  const std::size_t n = read_count(doc, "n");
  const std::size_t k1 = read_count(doc, "k1");
  const std::size_t k2 = read_count(doc, "k2");

  ComponentState start = ComponentState::Failed;
  if (doc.contains("start_state")) {
    const json& s = doc.at("start_state");
    if (!s.is_number_integer()) malformed("field 'start_state' must be 0, 1 or 2");
    const auto value = s.get<std::int64_t>();
    if (value < 0 || value > 2) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "start_state: " + std::to_string(value) + " is not 0, 1 or 2");
    }
    start = static_cast<ComponentState>(value);
  }

  const int variants = static_cast<int>(doc.contains("components")) +
                       static_cast<int>(doc.contains("homogeneous")) +
                       static_cast<int>(doc.contains("segments"));
  if (variants != 1) {
    malformed("exactly one of 'components', 'homogeneous' or 'segments' is "
              "required");
  }

  SystemSpec spec(n, k1, k2);  // validates n, k1, k2

  std::optional<ComponentChain> chain;
  if (doc.contains("components")) {
    const json& list = doc.at("components");
    if (!list.is_array()) malformed("field 'components' must be an array");
    if (list.size() != n) {
      std::ostringstream msg;
      msg << "components: " << list.size() << " matrices given but n = " << n;
      throw Error(ErrorCode::SizeMismatch, msg.str());
    }
    std::vector<TransitionMatrix> matrices;
    matrices.reserve(n);
    for (std::size_t u = 0; u < list.size(); ++u) {
      matrices.push_back(read_matrix(list[u], "component " + std::to_string(u + 1)));
    }
    chain.emplace(std::move(matrices), start);
  } else if (doc.contains("homogeneous")) {
    chain.emplace(homogeneous_chain(read_matrix(doc.at("homogeneous"), "homogeneous"),
                                    n, start));
  } else {
    const json& list = doc.at("segments");
    if (!list.is_array()) malformed("field 'segments' must be an array");
    std::vector<Segment> segments;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const json& s = list[i];
      const std::string where = "segment " + std::to_string(i + 1);
      if (!s.is_object()) malformed(where + ": expected an object");
      if (!s.contains("matrix")) malformed(where + ": missing field 'matrix'");
      segments.push_back({read_count(s, "from", where), read_count(s, "to", where),
                          read_matrix(s.at("matrix"), where)});
    }
    try {
      chain.emplace(segmented_chain(segments, n, start));
    } catch (const Error& e) {
      throw Error(e.code(), std::string("segments: ") + e.what());
    }
  }
  return {std::move(*chain), spec};
}

SpecDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) malformed("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace kofn::cli
