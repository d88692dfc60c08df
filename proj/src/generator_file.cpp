#include "rotgroup/generator_file.hpp"

#include <fstream>
#include <sstream>

#include "rotgroup/error.hpp"

namespace rotgroup {

namespace {

using json = nlohmann::json;

QuadScalar scalar_at(const json& node, Ambient d, const std::string& where) {
  if (!node.is_string()) throw ParseError(where + ": expected a scalar string");
  try {
    return parse_scalar(node.get<std::string>(), d);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
}

Rot3 matrix_at(const json& node, Ambient d, const std::string& where) {
  if (!node.is_array() || node.size() != 3) throw ParseError(where + ": expected 3 rows");
  Rot3::Entries entries;
  for (std::size_t r = 0; r < 3; ++r) {
    const json& row = node[r];
    if (!row.is_array() || row.size() != 3) throw ParseError(where + ": row " + std::to_string(r) + " needs 3 entries");
    for (std::size_t c = 0; c < 3; ++c) {
      entries[3 * r + c] = scalar_at(row[c], d, where + "[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
  }
  try {
    return Rot3(std::move(entries));
  } catch (const InvalidRotation& e) {
    throw ParseError(where + ": " + e.what());
  }
}

}  // namespace

std::vector<Rot3> GeneratorFile::generators() const {
  std::vector<Rot3> out = matrices;
  for (const Quaternion& q : quaternions) out.push_back(theta(q));
  return out;
}

GeneratorFile parse_generator_file(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("generator file must be a JSON object");

  GeneratorFile file;
  if (!doc.contains("ambient_d") || !doc["ambient_d"].is_number_integer()) {
    throw ParseError("ambient_d: expected an integer");
  }
  file.ambient_d = doc["ambient_d"].get<Ambient>();
  if (!is_valid_ambient(file.ambient_d)) {
    throw ParseError("ambient_d: " + std::to_string(file.ambient_d) + " is not 0 or squarefree >= 2");
  }

  if (doc.contains("matrices")) {
    if (!doc["matrices"].is_array()) throw ParseError("matrices: expected an array");
    for (std::size_t i = 0; i < doc["matrices"].size(); ++i) {
      file.matrices.push_back(matrix_at(doc["matrices"][i], file.ambient_d, "matrices[" + std::to_string(i) + "]"));
    }
  }
  if (doc.contains("quaternions")) {
    if (!doc["quaternions"].is_array()) throw ParseError("quaternions: expected an array");
    for (std::size_t i = 0; i < doc["quaternions"].size(); ++i) {
      const json& q = doc["quaternions"][i];
      const std::string where = "quaternions[" + std::to_string(i) + "]";
      if (!q.is_array() || q.size() != 4) throw ParseError(where + ": expected 4 components");
      const Ambient d = file.ambient_d;
      file.quaternions.push_back({scalar_at(q[0], d, where + "[0]"), scalar_at(q[1], d, where + "[1]"),
                                  scalar_at(q[2], d, where + "[2]"), scalar_at(q[3], d, where + "[3]")});
    }
  }
  if (file.matrices.empty() && file.quaternions.empty()) throw ParseError("generator file lists no generators");
  return file;
}

GeneratorFile load_generator_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_generator_file(buf.str());
}

nlohmann::ordered_json rotation_to_json(const Rot3& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < 3; ++r) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < 3; ++c) row.push_back(to_string(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json generator_file_to_json(const GeneratorFile& file) {
  nlohmann::ordered_json j;
  j["ambient_d"] = file.ambient_d;
  auto mats = nlohmann::ordered_json::array();
  for (const Rot3& m : file.matrices) mats.push_back(rotation_to_json(m));
  j["matrices"] = mats;
  if (!file.quaternions.empty()) {
    auto quats = nlohmann::ordered_json::array();
    for (const Quaternion& q : file.quaternions) {
      quats.push_back({to_string(q.x0), to_string(q.x1), to_string(q.x2), to_string(q.x3)});
    }
    j["quaternions"] = quats;
  }
  return j;
}

Quaternion parse_quaternion_tuple(std::string_view text, Ambient d) {
  std::vector<QuadScalar> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(parse_scalar(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start), d));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 4) throw ParseError("quaternion needs 4 comma-separated components, got " + std::to_string(parts.size()));
  return {parts[0], parts[1], parts[2], parts[3]};
}

}  // namespace rotgroup
