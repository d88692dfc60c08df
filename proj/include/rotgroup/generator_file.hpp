#pragma once

/**
 * @file generator_file.hpp
 * @brief JSON generator files.
 *
 *   {
 *     "ambient_d": 3,
 *     "matrices": [ [["1","0","0"], ["0","1/2","-1/2√3"], ["0","1/2√3","1/2"]] ],
 *     "quaternions": [ ["1","2","0","0"] ]
 *   }
 *
 * "quaternions" is optional. Every scalar uses the text form of scalar.hpp
 * and every matrix must be an exact rotation.
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rotgroup/rotation.hpp"

namespace rotgroup {

struct GeneratorFile {
  Ambient ambient_d = 0;
  std::vector<Rot3> matrices;
  std::vector<Quaternion> quaternions;

  /// Matrices first, then theta of each quaternion. Throws ZeroQuaternion.
  std::vector<Rot3> generators() const;
};

/// Throws ParseError for malformed JSON, bad scalars, non-rotations or a bad ambient.
GeneratorFile parse_generator_file(std::string_view json_text);
GeneratorFile load_generator_file(const std::filesystem::path& path);

nlohmann::ordered_json rotation_to_json(const Rot3& m);
nlohmann::ordered_json generator_file_to_json(const GeneratorFile& file);

/// "a,b,c,d" with scalar text components. Throws ParseError.
Quaternion parse_quaternion_tuple(std::string_view text, Ambient d);

}  // namespace rotgroup
