#pragma once

/** @file helpers.hpp @brief Shorthands shared by the unit tests. */

#include <string>

#include "rotgroup/corpus.hpp"
#include "rotgroup/generator_file.hpp"

namespace testing_helpers {

inline rotgroup::QuadScalar S(const std::string& text, rotgroup::Ambient d = 0) {
  return rotgroup::parse_scalar(text, d);
}

inline rotgroup::Quaternion Q(const std::string& text, rotgroup::Ambient d = 0) {
  return rotgroup::parse_quaternion_tuple(text, d);
}

/// Rows as "a,b,c;d,e,f;g,h,i".
inline rotgroup::Rot3 M(const std::string& rows, rotgroup::Ambient d = 0) {
  rotgroup::Rot3::Entries e;
  std::size_t k = 0, start = 0;
  for (std::size_t i = 0; i <= rows.size(); ++i) {
    if (i == rows.size() || rows[i] == ',' || rows[i] == ';') {
      e.at(k++) = S(rows.substr(start, i - start), d);
      start = i + 1;
    }
  }
  return rotgroup::Rot3(e);
}

}  // namespace testing_helpers
