#pragma once

/**
 * @file corpus.hpp
 * @brief Named rotations and the fixed corpus of finite rotation groups.
 *
 * Every group in the corpus is generated from quaternions through theta,
 * except the sqrt(3) dihedral group of order 12, which is given by matrices.
 *
 *   name        d  generators                          type
 *   C1          0  1                                   Trivial
 *   C2          0  k                                   C2
 *   C3          0  1+i+j+k                             C3
 *   C4          0  1+k                                 C4
 *   C5          5  φ + φ⁻¹ i + j                       C5
 *   C6          0  3+i+j+k                             C6
 *   V4          0  i, j                                Dihedral(2)
 *   D6          0  1+i+j+k, i-j                        Dihedral(3)
 *   D8          0  1+i, j                              Dihedral(4)
 *   D12         0  3+i+j+k, i-j                        Dihedral(6)
 *   D12(sqrt3)  3  sixfold x-rotation, diag(-1,1,-1)   Dihedral(6)
 *   A4          0  1+i+j+k, i                          A4
 *   S4          0  1+i, 1+i+j+k                        S4
 *   A5          5  i, 1+i+j+k, φ + φ⁻¹ i + j           A5
 */

#include <string>
#include <vector>

#include "rotgroup/group.hpp"
#include "rotgroup/properties.hpp"

namespace rotgroup {

namespace named {

/// theta(i) = diag(1, -1, -1).
Rot3 half_turn_x();
/// theta(j) = diag(-1, 1, -1).
Rot3 half_turn_y();
/// theta(1 + i), the quarter turn about the x-axis.
Rot3 quarter_turn_x();
/// theta(1 + 2i), cos = -3/5 about the x-axis.
Rot3 pythagorean_x();
/// theta(1 + 2j), cos = -3/5 about the y-axis.
Rot3 pythagorean_y();
/// theta(1 + 4i), cos = -15/17 about the x-axis.
Rot3 pythagorean_x_17();
/// Rotation by 60 degrees about the x-axis, entries in Q(sqrt 3).
Rot3 sixfold_x_sqrt3();
/// diag(-1, 1, -1) in the Q(sqrt 3) ambient.
Rot3 half_turn_y_sqrt3();

}  // namespace named

struct CorpusEntry {
  std::string name;
  Ambient ambient = 0;
  IsoType expected;
  std::vector<Rot3> generators;
};

/// Corpus definitions in a fixed order; rational_only keeps d = 0 entries.
std::vector<CorpusEntry> standard_corpus(bool rational_only = false);

/// Closes every corpus entry.
std::vector<NamedGroup> build_corpus(const std::vector<CorpusEntry>& entries);

}  // namespace rotgroup
