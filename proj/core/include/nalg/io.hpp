#ifndef NALG_IO_HPP
#define NALG_IO_HPP

#include <string>

#include "nalg/degeneration.hpp"

namespace nalg::io {

// Algebra files:
//   {"name": "...", "dim": n, "field": "Q"|"Qt", "closure": "none"|"antisymmetric",
//    "products": [{"i": 1, "j": 2, "k": 3, "c": "1/2"}, ...]}
// Indices are 1-based. With "antisymmetric" closure every listed product
// e_i e_j (i != j) also sets e_j e_i = -c; listing both sides consistently
// is accepted.

AlgebraQ parse_algebra(const std::string& text);
/// Accepts both "Q" and "Qt" files.
AlgebraQt parse_algebra_qt(const std::string& text);

std::string write_algebra(const AlgebraQ& a);
std::string write_algebra(const AlgebraQt& a);

// Family files:
//   {"dim": n, "given": "g"|"g_inverse", "matrix": [["t", "0"], ...]}
// Row i, column j is the coefficient of e_i in the image of e_j.

DegenerationFamily parse_family(const std::string& text);
std::string write_family(const DegenerationFamily& fam);

/// Whole file as a string. Throws ParseError when the file cannot be read.
std::string read_file(const std::string& path);

}  // namespace nalg::io

#endif  // NALG_IO_HPP
