#ifndef ORBITDIAG_TESTS_SUPPORT_HPP
#define ORBITDIAG_TESTS_SUPPORT_HPP

#include "orbitdiag/core_model.hpp"
#include "orbitdiag/polynomial.hpp"

#include <fstream>
#include <iterator>
#include <string>

namespace orbitdiag::test {

// The worked n = 7 example: bullets at rows 5,6,7 of column 1 and row 7 of
// column 2.
inline PatternIdeal example_ideal() {
  return PatternIdeal::validate(7, PairSet{{5, 1}, {6, 1}, {7, 1}, {7, 2}});
}

inline Polynomial y(int row, int col) { return Polynomial::variable({row, col}); }

inline PairSet pairs(std::initializer_list<Pair> ps) { return PairSet(ps); }

inline std::string read_text(const std::string& path) {
  std::ifstream f(path);
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace orbitdiag::test

#endif
