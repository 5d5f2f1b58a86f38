#pragma once

#include "doctest.h"

#include "mikado/biclosed.hpp"
#include "mikado/braid.hpp"
#include "mikado/coxeter.hpp"
#include "mikado/hecke.hpp"
#include "mikado/laurent.hpp"
#include "mikado/verify.hpp"

#include <string>
#include <vector>

namespace mikado::testing {

// Rank 2 systems used throughout.
inline CoxeterSystem a2() {
  return make_system("A2", {"s", "t"}, {{1, 3}, {3, 1}});
}
inline CoxeterSystem b2() {
  return make_system("B2", {"s", "t"}, {{1, 4}, {4, 1}});
}
inline CoxeterSystem g2() {
  return make_system("G2", {"s", "t"}, {{1, 6}, {6, 1}});
}
inline CoxeterSystem dihedral_inf() {
  return make_system("Dinf", {"s", "t"}, {{1, 0}, {0, 1}});
}
inline CoxeterSystem a3() {
  return make_system("A3", {"s1", "s2", "s3"},
                     {{1, 3, 2}, {3, 1, 3}, {2, 3, 1}});
}
// All edges infinite, rank 3.
inline CoxeterSystem universal3() {
  return make_system("U3", {"r", "s", "t"}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}

inline Element el(const CoxeterSystem& sys, const std::string& word) {
  return parse_element(sys, word);
}

inline Laurent L(const std::string& s) { return Laurent::parse(s); }

}  // namespace mikado::testing
