#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "collatz/types.hpp"

namespace collatz {

// One residue branch of a generalized Collatz-type map: n -> (a*n + b)/d.
struct Branch {
  Int a;  // slope, >= 0
  Int b;  // offset, any sign
  Int d;  // divisor, >= 1
  bool operator==(const Branch&) const = default;
};

// Piecewise-affine map on N selected by n mod m. branches[r] applies to
// n == r (mod m). A validated map sends every n >= 1 to an integer >= 1.
struct BranchMap {
  unsigned long modulus = 2;
  std::vector<Branch> branches;

  const Branch& branch_for(const Nat& n) const {
    return branches[mpz_fdiv_ui(n.get_mpz_t(), modulus)];
  }
  bool operator==(const BranchMap&) const = default;
};

// n/2, (3n+1)/2 — the shortcut map.
const BranchMap& collatz_t();
// n/2, 3n+1 — the original map.
const BranchMap& collatz_s();
// n/2, (3n-1)/2 — the multi-cycle regression map.
const BranchMap& collatz_3nm1();

struct MapViolation {
  unsigned long residue;
  std::string condition;
};

// Empty result means the map is well-defined and image-positive.
// Violations name the offending residue and condition; this never throws.
std::vector<MapViolation> validate(const BranchMap& map);
inline bool is_valid(const BranchMap& map) { return validate(map).empty(); }

struct MapSpecError : std::runtime_error {
  MapSpecError(const std::string& what, int line, int col)
      : std::runtime_error(what), line(line), col(col) {}
  int line;
  int col;
};

// Grammar:  mapspec := "mod" INT "{" branch (";" branch)* [";"] "}"
//           branch  := INT ":" "(" INT "n" ("+"|"-") INT ")" "/" INT
// Whitespace is insignificant; every residue 0..m-1 must appear exactly once.
// Throws MapSpecError with line/column on syntax errors and on maps that
// fail validate().
BranchMap parse_mapspec(const std::string& text);

// Canonical one-line rendering; parse_mapspec(render_mapspec(m)) == m.
std::string render_mapspec(const BranchMap& map);

}  // namespace collatz
