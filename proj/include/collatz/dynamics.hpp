#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "collatz/map_model.hpp"
#include "collatz/types.hpp"

namespace collatz {

// Why an orbit walk stopped without entering a cycle.
enum class StopReason { StepLimit, ValueBound };

// Every forward iteration runs under explicit bounds so non-termination is
// impossible; an exhausted budget is an outcome, not an error.
struct Limits {
  unsigned long max_steps = 100000;
  Nat max_value;

  Limits() { mpz_ui_pow_ui(max_value.get_mpz_t(), 2, 256); }
  Limits(unsigned long steps, Nat value) : max_steps(steps), max_value(std::move(value)) {}
  bool operator==(const Limits&) const = default;
};

// A finite T-cycle in map order, rotated so the minimal element comes first.
struct Cycle {
  std::vector<Nat> elements;

  unsigned long length() const { return elements.size(); }
  const Nat& min_element() const { return elements.front(); }
  bool contains(const Nat& x) const {
    for (const Nat& e : elements)
      if (e == x) return true;
    return false;
  }
  // Position of x in the stored rotation; elements are distinct.
  std::optional<unsigned long> position(const Nat& x) const {
    for (unsigned long i = 0; i < elements.size(); ++i)
      if (elements[i] == x) return i;
    return std::nullopt;
  }
  bool operator==(const Cycle&) const = default;
};

Cycle canonical_cycle(std::vector<Nat> run);  // rotates min first

struct OrbitResult {
  enum class Kind { EnteredCycle, StepLimit, ValueBound };

  Nat start;
  // v0, v1, ... up to (not including) the first repeated value; capped at
  // store_cap entries, with `truncated` set when values were dropped.
  std::vector<Nat> iterates;
  bool truncated = false;

  Kind kind = Kind::StepLimit;
  Cycle cycle;                     // EnteredCycle
  unsigned long hitting_time = 0;  // EnteredCycle: min k with T^k(start) in cycle
  Nat offending;                   // ValueBound: first iterate > max_value
  unsigned long steps_taken = 0;   // applications of the map performed

  bool entered_cycle() const { return kind == Kind::EnteredCycle; }
  StopReason stop_reason() const {
    return kind == Kind::ValueBound ? StopReason::ValueBound : StopReason::StepLimit;
  }
};

// Thrown by operations whose contract requires a resolved point.
struct UnresolvedPointError : std::runtime_error {
  UnresolvedPointError(Nat point, StopReason reason)
      : std::runtime_error("point " + point.get_str() +
                           (reason == StopReason::StepLimit ? " unresolved: step limit"
                                                            : " unresolved: value bound")),
        point(std::move(point)),
        reason(reason) {}
  Nat point;
  StopReason reason;
};

// One application of the map. Requires a validated map and n >= 1; the
// divisibility is asserted, not assumed.
Nat apply(const BranchMap& map, const Nat& n);

// Iterates until a value repeats within the trajectory (EnteredCycle, with the
// cycle canonicalized and the minimal k such that T^k(start) lies on it), the
// step budget runs out (StepLimit), or an iterate exceeds max_value
// (ValueBound, with the offending iterate).
OrbitResult orbit(const BranchMap& map, const Nat& n, const Limits& limits,
                  size_t store_cap = 100000);

struct CycleSearch {
  std::optional<Cycle> cycle;
  StopReason reason = StopReason::StepLimit;  // set when cycle is empty
};

CycleSearch detect_cycle(const BranchMap& map, const Nat& seed, const Limits& limits);

struct HitResult {
  bool reached = false;
  unsigned long k = 0;               // minimal k >= 0 with T^k(n) in target
  StopReason reason = StopReason::StepLimit;
};

// Walks at most limits.max_steps applications looking for the target set.
// Membership at k = 0 counts. A trajectory that revisits itself without
// touching the target can never reach it; the walk stops early and reports
// StepLimit, the same verdict a full-budget walk would reach.
HitResult hitting_time(const BranchMap& map, const Nat& n, const NatSet& target,
                       const Limits& limits);

}  // namespace collatz
