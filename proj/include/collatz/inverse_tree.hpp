#pragma once

#include <stdexcept>

#include "collatz/map_model.hpp"
#include "collatz/types.hpp"

namespace collatz {

struct DepthCapError : std::runtime_error {
  explicit DepthCapError(unsigned long requested, unsigned long cap)
      : std::runtime_error("preimage depth " + std::to_string(requested) +
                           " exceeds cap " + std::to_string(cap)) {}
};

// A constant branch (a = 0) hit by the query value has every class member as
// a predecessor; the exact preimage is not a finite set.
struct InfinitePreimageError : std::runtime_error {
  explicit InfinitePreimageError(const Nat& n)
      : std::runtime_error("preimage of " + n.get_str() +
                           " is infinite (constant branch)") {}
};

// Exact predecessor set {x >= 1 : map(x) = n}, solved per branch: for each
// residue r, x = (n*d_r - b_r)/a_r must be integral, >= 1 and == r (mod m).
NatSet predecessors(const BranchMap& map, const Nat& n);

NatSet preimage(const BranchMap& map, const NatSet& A);

struct LevelSet {
  NatSet root;
  unsigned long level = 0;
  NatSet elements;  // T^-level(root)
};

inline constexpr unsigned long kDefaultDepthCap = 64;

// j-fold preimage of A, computed level by level.
LevelSet level(const BranchMap& map, const NatSet& A, unsigned long j,
               unsigned long depth_cap = kDefaultDepthCap);

// Incremental level computation for sweeps over j = 0, 1, 2, ...; caches all
// levels computed so far, keyed implicitly by the fixed root set.
class LevelWalker {
 public:
  LevelWalker(BranchMap map, NatSet root, unsigned long depth_cap = kDefaultDepthCap)
      : map_(std::move(map)), depth_cap_(depth_cap), levels_{std::move(root)} {}

  const NatSet& at(unsigned long j);
  const NatSet& root() const { return levels_.front(); }

 private:
  BranchMap map_;
  unsigned long depth_cap_;
  std::vector<NatSet> levels_;
};

struct WanderingResult {
  bool pass = true;
  unsigned long i = 0;
  unsigned long j = 0;  // first colliding pair in lexicographic order, i < j
  Nat witness;
};

// Checks T^-i({w}) and T^-j({w}) pairwise disjoint for 0 <= i < j <= depth.
WanderingResult wandering_check(const BranchMap& map, const Nat& w, unsigned long depth,
                                unsigned long depth_cap = kDefaultDepthCap);

}  // namespace collatz
