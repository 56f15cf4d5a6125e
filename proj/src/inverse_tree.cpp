#include "collatz/inverse_tree.hpp"

namespace collatz {

NatSet predecessors(const BranchMap& map, const Nat& n) {
  std::vector<Nat> out;
  for (unsigned long r = 0; r < map.modulus; ++r) {
    const Branch& br = map.branches[r];
    if (br.a == 0) {
      // constant branch: value b/d on the whole class
      Nat c;
      mpz_divexact(c.get_mpz_t(), br.b.get_mpz_t(), br.d.get_mpz_t());
      if (c == n) throw InfinitePreimageError(n);
      continue;
    }
    Nat t = n * br.d - br.b;
    if (t < 1) continue;
    Nat x, rem;
    mpz_fdiv_qr(x.get_mpz_t(), rem.get_mpz_t(), t.get_mpz_t(), br.a.get_mpz_t());
    if (rem != 0) continue;
    if (mpz_fdiv_ui(x.get_mpz_t(), map.modulus) != r) continue;
    out.push_back(std::move(x));
  }
  return make_set(std::move(out));
}

NatSet preimage(const BranchMap& map, const NatSet& A) {
  std::vector<Nat> out;
  for (const Nat& a : A) {
    NatSet p = predecessors(map, a);
    out.insert(out.end(), p.begin(), p.end());
  }
  return make_set(std::move(out));
}

const NatSet& LevelWalker::at(unsigned long j) {
  if (j > depth_cap_) throw DepthCapError(j, depth_cap_);
  while (levels_.size() <= j) levels_.push_back(preimage(map_, levels_.back()));
  return levels_[j];
}

LevelSet level(const BranchMap& map, const NatSet& A, unsigned long j,
               unsigned long depth_cap) {
  LevelWalker walker(map, A, depth_cap);
  return LevelSet{A, j, walker.at(j)};
}

WanderingResult wandering_check(const BranchMap& map, const Nat& w, unsigned long depth,
                                unsigned long depth_cap) {
  LevelWalker walker(map, NatSet{w}, depth_cap);
  walker.at(depth);
  for (unsigned long i = 0; i < depth; ++i) {
    for (unsigned long j = i + 1; j <= depth; ++j) {
      NatSet common = set_intersection(walker.at(i), walker.at(j));
      if (!common.empty()) return {false, i, j, common.front()};
    }
  }
  return {};
}

}  // namespace collatz
