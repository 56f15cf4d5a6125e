#include "collatz/dynamics.hpp"

#include <map>
#include <utility>

namespace collatz {

Nat apply(const BranchMap& map, const Nat& n) {
  if (n < 1) throw std::domain_error("apply: n must be >= 1");
  const Branch& br = map.branch_for(n);
  Nat num = br.a * n + br.b;
  Nat q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), br.d.get_mpz_t());
  if (r != 0) throw std::domain_error("apply: branch image is not integral");
  if (q < 1) throw std::domain_error("apply: branch image below 1");
  return q;
}

Cycle canonical_cycle(std::vector<Nat> run) {
  size_t min_idx = 0;
  for (size_t i = 1; i < run.size(); ++i)
    if (run[i] < run[min_idx]) min_idx = i;
  std::rotate(run.begin(), run.begin() + min_idx, run.end());
  return Cycle{std::move(run)};
}

OrbitResult orbit(const BranchMap& map, const Nat& n, const Limits& limits,
                  size_t store_cap) {
  OrbitResult res;
  res.start = n;
  std::vector<Nat> traj{n};
  std::map<Nat, unsigned long> seen{{n, 0}};

  for (unsigned long step = 1; step <= limits.max_steps; ++step) {
    Nat w = apply(map, traj.back());
    res.steps_taken = step;
    if (w > limits.max_value) {
      res.kind = OrbitResult::Kind::ValueBound;
      res.offending = std::move(w);
      break;
    }
    auto it = seen.find(w);
    if (it != seen.end()) {
      res.kind = OrbitResult::Kind::EnteredCycle;
      res.hitting_time = it->second;
      res.cycle = canonical_cycle(
          std::vector<Nat>(traj.begin() + it->second, traj.end()));
      break;
    }
    seen.emplace(w, step);
    traj.push_back(std::move(w));
    if (step == limits.max_steps) res.kind = OrbitResult::Kind::StepLimit;
  }

  if (traj.size() > store_cap) {
    traj.resize(store_cap);
    res.truncated = true;
  }
  res.iterates = std::move(traj);
  return res;
}

CycleSearch detect_cycle(const BranchMap& map, const Nat& seed, const Limits& limits) {
  OrbitResult r = orbit(map, seed, limits, /*store_cap=*/1);
  if (r.entered_cycle()) return {std::move(r.cycle), StopReason::StepLimit};
  return {std::nullopt, r.stop_reason()};
}

HitResult hitting_time(const BranchMap& map, const Nat& n, const NatSet& target,
                       const Limits& limits) {
  if (target.empty()) throw std::invalid_argument("hitting_time: empty target");
  Nat v = n;
  std::map<Nat, bool> seen;
  for (unsigned long k = 0;; ++k) {
    if (set_contains(target, v)) return {true, k, StopReason::StepLimit};
    if (k == limits.max_steps) return {false, 0, StopReason::StepLimit};
    if (!seen.emplace(v, true).second)
      return {false, 0, StopReason::StepLimit};  // cycled without touching target
    v = apply(map, v);
    if (v > limits.max_value) return {false, 0, StopReason::ValueBound};
  }
}

}  // namespace collatz
