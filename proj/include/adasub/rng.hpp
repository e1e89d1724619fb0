#pragma once

#include <cstdint>
#include <random>

namespace adasub {

// All randomness in the project flows through this wrapper so trajectories
// are bit-reproducible: std::mt19937_64 plus a fixed uint64-to-double
// mapping, never the implementation-defined <random> distributions.
//
// Documented draw order for one trajectory:
//   1. the realization: independent priors draw one u01 per item in id
//      order, joint priors draw a single u01 against the atom CDF;
//   2. policy start-up draws (Algorithm 2: one u01 per item in id order for
//      the membership of S, then one u01 for the branch variable r0);
//   3. one u01 per executed policy step, resolved against the step's action
//      distribution by cumulative-threshold walk (real items in ascending id
//      order, the no-op slot last).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double u01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace adasub
