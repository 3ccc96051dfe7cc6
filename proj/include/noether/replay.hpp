#ifndef NOETHER_REPLAY_HPP
#define NOETHER_REPLAY_HPP

#include "noether/transcript.hpp"

namespace noether {

struct ReplayConfig {
  std::uint64_t seed = 0;
  int bound = 3;       // exponent bound for lattice / monomial searches
  int ansatz_cap = 32; // degree cap for membership solving
};

// Regular-representation reduction for the 2n-variable action: builds x_i
// (and, for even n, the y/y' split) and verifies the displayed tables.
Transcript regular_reduction(int n);

// Full replays of the three rationality proofs. Each returns a transcript
// whose ordered labels must match the target's claim manifest exactly.
Transcript replay_d9(const ReplayConfig& cfg);
Transcript replay_d6(const ReplayConfig& cfg);
Transcript replay_d10(const ReplayConfig& cfg);

// The standalone identity and involution-certificate suite.
Transcript replay_core(const ReplayConfig& cfg);

// Ordered claim labels for a target (d6 | d9 | d10 | core); a replay whose
// transcript deviates from its manifest throws.
const std::vector<std::string>& manifest(const std::string& target);

}  // namespace noether

#endif
