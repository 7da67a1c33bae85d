#pragma once

#include <cstdint>
#include <ostream>

namespace homnov {

// Seeded randomized self-check: draws fresh samples from every generator
// family and re-verifies the library's structural identities on them
// (axioms of generated algebras, coboundary composition, construction
// outputs, deformation equations, equivalence laws, document round-trips).
// Prints one line per property group to out; returns 0 when every check
// passes, 1 otherwise.
int run_selftest(std::uint64_t seed, std::ostream& out);

} // namespace homnov
