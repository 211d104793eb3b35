// Seeded verification suite: randomized property checks and closed-form
// reproductions for every module, grouped the way the acceptance criteria
// consume them.
#pragma once

#include "triad/runner.hpp"

#include <cstdint>
#include <vector>

namespace triad {

/// Criterion 1: isomorphism suite (homomorphism, round trips, brackets,
/// boost Hermitian/SO(3,C) membership, one-parameter subgroup).
std::vector<CheckResult> verify_isomorphisms(std::uint64_t seed);

/// Criterion 2: C^3 boost against the 4x4 boost mapped through the group
/// isomorphism.
std::vector<CheckResult> verify_boost_equivalence(std::uint64_t seed);

/// Criterion 3: J1/J2 preservation under the rotation -> displacement
/// conversion plus the worked sphere and circle values.
std::vector<CheckResult> verify_invariant_suite(std::uint64_t seed);

/// Criterion 4: zero spin velocity of rigid configurations spinning about
/// their resting barycenter, plus the homogeneous-sphere quadrature.
std::vector<CheckResult> verify_zero_spin(std::uint64_t seed);

/// Criterion 5: brute-force term averages over a 64x128 sphere against the
/// closed-form averaged terms.
std::vector<CheckResult> verify_averaged_terms();

/// Criterion 6: disc-on-plane circle, spin-down displacement and free-fall
/// departure predictions.
std::vector<CheckResult> verify_predictions();

/// Criterion 7: precession identities and the frame-dragging ratio.
std::vector<CheckResult> verify_precession(std::uint64_t seed);

/// All of the above in order; deterministic for a fixed seed.
RunReport verify_all(std::uint64_t seed);

}  // namespace triad
