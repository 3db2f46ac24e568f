#pragma once

// Fixture data for the reproduction suite: expected values transcribed by
// hand, kept apart from the code that computes the actual values.

namespace rayleigh::fixtures {

// Expected value per fact id, as a flat JSON object of strings.
extern const char* const kGoldens;

// Square decomposition of the a8 pair difference {7,8}: six squared
// binomials plus a remainder whose coefficients are all nonnegative.
extern const char* const kA8Certificate;

// Pairwise differences of jprime at the all-ones point, upper triangle,
// keyed "e,f".
extern const char* const kJPrimeTable;

}  // namespace rayleigh::fixtures
