#pragma once

#include "narayana/polyomino.hpp"

#include <vector>

namespace narayana {

/// Relative order of two consecutive letter types, read NE to SW along the
/// part of a boundary path that carries them.  Always starts with `lower`.
struct Prescription {
  Letter lower;
  Letter upper;
  std::vector<Letter> word;
};

/// Intermediate states of the digamma construction.
struct DigammaTrace {
  std::vector<Prescription> prescriptions;
  /// partial_words[k] is the merged word after prescriptions 0..k.
  std::vector<std::vector<Letter>> partial_words;
};

/**
 * Bijection Polyo_{m,n} -> Polyo_{n,m} with area(digamma(P)) = bounce(P) and
 * dinv(digamma(P)) = area(P).
 *
 * The boundary steps of P are labeled by the bounce run at the same height
 * (North steps) or column (East steps).  For each pair of consecutive letter
 * types the labeled upper path (pairs 0b/1, 1b/2, ...) or lower path (pairs
 * 1/1b, 2/2b, ...) gives a prescription, and the prescriptions are merged
 * into one area word.  Throws InternalError if a prescription is not carried
 * by a contiguous stretch of its path or the merge leaves the set of area
 * words.
 */
Polyomino digamma(const Polyomino& p, DigammaTrace* trace = nullptr);

/// Inverse of digamma: cuts the area word of q into its two-type
/// restrictions and lays them out as the upper and lower paths.  Throws
/// ValidationError if the paths do not assemble into a polyomino.
Polyomino digamma_inverse(const Polyomino& q);

/// Reflection in the line y = x: N and E swap and the two paths trade roles.
Polyomino transpose_flip(const Polyomino& p);

/// Inserts each `upper` block of the prescription directly after the
/// matching (by position) `lower` letter of the partial word.  Exposed for
/// testing the forced-placement rule.
std::vector<Letter> merge_prescription(const std::vector<Letter>& partial, const Prescription& prescription);

}  // namespace narayana
