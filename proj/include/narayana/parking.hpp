#pragma once

#include "narayana/polyomino.hpp"
#include "narayana/qtpoly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace narayana {

/// Car (upper number) over level (lower number).
struct Domino {
  std::uint32_t car = 0;
  std::uint32_t level = 0;
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

/**
 * Parking function of size k: levels form a Dyck area word (first level 0,
 * each level at most one above its predecessor), cars are a permutation of
 * 1..k, and cars increase across every level rise.
 */
class ParkingFunction {
 public:
  /// Throws ValidationError naming the violated clause.
  explicit ParkingFunction(std::vector<Domino> dominoes);
  ParkingFunction(const std::vector<std::uint32_t>& cars, const std::vector<std::uint32_t>& levels);

  const std::vector<Domino>& dominoes() const { return dominoes_; }
  std::size_t size() const { return dominoes_.size(); }

  friend auto operator<=>(const ParkingFunction&, const ParkingFunction&) = default;

 private:
  std::vector<Domino> dominoes_;
};

/// Cars read by decreasing level, ties right to left.
std::vector<std::uint32_t> reading_word(const ParkingFunction& pf);
std::uint32_t pf_area(const ParkingFunction& pf);
/// Pairs i < j with equal levels and car_i < car_j, or level_i = level_j + 1
/// and car_i > car_j.
std::uint32_t pf_dinv(const ParkingFunction& pf);

/// True iff the values <= a appear as 1..a in order and the values > a as
/// a+1..a+b in order, and nothing else appears.
bool is_shuffle(const std::vector<std::uint32_t>& word, std::uint32_t a, std::uint32_t b);

/// Parking function with cars replaced by 1 (car in the first block) or 2.
/// Every level rise carries letters (1, 2); that is exactly the condition
/// under which a unique shuffle parking function lifts it.
class TwoLetterPF {
 public:
  TwoLetterPF() = default;
  /// Throws ValidationError on bad letters, levels, or a rise not of the
  /// form (1, 2).
  explicit TwoLetterPF(std::vector<Domino> dominoes);

  const std::vector<Domino>& dominoes() const { return dominoes_; }
  std::size_t size() const { return dominoes_.size(); }
  std::uint32_t ones() const;
  std::uint32_t twos() const { return static_cast<std::uint32_t>(size()) - ones(); }

  friend auto operator<=>(const TwoLetterPF&, const TwoLetterPF&) = default;

 private:
  std::vector<Domino> dominoes_;
};

/// Letters in reading order.
std::vector<std::uint32_t> reading_word(const TwoLetterPF& pf);
std::uint32_t pf_area(const TwoLetterPF& pf);
/// Equal levels with letters (1, 2), or level_i = level_j + 1 with (2, 1).
std::uint32_t pf_dinv(const TwoLetterPF& pf);
/// (# level-0 dominoes with letter 1, # with letter 2).
OneCounts zero_level_counts(const TwoLetterPF& pf);

/// Throws ValidationError unless pf belongs to Park_{a,b}.
TwoLetterPF reduce_two_letter(const ParkingFunction& pf, std::uint32_t a, std::uint32_t b);
/// The unique element of Park_{a,b} reducing to pf (a = pf.ones()).
ParkingFunction lift(const TwoLetterPF& pf);

/// Visits Park_{a,b} in reduced form, optionally restricted by the counts of
/// level-0 cars from each block.  Rejects a + b = 0.
void for_each_park(std::uint32_t a, std::uint32_t b, std::optional<OneCounts> filter,
                   const std::function<void(const TwoLetterPF&)>& visit);
std::vector<ParkingFunction> enumerate_park(std::uint32_t a, std::uint32_t b,
                                            std::optional<OneCounts> filter = std::nullopt);

/// Sum over Park_{a,b} of t^area q^dinv.  The (0,0) refinement is the zero
/// polynomial.  Rejects a + b = 0.
QTPolynomial para_poly(std::uint32_t a, std::uint32_t b, std::optional<OneCounts> filter = std::nullopt);

struct PeelResult {
  /// Word after removing level-0 dominoes and lowering the rest, before the
  /// leading (2 over 0) domino is dropped.
  TwoLetterPF intermediate;
  /// The intermediate word without its leading domino; empty when that was
  /// the only domino.
  TwoLetterPF peeled;
  std::uint32_t r = 0;  // removed level-0 1's
  std::uint32_t s = 0;  // removed level-0 2's
};

/**
 * Removes the level-0 dominoes, lowers the others by one, and drops the
 * leading (2 over 0) domino of the result.  Throws ValidationError if no
 * domino has level >= 1, and InternalError if the intermediate word does not
 * start with (2 over 0) followed by a level-0 domino.
 */
PeelResult peel(const TwoLetterPF& pf);

/// Inverse of peel: every word with r extra level-0 1's and s extra level-0
/// 2's whose peel is `peeled`.
std::vector<TwoLetterPF> unpeel(const TwoLetterPF& peeled, std::uint32_t r, std::uint32_t s);

}  // namespace narayana
