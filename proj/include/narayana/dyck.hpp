#pragma once

#include "narayana/errors.hpp"
#include "narayana/polyomino.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace narayana {

enum class DyckStep : char { Rise = 'R', Fall = 'F' };

/// Rise/fall sequence starting with a rise, never below the baseline, ending
/// on it.
class DyckPath {
 public:
  /// Throws ValidationError if the steps do not form a Dyck path.
  explicit DyckPath(std::vector<DyckStep> steps);

  const std::vector<DyckStep>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }

  /// True iff the path has length 2(m+n) with m rises at even positions, n at
  /// odd positions (1-indexed), and touches the baseline only at its ends.
  bool is_polyomino_path() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;

 private:
  std::vector<DyckStep> steps_;
};

/// Visits every Dyck path with `half_length` rises.
void for_each_dyck_path(std::size_t half_length, const std::function<void(const DyckPath&)>& visit);

DyckPath parse_dyck(const std::string& text);
std::string format_dyck(const DyckPath& d);

/// Interleaves upper and lower steps: upper N and lower E rise, upper E and
/// lower N fall.
DyckPath ptd(const Polyomino& p);

/// Inverse of ptd. Throws ValidationError on parity mismatch or an early
/// return to the baseline.
Polyomino dtp(const DyckPath& d);

/// Labels row j (between heights j and j+1) with the letter of rank j and
/// reads the row labels of the rises left to right.
std::vector<Letter> dyck_to_area_word(const DyckPath& d);

/// Which characterizing condition of area words a letter sequence breaks.
enum class WordCondition {
  FirstLetter,   // must start with 0b and contain no other 0b
  Counts,        // at least one unbarred letter; no unbarred 0
  RankStep,      // rank(a[i+1]) <= rank(a[i]) + 1
};

const char* describe(WordCondition c);

class AreaWordError : public ValidationError {
 public:
  AreaWordError(WordCondition c, std::size_t position, const std::string& what)
      : ValidationError(what), condition_(c), position_(position) {}
  WordCondition condition() const { return condition_; }
  std::size_t position() const { return position_; }

 private:
  WordCondition condition_;
  std::size_t position_;
};

/// First violated condition, if any.
std::optional<WordCondition> find_word_violation(std::span<const Letter> letters);

/// Returns (m, n) = (#unbarred, #barred) or throws AreaWordError naming the
/// violated condition.
Dimensions validate_area_word(std::span<const Letter> letters);

/// The Dyck path whose row reading is w: for each letter, fall to its rank
/// then rise once; trailing falls close the path.
DyckPath area_word_to_dyck(const AreaWord& w);
Polyomino word_to_polyomino(const AreaWord& w);

}  // namespace narayana
