#pragma once

#include "narayana/qtpoly.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace narayana {

/**
 * A letter of the area-word alphabet: an unbarred value k >= 1 or a barred
 * value k >= 0.  The alphabet is totally ordered as
 *
 *     0b < 1 < 1b < 2 < 2b < 3 < ...
 *
 * and rank() is the position in that order: rank(k) = 2k - 1 and
 * rank(kb) = 2k.  Row labels of Dyck paths and the dinv successor relation are
 * both expressed through rank().
 */
struct Letter {
  std::uint32_t value = 0;
  bool barred = true;

  constexpr std::uint32_t rank() const { return barred ? 2 * value : 2 * value - 1; }

  static constexpr Letter from_rank(std::uint32_t r) {
    return (r % 2 == 0) ? Letter{r / 2, true} : Letter{(r + 1) / 2, false};
  }
  static constexpr Letter unbarred(std::uint32_t v) { return Letter{v, false}; }
  static constexpr Letter bar(std::uint32_t v) { return Letter{v, true}; }

  friend constexpr bool operator==(const Letter&, const Letter&) = default;
  friend constexpr auto operator<=>(const Letter& a, const Letter& b) { return a.rank() <=> b.rank(); }
};

/// Box dimensions: width m counts unbarred letters, height n barred ones.
struct Dimensions {
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  friend bool operator==(const Dimensions&, const Dimensions&) = default;
};

/// (number of 1's, number of 1b's), or the matching bounce-run lengths.
struct OneCounts {
  std::uint32_t r = 0;
  std::uint32_t s = 0;
  friend bool operator==(const OneCounts&, const OneCounts&) = default;
};

/**
 * A word that is the area word of some parallelogram polyomino.  The
 * constructor enforces the three characterizing conditions; see
 * validate_area_word() in dyck.hpp.
 */
class AreaWord {
 public:
  explicit AreaWord(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  const Letter& operator[](std::size_t i) const { return letters_[i]; }
  std::uint32_t width() const { return dims_.m; }
  std::uint32_t height() const { return dims_.n; }
  Dimensions dims() const { return dims_; }

  friend bool operator==(const AreaWord& a, const AreaWord& b) { return a.letters_ == b.letters_; }
  friend auto operator<=>(const AreaWord& a, const AreaWord& b) {
    return std::lexicographical_compare_three_way(a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
                                                  b.letters_.end());
  }

 private:
  std::vector<Letter> letters_;
  Dimensions dims_;
};

/// Space-separated tokens, `<digits>` for unbarred and `<digits>b` for barred.
std::string format_letters(std::span<const Letter> letters);
std::string format_word(const AreaWord& w);
/// Throws ValidationError on a malformed token. Does not check area-word
/// conditions.
std::vector<Letter> parse_letters(const std::string& text);

enum class Step : char { N = 'N', E = 'E' };
using Path = std::vector<Step>;

Path parse_path(const std::string& text);
std::string format_path(const Path& p);

/**
 * A parallelogram polyomino in an m x n box: two N/E lattice paths from (0,0)
 * to (m,n) that meet only at their endpoints.  The upper path lies strictly
 * above-left of the lower one at every intermediate point.
 */
class Polyomino {
 public:
  /// Throws ValidationError unless the paths define a parallelogram polyomino.
  static Polyomino from_paths(Path upper, Path lower);

  std::uint32_t width() const { return m_; }
  std::uint32_t height() const { return n_; }
  const Path& upper() const { return upper_; }
  const Path& lower() const { return lower_; }

  /// Height of the upper / lower path's East step spanning [x, x+1].
  std::uint32_t upper_top(std::uint32_t x) const { return upper_row_[x]; }
  std::uint32_t lower_bottom(std::uint32_t x) const { return lower_row_[x]; }
  bool is_interior(long x, long y) const;

  friend bool operator==(const Polyomino& a, const Polyomino& b) {
    return a.upper_ == b.upper_ && a.lower_ == b.lower_;
  }
  friend auto operator<=>(const Polyomino& a, const Polyomino& b) {
    if (auto c = a.upper_ <=> b.upper_; c != 0) return c;
    return a.lower_ <=> b.lower_;
  }

 private:
  Polyomino() = default;

  Path upper_;
  Path lower_;
  std::uint32_t m_ = 0;
  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> upper_row_;
  std::vector<std::uint32_t> lower_row_;
};

/**
 * Run lengths of the bounce path.  horizontal[i] is the length of the i-th
 * East run (label ib, i from 0, horizontal[0] == 1); vertical[i] is the length
 * of the (i+1)-th North run (label i+1).
 */
struct BouncePath {
  std::vector<std::uint32_t> horizontal;
  std::vector<std::uint32_t> vertical;
  friend bool operator==(const BouncePath&, const BouncePath&) = default;
};

/// N(a, b) = C(a,b) C(a,b-1) / a.  Requires 1 <= b <= a.
BigInt narayana_count(std::uint32_t a, std::uint32_t b);

/// Visits every area word of Polyo_{m,n} once, in lexicographic rank order.
void for_each_area_word(std::uint32_t m, std::uint32_t n, const std::function<void(const AreaWord&)>& visit);
std::vector<AreaWord> enumerate_area_words(std::uint32_t m, std::uint32_t n);
std::vector<Polyomino> enumerate_polyominoes(std::uint32_t m, std::uint32_t n);

/// Area word read off the two labeling stages (diagonals from lower East
/// steps, then uncrossed cells right of upper North steps).
AreaWord area_word(const Polyomino& p);

/// Number of cells strictly between the two paths.
std::uint32_t interior_cell_count(const Polyomino& p);

std::uint32_t area(const AreaWord& w);
std::uint32_t dinv(const AreaWord& w);
OneCounts one_counts(const AreaWord& w);

BouncePath bounce_path(const Polyomino& p);
std::uint32_t bounce(const BouncePath& b);
std::uint32_t bounce(const Polyomino& p);
OneCounts bounce_one_counts(const Polyomino& p);

/// Sum over Polyo_{m,n} of q^dinv t^area, optionally restricted to words
/// with the given numbers of 1's and 1b's.
QTPolynomial nara_enum(std::uint32_t m, std::uint32_t n, std::optional<OneCounts> filter = std::nullopt);

/// Sum over Polyo_{m,n} of q^area t^bounce, optionally restricted by the
/// lengths (first North run, second East run) of the bounce path.
QTPolynomial tilde_nara_enum(std::uint32_t m, std::uint32_t n, std::optional<OneCounts> filter = std::nullopt);

}  // namespace narayana
