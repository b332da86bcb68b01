#include "narayana/polyomino.hpp"

#include "narayana/dyck.hpp"
#include "narayana/errors.hpp"

#include <cctype>
#include <sstream>

namespace narayana {

AreaWord::AreaWord(std::vector<Letter> letters) : letters_(std::move(letters)) {
  dims_ = validate_area_word(letters_);
}

std::string format_letters(std::span<const Letter> letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out.push_back(' ');
    out += std::to_string(letters[i].value);
    if (letters[i].barred) out.push_back('b');
  }
  return out;
}

std::string format_word(const AreaWord& w) { return format_letters(w.letters()); }

std::vector<Letter> parse_letters(const std::string& text) {
  std::vector<Letter> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) {
    bool barred = token.back() == 'b';
    std::string digits = barred ? token.substr(0, token.size() - 1) : token;
    if (digits.empty() || digits.size() > 9) throw ValidationError("bad area-word token '" + token + "'");
    for (char c : digits) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ValidationError("bad area-word token '" + token + "'");
    }
    auto value = static_cast<std::uint32_t>(std::stoul(digits));
    if (!barred && value == 0) throw ValidationError("unbarred letters start at 1, got '" + token + "'");
    out.push_back(Letter{value, barred});
  }
  return out;
}

Path parse_path(const std::string& text) {
  Path out;
  for (char c : text) {
    if (c == 'N' || c == 'n') {
      out.push_back(Step::N);
    } else if (c == 'E' || c == 'e') {
      out.push_back(Step::E);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw ValidationError(std::string("bad path step '") + c + "'");
    }
  }
  return out;
}

std::string format_path(const Path& p) {
  std::string out;
  for (auto s : p) out.push_back(static_cast<char>(s));
  return out;
}

Polyomino Polyomino::from_paths(Path upper, Path lower) {
  if (upper.size() != lower.size()) throw ValidationError("upper and lower paths have different lengths");
  if (upper.empty()) throw ValidationError("empty paths");

  std::uint32_t um = 0, un = 0, lm = 0, ln = 0;
  for (auto s : upper) (s == Step::E ? um : un) += 1;
  for (auto s : lower) (s == Step::E ? lm : ln) += 1;
  if (um != lm || un != ln) throw ValidationError("upper and lower paths end at different points");
  if (um == 0 || un == 0) throw ValidationError("bounding box must have positive width and height");

  // Both paths sit on the anti-diagonal x + y = i after i steps, so "upper
  // strictly above lower" is a comparison of heights.
  std::uint32_t uy = 0, ly = 0;
  for (std::size_t i = 0; i + 1 < upper.size(); ++i) {
    uy += upper[i] == Step::N;
    ly += lower[i] == Step::N;
    if (uy <= ly) {
      throw ValidationError("paths " + format_path(upper) + " / " + format_path(lower) + " touch after step " +
                            std::to_string(i + 1));
    }
  }

  Polyomino p;
  p.m_ = um;
  p.n_ = un;
  p.upper_row_.reserve(um);
  p.lower_row_.reserve(um);
  std::uint32_t y = 0;
  for (auto s : upper) s == Step::N ? void(++y) : p.upper_row_.push_back(y);
  y = 0;
  for (auto s : lower) s == Step::N ? void(++y) : p.lower_row_.push_back(y);
  p.upper_ = std::move(upper);
  p.lower_ = std::move(lower);
  return p;
}

bool Polyomino::is_interior(long x, long y) const {
  if (x < 0 || x >= static_cast<long>(m_) || y < 0) return false;
  return static_cast<long>(lower_row_[x]) <= y && y < static_cast<long>(upper_row_[x]);
}

BigInt narayana_count(std::uint32_t a, std::uint32_t b) {
  if (b < 1 || b > a) throw ValidationError("narayana_count requires 1 <= b <= a");
  return binomial(a, b) * binomial(a, b - 1) / a;
}

namespace {

void extend_words(std::vector<Letter>& prefix, std::uint32_t unbarred_left, std::uint32_t barred_left,
                  const std::function<void(const AreaWord&)>& visit) {
  if (unbarred_left == 0 && barred_left == 0) {
    visit(AreaWord(prefix));
    return;
  }
  std::uint32_t top = prefix.back().rank() + 1;
  for (std::uint32_t r = 1; r <= top; ++r) {
    Letter next = Letter::from_rank(r);
    std::uint32_t& budget = next.barred ? barred_left : unbarred_left;
    if (budget == 0) continue;
    --budget;
    prefix.push_back(next);
    extend_words(prefix, unbarred_left, barred_left, visit);
    prefix.pop_back();
    ++budget;
  }
}

}  // namespace

void for_each_area_word(std::uint32_t m, std::uint32_t n, const std::function<void(const AreaWord&)>& visit) {
  if (m == 0 || n == 0) throw ValidationError("Polyo_{m,n} needs m >= 1 and n >= 1");
  std::vector<Letter> prefix{Letter::bar(0)};
  prefix.reserve(m + n);
  extend_words(prefix, m, n - 1, visit);
}

std::vector<AreaWord> enumerate_area_words(std::uint32_t m, std::uint32_t n) {
  std::vector<AreaWord> out;
  for_each_area_word(m, n, [&](const AreaWord& w) { out.push_back(w); });
  return out;
}

std::vector<Polyomino> enumerate_polyominoes(std::uint32_t m, std::uint32_t n) {
  std::vector<Polyomino> out;
  for_each_area_word(m, n, [&](const AreaWord& w) { out.push_back(word_to_polyomino(w)); });
  return out;
}

AreaWord area_word(const Polyomino& p) {
  const std::uint32_t m = p.width();
  const std::uint32_t n = p.height();
  std::vector<std::vector<bool>> crossed(m, std::vector<bool>(n, false));

  // Stage 1: from the East end of each lower East step, walk NW through
  // interior cells until the upper path stops the line.
  std::vector<std::uint32_t> lower_labels(m);
  for (std::uint32_t x = 0; x < m; ++x) {
    long cx = x, cy = p.lower_bottom(x);
    std::uint32_t count = 0;
    for (; p.is_interior(cx, cy); --cx, ++cy, ++count) crossed[cx][cy] = true;
    lower_labels[x] = count;
  }

  // Stage 2: each upper North step at (x, y) counts uncrossed interior cells
  // of row y to its East.
  std::vector<std::uint32_t> upper_labels;
  upper_labels.reserve(n);
  std::uint32_t x = 0, y = 0;
  for (auto s : p.upper()) {
    if (s == Step::E) {
      ++x;
      continue;
    }
    std::uint32_t count = 0;
    for (std::uint32_t cx = x; cx < m && p.is_interior(cx, y); ++cx) count += !crossed[cx][y];
    upper_labels.push_back(count);
    ++y;
  }

  // Step i of either path starts on the anti-diagonal x + y = i; on ties the
  // upper label is read first.
  std::vector<Letter> letters;
  letters.reserve(m + n);
  std::size_t ui = 0, li = 0;
  for (std::size_t i = 0; i < p.upper().size(); ++i) {
    if (p.upper()[i] == Step::N) letters.push_back(Letter::bar(upper_labels[ui++]));
    if (p.lower()[i] == Step::E) letters.push_back(Letter::unbarred(lower_labels[li++]));
  }
  return AreaWord(std::move(letters));
}

std::uint32_t interior_cell_count(const Polyomino& p) {
  std::uint32_t count = 0;
  for (std::uint32_t x = 0; x < p.width(); ++x) {
    for (std::uint32_t y = 0; y < p.height(); ++y) count += p.is_interior(x, y);
  }
  return count;
}

std::uint32_t area(const AreaWord& w) {
  std::uint32_t sum = 0;
  for (const auto& l : w.letters()) sum += l.value;
  return sum;
}

std::uint32_t dinv(const AreaWord& w) {
  // seen[r] = letters of rank r so far; a letter of rank r pairs with every
  // earlier letter of rank r - 1.
  std::vector<std::uint32_t> seen(2 * w.size() + 2, 0);
  std::uint32_t total = 0;
  for (const auto& l : w.letters()) {
    std::uint32_t r = l.rank();
    if (r > 0) total += seen[r - 1];
    ++seen[r];
  }
  return total;
}

OneCounts one_counts(const AreaWord& w) {
  OneCounts c;
  for (const auto& l : w.letters()) {
    if (l.value == 1) (l.barred ? c.s : c.r) += 1;
  }
  return c;
}

BouncePath bounce_path(const Polyomino& p) {
  const std::uint32_t m = p.width();
  const std::uint32_t n = p.height();

  // lower_north_x[y] = x-position of the lower path's North step ending at
  // height y.
  std::vector<std::uint32_t> lower_north_x(n + 1, 0);
  {
    std::uint32_t x = 0, y = 0;
    for (auto s : p.lower()) {
      if (s == Step::E) {
        ++x;
      } else {
        lower_north_x[++y] = x;
      }
    }
  }

  BouncePath b;
  b.horizontal.push_back(1);
  std::uint32_t x = 1, y = 0;
  while (x != m || y != n) {
    std::uint32_t top = p.upper_top(x - 1);
    if (top <= y) throw InternalError("bounce path stalled going North");
    b.vertical.push_back(top - y);
    y = top;
    if (x == m && y == n) break;
    std::uint32_t next_x = lower_north_x[y];
    if (next_x <= x) throw InternalError("bounce path stalled going East");
    b.horizontal.push_back(next_x - x);
    x = next_x;
  }
  return b;
}

std::uint32_t bounce(const BouncePath& b) {
  std::uint32_t sum = 0;
  for (std::size_t i = 0; i < b.horizontal.size(); ++i) sum += static_cast<std::uint32_t>(i) * b.horizontal[i];
  for (std::size_t i = 0; i < b.vertical.size(); ++i) sum += static_cast<std::uint32_t>(i + 1) * b.vertical[i];
  return sum;
}

std::uint32_t bounce(const Polyomino& p) { return bounce(bounce_path(p)); }

OneCounts bounce_one_counts(const Polyomino& p) {
  BouncePath b = bounce_path(p);
  return OneCounts{b.vertical.front(), b.horizontal.size() > 1 ? b.horizontal[1] : 0};
}

QTPolynomial nara_enum(std::uint32_t m, std::uint32_t n, std::optional<OneCounts> filter) {
  QTPolynomial out;
  for_each_area_word(m, n, [&](const AreaWord& w) {
    if (filter && one_counts(w) != *filter) return;
    out.add_term(dinv(w), area(w), 1);
  });
  return out;
}

QTPolynomial tilde_nara_enum(std::uint32_t m, std::uint32_t n, std::optional<OneCounts> filter) {
  QTPolynomial out;
  for_each_area_word(m, n, [&](const AreaWord& w) {
    Polyomino p = word_to_polyomino(w);
    BouncePath b = bounce_path(p);
    if (filter) {
      OneCounts c{b.vertical.front(), b.horizontal.size() > 1 ? b.horizontal[1] : 0};
      if (c != *filter) return;
    }
    out.add_term(area(w), bounce(b), 1);
  });
  return out;
}

}  // namespace narayana
