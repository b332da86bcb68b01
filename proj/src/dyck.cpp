#include "narayana/dyck.hpp"

#include "narayana/errors.hpp"

#include <string>

namespace narayana {

DyckPath::DyckPath(std::vector<DyckStep> steps) : steps_(std::move(steps)) {
  if (steps_.empty() || steps_.front() != DyckStep::Rise) throw ValidationError("Dyck path must start with a rise");
  long height = 0;
  for (auto s : steps_) {
    height += s == DyckStep::Rise ? 1 : -1;
    if (height < 0) throw ValidationError("Dyck path goes below the baseline");
  }
  if (height != 0) throw ValidationError("Dyck path does not end on the baseline");
}

bool DyckPath::is_polyomino_path() const {
  std::size_t even_rises = 0;
  std::size_t odd_rises = 0;
  long height = 0;
  for (std::size_t i = 0; i < steps_.size(); ++i) {
    if (steps_[i] == DyckStep::Rise) {
      ++height;
      ((i + 1) % 2 == 0 ? even_rises : odd_rises) += 1;
    } else {
      --height;
    }
    if (height == 0 && i + 1 != steps_.size()) return false;
  }
  // An odd rise count of zero would mean an empty polyomino height.
  return steps_.size() % 2 == 0 && even_rises >= 1 && odd_rises >= 1 &&
         2 * (even_rises + odd_rises) == steps_.size();
}

void for_each_dyck_path(std::size_t half_length, const std::function<void(const DyckPath&)>& visit) {
  std::vector<DyckStep> steps;
  steps.reserve(2 * half_length);
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t rises, std::size_t falls) {
    if (falls == half_length) {
      visit(DyckPath(steps));
      return;
    }
    if (rises < half_length) {
      steps.push_back(DyckStep::Rise);
      extend(rises + 1, falls);
      steps.pop_back();
    }
    if (falls < rises) {
      steps.push_back(DyckStep::Fall);
      extend(rises, falls + 1);
      steps.pop_back();
    }
  };
  if (half_length > 0) extend(0, 0);
}

DyckPath parse_dyck(const std::string& text) {
  std::vector<DyckStep> steps;
  for (char c : text) {
    if (c == 'R' || c == 'U') {
      steps.push_back(DyckStep::Rise);
    } else if (c == 'F' || c == 'D') {
      steps.push_back(DyckStep::Fall);
    } else if (c != ' ') {
      throw ValidationError(std::string("bad Dyck step '") + c + "'");
    }
  }
  return DyckPath(std::move(steps));
}

std::string format_dyck(const DyckPath& d) {
  std::string out;
  for (auto s : d.steps()) out.push_back(static_cast<char>(s));
  return out;
}

DyckPath ptd(const Polyomino& p) {
  std::vector<DyckStep> steps;
  steps.reserve(2 * p.upper().size());
  for (std::size_t i = 0; i < p.upper().size(); ++i) {
    steps.push_back(p.upper()[i] == Step::N ? DyckStep::Rise : DyckStep::Fall);
    steps.push_back(p.lower()[i] == Step::E ? DyckStep::Rise : DyckStep::Fall);
  }
  return DyckPath(std::move(steps));
}

Polyomino dtp(const DyckPath& d) {
  if (!d.is_polyomino_path()) {
    throw ValidationError("Dyck path " + format_dyck(d) + " is not the image of a parallelogram polyomino");
  }
  Path upper;
  Path lower;
  for (std::size_t i = 0; i < d.size(); ++i) {
    bool rise = d.steps()[i] == DyckStep::Rise;
    if (i % 2 == 0) {
      upper.push_back(rise ? Step::N : Step::E);
    } else {
      lower.push_back(rise ? Step::E : Step::N);
    }
  }
  return Polyomino::from_paths(std::move(upper), std::move(lower));
}

std::vector<Letter> dyck_to_area_word(const DyckPath& d) {
  std::vector<Letter> out;
  std::uint32_t height = 0;
  for (auto s : d.steps()) {
    if (s == DyckStep::Rise) {
      out.push_back(Letter::from_rank(height));
      ++height;
    } else {
      --height;
    }
  }
  return out;
}

const char* describe(WordCondition c) {
  switch (c) {
    case WordCondition::FirstLetter:
      return "condition 1: the word must start with 0b and contain no other 0b";
    case WordCondition::Counts:
      return "condition 2: the word needs at least one unbarred letter (values >= 1)";
    case WordCondition::RankStep:
      return "condition 3: each letter may exceed its predecessor by at most one step of the order";
  }
  return "unknown condition";
}

namespace {

struct Violation {
  WordCondition condition;
  std::size_t position;
};

std::optional<Violation> first_violation(std::span<const Letter> letters) {
  if (letters.empty() || letters[0] != Letter::bar(0)) return Violation{WordCondition::FirstLetter, 0};
  std::size_t unbarred = 0;
  for (std::size_t i = 1; i < letters.size(); ++i) {
    if (letters[i] == Letter::bar(0)) return Violation{WordCondition::FirstLetter, i};
    if (!letters[i].barred) {
      if (letters[i].value == 0) return Violation{WordCondition::Counts, i};
      ++unbarred;
    }
    if (letters[i].rank() > letters[i - 1].rank() + 1) return Violation{WordCondition::RankStep, i};
  }
  if (unbarred == 0) return Violation{WordCondition::Counts, letters.size()};
  return std::nullopt;
}

}  // namespace

std::optional<WordCondition> find_word_violation(std::span<const Letter> letters) {
  if (auto v = first_violation(letters)) return v->condition;
  return std::nullopt;
}

Dimensions validate_area_word(std::span<const Letter> letters) {
  if (auto v = first_violation(letters)) {
    std::string what = "invalid area word '" + format_letters(letters) + "': " + describe(v->condition);
    if (v->position < letters.size()) what += " (at position " + std::to_string(v->position + 1) + ")";
    throw AreaWordError(v->condition, v->position, what);
  }
  Dimensions d;
  for (const auto& l : letters) (l.barred ? d.n : d.m) += 1;
  return d;
}

DyckPath area_word_to_dyck(const AreaWord& w) {
  std::vector<DyckStep> steps;
  steps.reserve(2 * w.size());
  std::uint32_t height = 0;
  for (const auto& l : w.letters()) {
    for (; height > l.rank(); --height) steps.push_back(DyckStep::Fall);
    steps.push_back(DyckStep::Rise);
    ++height;
  }
  for (; height > 0; --height) steps.push_back(DyckStep::Fall);
  return DyckPath(std::move(steps));
}

Polyomino word_to_polyomino(const AreaWord& w) { return dtp(area_word_to_dyck(w)); }

}  // namespace narayana
