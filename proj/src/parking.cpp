#include "narayana/parking.hpp"

#include "narayana/errors.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace narayana {

namespace {

void check_levels(const std::vector<Domino>& dominoes) {
  if (dominoes.empty()) return;
  if (dominoes.front().level != 0) throw ValidationError("first level must be 0");
  for (std::size_t i = 1; i < dominoes.size(); ++i) {
    if (dominoes[i].level > dominoes[i - 1].level + 1) {
      throw ValidationError("level rises by more than one at position " + std::to_string(i + 1));
    }
  }
}

}  // namespace

ParkingFunction::ParkingFunction(std::vector<Domino> dominoes) : dominoes_(std::move(dominoes)) {
  check_levels(dominoes_);
  std::vector<bool> seen(dominoes_.size() + 1, false);
  for (const auto& d : dominoes_) {
    if (d.car < 1 || d.car > dominoes_.size() || seen[d.car]) {
      throw ValidationError("cars must be a permutation of 1.." + std::to_string(dominoes_.size()));
    }
    seen[d.car] = true;
  }
  for (std::size_t i = 1; i < dominoes_.size(); ++i) {
    if (dominoes_[i].level > dominoes_[i - 1].level && dominoes_[i].car < dominoes_[i - 1].car) {
      throw ValidationError("cars must increase across the level rise at position " + std::to_string(i + 1));
    }
  }
}

ParkingFunction::ParkingFunction(const std::vector<std::uint32_t>& cars, const std::vector<std::uint32_t>& levels)
    : ParkingFunction([&] {
        if (cars.size() != levels.size()) throw ValidationError("cars and levels differ in length");
        std::vector<Domino> d;
        for (std::size_t i = 0; i < cars.size(); ++i) d.push_back(Domino{cars[i], levels[i]});
        return d;
      }()) {}

namespace {

// Indices in reading order: level descending, then right to left.
std::vector<std::size_t> reading_order(const std::vector<Domino>& dominoes) {
  std::vector<std::size_t> idx(dominoes.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    if (dominoes[i].level != dominoes[j].level) return dominoes[i].level > dominoes[j].level;
    return i > j;
  });
  return idx;
}

std::uint32_t level_sum(const std::vector<Domino>& dominoes) {
  std::uint32_t sum = 0;
  for (const auto& d : dominoes) sum += d.level;
  return sum;
}

}  // namespace

std::vector<std::uint32_t> reading_word(const ParkingFunction& pf) {
  std::vector<std::uint32_t> out;
  for (auto i : reading_order(pf.dominoes())) out.push_back(pf.dominoes()[i].car);
  return out;
}

std::uint32_t pf_area(const ParkingFunction& pf) { return level_sum(pf.dominoes()); }

std::uint32_t pf_dinv(const ParkingFunction& pf) {
  const auto& d = pf.dominoes();
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i].level == d[j].level && d[i].car < d[j].car) ++count;
      if (d[i].level == d[j].level + 1 && d[i].car > d[j].car) ++count;
    }
  }
  return count;
}

bool is_shuffle(const std::vector<std::uint32_t>& word, std::uint32_t a, std::uint32_t b) {
  if (word.size() != static_cast<std::size_t>(a) + b) return false;
  std::uint32_t next_small = 1, next_large = a + 1;
  for (auto v : word) {
    if (v == next_small && v <= a) {
      ++next_small;
    } else if (v == next_large && v > a) {
      ++next_large;
    } else {
      return false;
    }
  }
  return true;
}

TwoLetterPF::TwoLetterPF(std::vector<Domino> dominoes) : dominoes_(std::move(dominoes)) {
  check_levels(dominoes_);
  for (const auto& d : dominoes_) {
    if (d.car != 1 && d.car != 2) throw ValidationError("two-letter dominoes carry 1 or 2");
  }
  for (std::size_t i = 1; i < dominoes_.size(); ++i) {
    if (dominoes_[i].level > dominoes_[i - 1].level && (dominoes_[i - 1].car != 1 || dominoes_[i].car != 2)) {
      throw ValidationError("a level rise must go from a 1 to a 2 (position " + std::to_string(i + 1) + ")");
    }
  }
}

std::uint32_t TwoLetterPF::ones() const {
  return static_cast<std::uint32_t>(
      std::count_if(dominoes_.begin(), dominoes_.end(), [](const Domino& d) { return d.car == 1; }));
}

std::vector<std::uint32_t> reading_word(const TwoLetterPF& pf) {
  std::vector<std::uint32_t> out;
  for (auto i : reading_order(pf.dominoes())) out.push_back(pf.dominoes()[i].car);
  return out;
}

std::uint32_t pf_area(const TwoLetterPF& pf) { return level_sum(pf.dominoes()); }

std::uint32_t pf_dinv(const TwoLetterPF& pf) {
  const auto& d = pf.dominoes();
  std::uint32_t count = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      if (d[i].level == d[j].level && d[i].car == 1 && d[j].car == 2) ++count;
      if (d[i].level == d[j].level + 1 && d[i].car == 2 && d[j].car == 1) ++count;
    }
  }
  return count;
}

OneCounts zero_level_counts(const TwoLetterPF& pf) {
  OneCounts c;
  for (const auto& d : pf.dominoes()) {
    if (d.level == 0) (d.car == 1 ? c.r : c.s) += 1;
  }
  return c;
}

TwoLetterPF reduce_two_letter(const ParkingFunction& pf, std::uint32_t a, std::uint32_t b) {
  if (!is_shuffle(reading_word(pf), a, b)) {
    throw ValidationError("reading word is not a shuffle of 1.." + std::to_string(a) + " and " +
                          std::to_string(a + 1) + ".." + std::to_string(a + b));
  }
  std::vector<Domino> out;
  for (const auto& d : pf.dominoes()) out.push_back(Domino{d.car <= a ? 1u : 2u, d.level});
  return TwoLetterPF(std::move(out));
}

ParkingFunction lift(const TwoLetterPF& pf) {
  std::vector<Domino> out = pf.dominoes();
  std::uint32_t next_small = 1, next_large = pf.ones() + 1;
  for (auto i : reading_order(out)) out[i].car = out[i].car == 1 ? next_small++ : next_large++;
  return ParkingFunction(std::move(out));
}

namespace {

struct ParkWalker {
  std::uint32_t ones_left;
  std::uint32_t twos_left;
  const std::function<void(const TwoLetterPF&)>& visit;
  std::vector<Domino> prefix;

  void extend() {
    if (ones_left == 0 && twos_left == 0) {
      visit(TwoLetterPF(prefix));
      return;
    }
    const std::uint32_t top = prefix.empty() ? 0 : prefix.back().level + 1;
    for (std::uint32_t level = 0; level <= top; ++level) {
      for (std::uint32_t letter = 1; letter <= 2; ++letter) {
        bool rise = !prefix.empty() && level == top;
        if (rise && (prefix.back().car != 1 || letter != 2)) continue;
        std::uint32_t& budget = letter == 1 ? ones_left : twos_left;
        if (budget == 0) continue;
        --budget;
        prefix.push_back(Domino{letter, level});
        extend();
        prefix.pop_back();
        ++budget;
      }
    }
  }
};

}  // namespace

void for_each_park(std::uint32_t a, std::uint32_t b, std::optional<OneCounts> filter,
                   const std::function<void(const TwoLetterPF&)>& visit) {
  if (a + b == 0) throw ValidationError("Park_{a,b} needs a + b >= 1");
  auto filtered = [&](const TwoLetterPF& pf) {
    if (!filter || zero_level_counts(pf) == *filter) visit(pf);
  };
  std::function<void(const TwoLetterPF&)> sink = filtered;
  ParkWalker walker{a, b, sink, {}};
  walker.prefix.reserve(a + b);
  walker.extend();
}

std::vector<ParkingFunction> enumerate_park(std::uint32_t a, std::uint32_t b, std::optional<OneCounts> filter) {
  std::vector<ParkingFunction> out;
  for_each_park(a, b, filter, [&](const TwoLetterPF& pf) { out.push_back(lift(pf)); });
  return out;
}

QTPolynomial para_poly(std::uint32_t a, std::uint32_t b, std::optional<OneCounts> filter) {
  QTPolynomial out;
  if (filter && filter->r == 0 && filter->s == 0) {
    if (a + b == 0) throw ValidationError("Park_{a,b} needs a + b >= 1");
    return out;
  }
  for_each_park(a, b, filter, [&](const TwoLetterPF& pf) { out.add_term(pf_dinv(pf), pf_area(pf), 1); });
  return out;
}

PeelResult peel(const TwoLetterPF& pf) {
  PeelResult res;
  std::vector<Domino> raised;
  for (const auto& d : pf.dominoes()) {
    if (d.level == 0) {
      (d.car == 1 ? res.r : res.s) += 1;
    } else {
      raised.push_back(Domino{d.car, d.level - 1});
    }
  }
  if (raised.empty()) throw ValidationError("peel needs a domino above level 0");
  if (raised[0].car != 2 || raised[0].level != 0 || (raised.size() > 1 && raised[1].level != 0)) {
    throw InternalError("peeled word does not start with (2 over 0) followed by a level-0 domino");
  }
  try {
    res.intermediate = TwoLetterPF(raised);
    res.peeled = TwoLetterPF(std::vector<Domino>(raised.begin() + 1, raised.end()));
  } catch (const ValidationError& e) {
    throw InternalError(std::string("peel left the parking functions: ") + e.what());
  }
  return res;
}

std::vector<TwoLetterPF> unpeel(const TwoLetterPF& peeled, std::uint32_t r, std::uint32_t s) {
  std::vector<Domino> lifted{Domino{2, 1}};
  for (const auto& d : peeled.dominoes()) lifted.push_back(Domino{d.car, d.level + 1});

  const std::size_t total = lifted.size() + r + s;
  std::vector<TwoLetterPF> out;
  std::vector<Domino> current;
  current.reserve(total);

  // Interleave the lifted word with r (1 over 0) and s (2 over 0) dominoes in
  // every order; keep exactly the valid parking functions.
  std::function<void(std::size_t, std::uint32_t, std::uint32_t)> place = [&](std::size_t li, std::uint32_t ones,
                                                                            std::uint32_t twos) {
    if (current.size() == total) {
      std::vector<Domino> copy = current;
      try {
        out.emplace_back(std::move(copy));
      } catch (const ValidationError&) {
      }
      return;
    }
    if (li < lifted.size()) {
      current.push_back(lifted[li]);
      place(li + 1, ones, twos);
      current.pop_back();
    }
    if (ones > 0) {
      current.push_back(Domino{1, 0});
      place(li, ones - 1, twos);
      current.pop_back();
    }
    if (twos > 0) {
      current.push_back(Domino{2, 0});
      place(li, ones, twos - 1);
      current.pop_back();
    }
  };
  place(0, r, s);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace narayana
