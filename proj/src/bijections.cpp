#include "narayana/bijections.hpp"

#include "narayana/dyck.hpp"
#include "narayana/errors.hpp"

#include <optional>

namespace narayana {

namespace {

// A boundary path with one optional bounce label per step, SW to NE.
using LabeledPath = std::vector<std::optional<Letter>>;

struct BoundaryLabels {
  LabeledPath upper;
  LabeledPath lower;
};

BoundaryLabels label_boundary(const Polyomino& p) {
  const BouncePath b = bounce_path(p);

  std::vector<std::uint32_t> row_run;  // row_run[y]: North label for height [y, y+1]
  for (std::size_t i = 0; i < b.vertical.size(); ++i) row_run.insert(row_run.end(), b.vertical[i], i + 1);
  std::vector<std::uint32_t> column_run;  // column_run[x]: East label for [x, x+1]
  for (std::size_t i = 0; i < b.horizontal.size(); ++i) column_run.insert(column_run.end(), b.horizontal[i], i);

  BoundaryLabels out;
  std::uint32_t x = 0, y = 0;
  for (auto s : p.upper()) {
    out.upper.push_back(s == Step::N ? Letter::unbarred(row_run[y++]) : Letter::bar(column_run[x++]));
  }
  x = y = 0;
  for (auto s : p.lower()) {
    if (s == Step::N) {
      out.lower.push_back(Letter::unbarred(row_run[y++]));
    } else {
      // The first East step belongs to the 0b prescription on the upper path.
      out.lower.push_back(x == 0 ? std::nullopt : std::optional<Letter>(Letter::bar(column_run[x])));
      ++x;
    }
  }
  return out;
}

Prescription read_prescription(const LabeledPath& path, Letter lower, Letter upper) {
  Prescription pr{lower, upper, {}};
  std::optional<std::size_t> last_index;
  for (std::size_t i = path.size(); i-- > 0;) {
    if (!path[i] || (*path[i] != lower && *path[i] != upper)) continue;
    if (last_index && *last_index != i + 1) {
      throw InternalError("labels " + format_letters(std::vector<Letter>{lower, upper}) +
                          " are not contiguous on their boundary path");
    }
    last_index = i;
    pr.word.push_back(*path[i]);
  }
  return pr;
}

}  // namespace

std::vector<Letter> merge_prescription(const std::vector<Letter>& partial, const Prescription& prescription) {
  const auto& word = prescription.word;
  if (word.empty() || word.front() != prescription.lower) {
    throw InternalError("prescription does not start with its smaller type");
  }
  // blocks[j] = number of `upper` letters following the j-th `lower` letter.
  std::vector<std::size_t> blocks;
  for (const auto& l : word) {
    if (l == prescription.lower) {
      blocks.push_back(0);
    } else {
      ++blocks.back();
    }
  }

  std::vector<Letter> out;
  out.reserve(partial.size() + word.size());
  std::size_t matched = 0;
  for (const auto& l : partial) {
    out.push_back(l);
    if (l != prescription.lower) continue;
    if (matched == blocks.size()) throw InternalError("partial word has more letters of a type than its prescription");
    out.insert(out.end(), blocks[matched++], prescription.upper);
  }
  if (matched != blocks.size()) throw InternalError("partial word has fewer letters of a type than its prescription");
  return out;
}

Polyomino digamma(const Polyomino& p, DigammaTrace* trace) {
  const BoundaryLabels labels = label_boundary(p);

  std::uint32_t max_rank = 0;
  for (const auto* path : {&labels.upper, &labels.lower}) {
    for (const auto& l : *path) {
      if (l) max_rank = std::max(max_rank, l->rank());
    }
  }

  std::vector<Letter> word;
  for (std::uint32_t k = 0; k < max_rank; ++k) {
    // Pairs (kb, k+1) live on the upper path, pairs (k, kb) on the lower one.
    const LabeledPath& source = k % 2 == 0 ? labels.upper : labels.lower;
    Prescription pr = read_prescription(source, Letter::from_rank(k), Letter::from_rank(k + 1));
    word = k == 0 ? pr.word : merge_prescription(word, pr);
    if (k == 0 && (word.empty() || word.front() != Letter::bar(0))) {
      throw InternalError("first prescription does not start with 0b");
    }
    if (trace) {
      trace->prescriptions.push_back(std::move(pr));
      trace->partial_words.push_back(word);
    }
  }

  try {
    return word_to_polyomino(AreaWord(std::move(word)));
  } catch (const ValidationError& e) {
    throw InternalError(std::string("digamma produced an invalid word: ") + e.what());
  }
}

Polyomino digamma_inverse(const Polyomino& q) {
  const AreaWord w = area_word(q);
  std::uint32_t max_value = 0;
  for (const auto& l : w.letters()) max_value = std::max(max_value, l.value);

  auto append_restriction = [&](Path& path, Letter barred, Letter unbarred) {
    for (std::size_t i = w.size(); i-- > 0;) {
      if (w[i] == unbarred) path.push_back(Step::N);
      if (w[i] == barred) path.push_back(Step::E);
    }
  };

  Path upper;
  for (std::uint32_t i = 0; i <= max_value; ++i) append_restriction(upper, Letter::bar(i), Letter::unbarred(i + 1));
  Path lower{Step::E};
  for (std::uint32_t i = 1; i <= max_value; ++i) append_restriction(lower, Letter::bar(i), Letter::unbarred(i));
  return Polyomino::from_paths(std::move(upper), std::move(lower));
}

Polyomino transpose_flip(const Polyomino& p) {
  auto swap_steps = [](const Path& path) {
    Path out;
    out.reserve(path.size());
    for (auto s : path) out.push_back(s == Step::N ? Step::E : Step::N);
    return out;
  };
  return Polyomino::from_paths(swap_steps(p.lower()), swap_steps(p.upper()));
}

}  // namespace narayana
