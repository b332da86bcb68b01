// Worked examples shared by several test files.
#pragma once

#include "narayana/polyomino.hpp"

namespace fixtures {

inline constexpr const char* kFigureWord = "0b 1 1b 2 2b 3 2 2 2b 1 1b 2 1 1 1b 2 2b 2 2";
inline constexpr const char* kFigureUpper = "NNNEEENEENEEENNEEEE";
inline constexpr const char* kFigureLower = "EEENEENNEENEEENEENN";
inline constexpr const char* kDigammaImage = "0b 1 1 1b 1b 2 2b 2b 3 3b 3b 4 4 4b 4b 3b 1 1b 1b";

inline narayana::AreaWord word(const char* text) { return narayana::AreaWord(narayana::parse_letters(text)); }

inline narayana::Polyomino figure() {
  return narayana::Polyomino::from_paths(narayana::parse_path(kFigureUpper), narayana::parse_path(kFigureLower));
}

inline narayana::Polyomino paths(const char* upper, const char* lower) {
  return narayana::Polyomino::from_paths(narayana::parse_path(upper), narayana::parse_path(lower));
}

}  // namespace fixtures
