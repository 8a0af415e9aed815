#pragma once

#include <string>
#include <vector>

#include "rhc/diagram.hpp"
#include "rhc/words.hpp"

namespace rhc {

// A bijective filling of a (generalized) ribbon shape by {1,...,n}, standard:
// entries increase left to right along rows and top to bottom along columns
// (the upper of two vertically adjacent cells holds the smaller entry).
// Stored as the shape plus the reading word, i.e. the entries in traversal
// order (southwest to northeast within each component, components in order).
struct StandardRibbonTableau {
  GeneralizedRibbon shape;
  Word word;

  int n() const { return static_cast<int>(word.size()); }
  // Entry at traversal position t.
  int entry(int t) const { return word[t]; }
  // Traversal position of a value (1-based value).
  int position_of(int value) const;
};

// All standard fillings of the shape, ordered lexicographically by reading
// word (the canonical basis order everywhere in this library).
std::vector<Word> enumerate_srt_words(const GeneralizedRibbon& shape);
std::vector<StandardRibbonTableau> enumerate_srt(const GeneralizedRibbon& shape);
long count_srt(const GeneralizedRibbon& shape);

Word word(const StandardRibbonTableau& t);

// Inverse of `word` for connected shapes: the tableau of shape
// Diag(Des(w)) whose reading word is w.
StandardRibbonTableau tableau_of_word(const Word& w);

// Fills columns top to bottom, left to right.
StandardRibbonTableau tau0(const Composition& alpha);
// Fills rows left to right, top row first.
StandardRibbonTableau tau1(const Composition& alpha);

// {i : entry i+1 lies in a strictly higher row than entry i}.
DescentSet tableau_descents(const StandardRibbonTableau& t);

// Multi-line rendering, top row first, matching the usual tableau pictures.
std::string render_tableau(const StandardRibbonTableau& t);

}  // namespace rhc
