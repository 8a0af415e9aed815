#pragma once

#include <compare>
#include <vector>

#include "rhc/composition.hpp"

namespace rhc {

// Absolute grid position. Rows count upward from the bottom, columns count
// rightward; the whole diagram shares one ambient grid.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

// A disjoint union of ribbons with fixed absolute cell positions, listed
// southwest to northeast. Cells are kept in traversal order: within each
// component bottom row to top row, left to right inside a row; components in
// listed order.
//
// The canonical placement (from_components) starts the first component's
// bottom row at (0,0); each row starts in the column where the row below
// ends; each further component starts one row above and one column right of
// the previous component's last cell. row_delete produces the same type with
// the surviving cells kept at their original positions.
class GeneralizedRibbon {
 public:
  GeneralizedRibbon() = default;

  static GeneralizedRibbon from_components(const std::vector<Composition>& components);
  // Diagram with explicit cells; the component list is recomputed from
  // adjacency of the given cells (which must be in traversal order).
  static GeneralizedRibbon from_cells(std::vector<Cell> cells);

  const std::vector<Composition>& components() const { return components_; }
  const std::vector<Cell>& cells() const { return cells_; }
  int size() const { return static_cast<int>(cells_.size()); }
  int num_components() const { return static_cast<int>(components_.size()); }
  // Traversal index of each component's first cell.
  const std::vector<int>& component_starts() const { return component_starts_; }

  // Pairs of traversal indices (a, b) with cell b immediately right of cell a.
  const std::vector<std::pair<int, int>>& horizontal_adjacencies() const { return horiz_; }
  // Pairs (a, b) with cell b immediately above cell a (entry at b must be
  // smaller: columns increase downward).
  const std::vector<std::pair<int, int>>& vertical_adjacencies() const { return vert_; }

  // True if placing word[t] at cell t satisfies all adjacency constraints.
  bool word_is_standard(const std::vector<int>& word) const;

  friend bool operator==(const GeneralizedRibbon& a, const GeneralizedRibbon& b) {
    return a.cells_ == b.cells_;
  }

 private:
  void index_structure();

  std::vector<Composition> components_;
  std::vector<Cell> cells_;
  std::vector<int> component_starts_;
  std::vector<std::pair<int, int>> horiz_, vert_;
};

GeneralizedRibbon build_diagram(const std::vector<Composition>& components);

// Removes beta_i leftmost cells of row i of Diag(alpha); requires
// len(beta) == len(alpha) and beta_i <= alpha_i.
GeneralizedRibbon row_delete(const Composition& alpha, const WeakComposition& beta);

std::vector<Composition> components(const GeneralizedRibbon& diagram);

// Component list of the transposed diagram: order reversed, parts transposed.
std::vector<Composition> transpose_components(const std::vector<Composition>& comps);

}  // namespace rhc
