#include "rhc/diagram.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace rhc {

GeneralizedRibbon GeneralizedRibbon::from_components(const std::vector<Composition>& components) {
  for (const auto& c : components)
    if (c.empty()) throw std::invalid_argument("GeneralizedRibbon: empty component");
  GeneralizedRibbon g;
  g.components_ = components;
  int row = 0, col = 0;
  for (const auto& comp : components) {
    for (int i = 0; i < comp.length(); ++i) {
      for (int j = 0; j < comp.part(i); ++j) g.cells_.push_back({row, col + j});
      col += comp.part(i) - 1;  // next row starts over this row's last cell
      if (i + 1 < comp.length()) ++row;
    }
    ++row, ++col;  // next component: one unit northeast of the last cell
  }
  g.index_structure();
  return g;
}

GeneralizedRibbon GeneralizedRibbon::from_cells(std::vector<Cell> cells) {
  GeneralizedRibbon g;
  g.cells_ = std::move(cells);
  // split into components at non-adjacent consecutive cells
  std::vector<int> row_lengths;
  auto flush = [&](std::vector<int>& lens) {
    if (!lens.empty()) g.components_.push_back(Composition(lens));
    lens.clear();
  };
  std::vector<int> lens;
  for (size_t t = 0; t < g.cells_.size(); ++t) {
    if (t == 0) {
      lens = {1};
      continue;
    }
    const Cell& prev = g.cells_[t - 1];
    const Cell& cur = g.cells_[t];
    if (cur.row == prev.row && cur.col == prev.col + 1) {
      ++lens.back();
    } else if (cur.row == prev.row + 1 && cur.col == prev.col) {
      lens.push_back(1);
    } else {
      flush(lens);
      lens = {1};
    }
  }
  flush(lens);
  g.index_structure();
  return g;
}

void GeneralizedRibbon::index_structure() {
  component_starts_.clear();
  horiz_.clear();
  vert_.clear();
  int pos = 0;
  for (const auto& comp : components_) {
    component_starts_.push_back(pos);
    pos += comp.size();
  }
  std::map<Cell, int> index;
  for (size_t t = 0; t < cells_.size(); ++t) index[cells_[t]] = static_cast<int>(t);
  for (size_t t = 0; t < cells_.size(); ++t) {
    auto right = index.find({cells_[t].row, cells_[t].col + 1});
    if (right != index.end()) horiz_.emplace_back(static_cast<int>(t), right->second);
    auto above = index.find({cells_[t].row + 1, cells_[t].col});
    if (above != index.end()) vert_.emplace_back(static_cast<int>(t), above->second);
  }
}

bool GeneralizedRibbon::word_is_standard(const std::vector<int>& word) const {
  for (const auto& [a, b] : horiz_)
    if (word[a] > word[b]) return false;
  for (const auto& [a, b] : vert_)
    if (word[b] > word[a]) return false;  // upper entry must be smaller
  return true;
}

GeneralizedRibbon build_diagram(const std::vector<Composition>& components) {
  return GeneralizedRibbon::from_components(components);
}

GeneralizedRibbon row_delete(const Composition& alpha, const WeakComposition& beta) {
  if (beta.length() != alpha.length())
    throw std::invalid_argument("row_delete: length mismatch");
  for (int i = 0; i < alpha.length(); ++i)
    if (beta.parts[i] > alpha.part(i))
      throw std::invalid_argument("row_delete: cannot delete more cells than a row holds");
  GeneralizedRibbon full = GeneralizedRibbon::from_components({alpha});
  std::vector<Cell> kept;
  int t = 0;
  for (int i = 0; i < alpha.length(); ++i)
    for (int j = 0; j < alpha.part(i); ++j, ++t)
      if (j >= beta.parts[i]) kept.push_back(full.cells()[t]);
  return GeneralizedRibbon::from_cells(std::move(kept));
}

std::vector<Composition> components(const GeneralizedRibbon& diagram) {
  return diagram.components();
}

std::vector<Composition> transpose_components(const std::vector<Composition>& comps) {
  std::vector<Composition> out;
  out.reserve(comps.size());
  for (auto it = comps.rbegin(); it != comps.rend(); ++it) out.push_back(transpose(*it));
  return out;
}

}  // namespace rhc
