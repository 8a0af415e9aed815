#include "rhc/tableau.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace rhc {

int StandardRibbonTableau::position_of(int value) const {
  for (size_t t = 0; t < word.size(); ++t)
    if (word[t] == value) return static_cast<int>(t);
  throw std::invalid_argument("StandardRibbonTableau: value not present");
}

namespace {

struct CellConstraint {
  int other;             // earlier traversal index
  bool must_be_greater;  // word[t] > word[other] required (else <)
};

// Constraints grouped by the later of the two adjacent traversal indices, so
// a depth-first fill in traversal order can check each as soon as possible.
std::vector<std::vector<CellConstraint>> constraint_table(const GeneralizedRibbon& shape) {
  std::vector<std::vector<CellConstraint>> table(shape.size());
  for (const auto& [a, b] : shape.horizontal_adjacencies()) {
    // word[a] < word[b]
    if (a < b) table[b].push_back({a, true});
    else table[a].push_back({b, false});
  }
  for (const auto& [a, b] : shape.vertical_adjacencies()) {
    // word[b] < word[a] (upper cell smaller)
    if (a < b) table[b].push_back({a, false});
    else table[a].push_back({b, true});
  }
  return table;
}

template <typename Visit>
void for_each_srt_word(const GeneralizedRibbon& shape, Visit&& visit) {
  int n = shape.size();
  auto table = constraint_table(shape);
  Word cur(n, 0);
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self, int t) -> void {
    if (t == n) {
      visit(cur);
      return;
    }
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (const auto& c : table[t]) {
        if (c.must_be_greater ? (v < cur[c.other]) : (v > cur[c.other])) { ok = false; break; }
      }
      if (!ok) continue;
      used[v] = true;
      cur[t] = v;
      self(self, t + 1);
      used[v] = false;
    }
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Word> enumerate_srt_words(const GeneralizedRibbon& shape) {
  std::vector<Word> out;
  for_each_srt_word(shape, [&](const Word& w) { out.push_back(w); });
  return out;  // already lexicographic: values are tried in increasing order
}

std::vector<StandardRibbonTableau> enumerate_srt(const GeneralizedRibbon& shape) {
  std::vector<StandardRibbonTableau> out;
  for_each_srt_word(shape, [&](const Word& w) { out.push_back({shape, w}); });
  return out;
}

long count_srt(const GeneralizedRibbon& shape) {
  long count = 0;
  for_each_srt_word(shape, [&](const Word&) { ++count; });
  return count;
}

Word word(const StandardRibbonTableau& t) { return t.word; }

StandardRibbonTableau tableau_of_word(const Word& w) {
  int n = static_cast<int>(w.size());
  Composition alpha = composition_of_descents(DescentSet(n, word_descents(w)));
  GeneralizedRibbon shape = GeneralizedRibbon::from_components({alpha});
  StandardRibbonTableau t{shape, w};
  if (!shape.word_is_standard(w))
    throw std::logic_error("tableau_of_word: filling is not standard");
  return t;
}

StandardRibbonTableau tau0(const Composition& alpha) {
  if (alpha.empty()) throw std::invalid_argument("tau0: empty composition");
  GeneralizedRibbon shape = GeneralizedRibbon::from_components({alpha});
  int n = shape.size();
  // order cells by (column asc, row desc), fill 1..n
  std::vector<int> order(n);
  for (int t = 0; t < n; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cell& ca = shape.cells()[a];
    const Cell& cb = shape.cells()[b];
    if (ca.col != cb.col) return ca.col < cb.col;
    return ca.row > cb.row;
  });
  Word w(n);
  for (int v = 1; v <= n; ++v) w[order[v - 1]] = v;
  return {shape, w};
}

StandardRibbonTableau tau1(const Composition& alpha) {
  if (alpha.empty()) throw std::invalid_argument("tau1: empty composition");
  GeneralizedRibbon shape = GeneralizedRibbon::from_components({alpha});
  int n = shape.size();
  std::vector<int> order(n);
  for (int t = 0; t < n; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Cell& ca = shape.cells()[a];
    const Cell& cb = shape.cells()[b];
    if (ca.row != cb.row) return ca.row > cb.row;  // top row first
    return ca.col < cb.col;
  });
  Word w(n);
  for (int v = 1; v <= n; ++v) w[order[v - 1]] = v;
  return {shape, w};
}

DescentSet tableau_descents(const StandardRibbonTableau& t) {
  int n = t.n();
  std::vector<int> pos(n + 1);
  for (int i = 0; i < n; ++i) pos[t.word[i]] = i;
  std::vector<int> des;
  for (int v = 1; v <= n - 1; ++v)
    if (t.shape.cells()[pos[v + 1]].row > t.shape.cells()[pos[v]].row) des.push_back(v);
  return DescentSet(n, std::move(des));
}

std::string render_tableau(const StandardRibbonTableau& t) {
  if (t.word.empty()) return "(empty)\n";
  int min_row = t.shape.cells()[0].row, max_row = min_row;
  int min_col = t.shape.cells()[0].col, max_col = min_col;
  for (const Cell& c : t.shape.cells()) {
    min_row = std::min(min_row, c.row);
    max_row = std::max(max_row, c.row);
    min_col = std::min(min_col, c.col);
    max_col = std::max(max_col, c.col);
  }
  int width = static_cast<int>(std::to_string(t.n()).size()) + 1;
  std::vector<std::string> lines(max_row - min_row + 1,
                                 std::string((max_col - min_col + 1) * width, ' '));
  for (size_t i = 0; i < t.shape.cells().size(); ++i) {
    const Cell& c = t.shape.cells()[i];
    std::string v = std::to_string(t.word[i]);
    v = std::string(width - v.size(), ' ') + v;
    int line = max_row - c.row;  // top row first
    lines[line].replace((c.col - min_col) * width, width, v);
  }
  std::ostringstream os;
  for (auto& l : lines) {
    while (!l.empty() && l.back() == ' ') l.pop_back();
    os << l << '\n';
  }
  return os.str();
}

}  // namespace rhc
