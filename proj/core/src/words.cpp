#include "rhc/words.hpp"

#include <algorithm>

namespace rhc {

std::vector<Word> shuffles(const Word& u, const Word& v) {
  std::vector<Word> out;
  Word cur;
  cur.reserve(u.size() + v.size());
  auto rec = [&](auto&& self, size_t i, size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      out.push_back(cur);
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Word shifted(const Word& w, int n) {
  Word out = w;
  for (int& x : out) x += n;
  return out;
}

std::vector<int> word_descents(const Word& w) {
  std::vector<int> out;
  for (size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) out.push_back(static_cast<int>(i) + 1);
  return out;
}

}  // namespace rhc
