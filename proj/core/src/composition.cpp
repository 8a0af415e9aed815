#include "rhc/composition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rhc {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("Composition: parts must be positive");
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Composition::str() const {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

WeakComposition::WeakComposition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts)
    if (x < 0) throw std::invalid_argument("WeakComposition: parts must be non-negative");
}

int WeakComposition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

DescentSet::DescentSet(int n_, std::vector<int> elems) : n(n_), elements(std::move(elems)) {
  std::sort(elements.begin(), elements.end());
  for (size_t i = 0; i < elements.size(); ++i) {
    if (elements[i] < 1 || elements[i] > n - 1)
      throw std::invalid_argument("DescentSet: element outside [1, n-1]");
    if (i && elements[i] == elements[i - 1])
      throw std::invalid_argument("DescentSet: repeated element");
  }
}

bool DescentSet::contains(int i) const {
  return std::binary_search(elements.begin(), elements.end(), i);
}

DescentSet descent_set(const Composition& alpha) {
  std::vector<int> partial;
  int run = 0;
  for (int i = 0; i + 1 < alpha.length(); ++i) {
    run += alpha.part(i);
    partial.push_back(run);
  }
  return DescentSet(alpha.size(), std::move(partial));
}

Composition composition_of_descents(const DescentSet& s) {
  std::vector<int> parts;
  int prev = 0;
  for (int d : s.elements) {
    parts.push_back(d - prev);
    prev = d;
  }
  if (s.n > prev) parts.push_back(s.n - prev);
  return Composition(std::move(parts));
}

std::vector<Composition> coarsenings(const Composition& alpha) {
  DescentSet des = descent_set(alpha);
  int k = static_cast<int>(des.elements.size());
  std::vector<Composition> out;
  out.reserve(size_t{1} << k);
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> subset;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) subset.push_back(des.elements[i]);
    out.push_back(composition_of_descents(DescentSet(alpha.size(), std::move(subset))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> refinements(const Composition& alpha) {
  DescentSet des = descent_set(alpha);
  int n = alpha.size();
  std::vector<int> others;
  for (int i = 1; i <= n - 1; ++i)
    if (!des.contains(i)) others.push_back(i);
  int k = static_cast<int>(others.size());
  std::vector<Composition> out;
  out.reserve(size_t{1} << k);
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> subset = des.elements;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) subset.push_back(others[i]);
    out.push_back(composition_of_descents(DescentSet(n, std::move(subset))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Composition reverse(const Composition& alpha) {
  std::vector<int> p(alpha.parts().rbegin(), alpha.parts().rend());
  return Composition(std::move(p));
}

Composition complement(const Composition& alpha) {
  DescentSet des = descent_set(alpha);
  std::vector<int> comp;
  for (int i = 1; i <= alpha.size() - 1; ++i)
    if (!des.contains(i)) comp.push_back(i);
  return composition_of_descents(DescentSet(alpha.size(), std::move(comp)));
}

Composition transpose(const Composition& alpha) { return reverse(complement(alpha)); }

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> p = a.parts();
  p.insert(p.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(p));
}

Composition near_concat(const Composition& a, const Composition& b) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("near_concat: both arguments must be nonempty");
  std::vector<int> p(a.parts().begin(), a.parts().end() - 1);
  p.push_back(a.parts().back() + b.parts().front());
  p.insert(p.end(), b.parts().begin() + 1, b.parts().end());
  return Composition(std::move(p));
}

std::vector<Composition> apply_glue_indices(const std::vector<Composition>& seq,
                                            const std::vector<int>& glue_indices) {
  int l = static_cast<int>(seq.size());
  std::vector<bool> glue(l, false);  // glue[j] true: merge seq[j-1] with seq[j]
  for (int i : glue_indices) {
    if (i < 1 || i > l - 1) throw std::invalid_argument("apply_glue_indices: index out of range");
    glue[i] = true;
  }
  std::vector<Composition> out;
  for (int j = 0; j < l; ++j) {
    if (j > 0 && glue[j]) out.back() = near_concat(out.back(), seq[j]);
    else out.push_back(seq[j]);
  }
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  // subsets of {1..n-1} as descent sets, in graded-lex order after sort
  for (int mask = 0; mask < (1 << (n - 1)); ++mask) {
    std::vector<int> subset;
    for (int i = 1; i <= n - 1; ++i)
      if (mask & (1 << (i - 1))) subset.push_back(i);
    out.push_back(composition_of_descents(DescentSet(n, std::move(subset))));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Composition> compositions_of_length(int n, int len) {
  std::vector<Composition> out;
  if (len < 0) return out;
  if (len == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  if (n < len) return out;
  std::vector<int> parts(len, 1);
  // distribute the remaining n-len among `len` parts
  std::vector<int> cur;
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == len - 1) {
      cur.push_back(1 + remaining);
      out.push_back(Composition(cur));
      cur.pop_back();
      return;
    }
    for (int extra = 0; extra <= remaining; ++extra) {
      cur.push_back(1 + extra);
      self(self, pos + 1, remaining - extra);
      cur.pop_back();
    }
  };
  rec(rec, 0, n - len);
  std::sort(out.begin(), out.end());
  return out;
}

Composition parse_composition(const std::string& text) {
  size_t i = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("parse_composition: " + why + " in \"" + text + "\"");
  };
  while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i >= text.size() || text[i] != '(') fail("expected '('");
  ++i;
  std::vector<int> parts;
  while (true) {
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == ')') { ++i; break; }
    if (i >= text.size() || !isdigit(static_cast<unsigned char>(text[i]))) fail("expected digit");
    int v = 0;
    while (i < text.size() && isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    parts.push_back(v);
    while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i < text.size() && text[i] == ',') { ++i; continue; }
    if (i < text.size() && text[i] == ')') { ++i; break; }
    fail("expected ',' or ')'");
  }
  while (i < text.size() && isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i != text.size()) fail("trailing characters");
  return Composition(std::move(parts));
}

std::vector<Composition> parse_composition_sequence(const std::string& text) {
  std::vector<Composition> seq;
  size_t start = 0;
  while (start <= text.size()) {
    size_t semi = text.find(';', start);
    std::string piece = text.substr(start, semi == std::string::npos ? semi : semi - start);
    if (!piece.empty()) seq.push_back(parse_composition(piece));
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (seq.empty()) throw std::invalid_argument("parse_composition_sequence: empty sequence");
  return seq;
}

std::string sequence_str(const std::vector<Composition>& seq) {
  std::string out;
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ';';
    out += seq[i].str();
  }
  return out;
}

}  // namespace rhc
