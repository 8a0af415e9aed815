#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rhc {

// Ordered list of positive integers. The empty composition (of 0) is allowed
// and acts as the unit for concatenation and the symbolic algebras.
//
// Ordering is graded: first by size, then lexicographically on parts. All
// maps keyed by compositions therefore iterate degree by degree, which keeps
// every serialization deterministic.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int part(int i) const { return parts_[i]; }  // 0-based
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const { return size_; }
  bool empty() const { return parts_.empty(); }

  friend bool operator==(const Composition& a, const Composition& b) {
    return a.parts_ == b.parts_;
  }
  friend std::strong_ordering operator<=>(const Composition& a, const Composition& b) {
    if (a.size_ != b.size_) return a.size_ <=> b.size_;
    return a.parts_ <=> b.parts_;
  }

  std::string str() const;  // "(3,1,1)"; "()" for the empty composition

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Ordered list of non-negative integers with a fixed declared length.
struct WeakComposition {
  std::vector<int> parts;

  WeakComposition() = default;
  explicit WeakComposition(std::vector<int> p);
  int length() const { return static_cast<int>(parts.size()); }
  int size() const;
};

// Subset of {1,...,n-1}, stored strictly increasing.
struct DescentSet {
  int n = 0;
  std::vector<int> elements;

  DescentSet() = default;
  DescentSet(int n_, std::vector<int> elems);
  bool contains(int i) const;
  friend bool operator==(const DescentSet& a, const DescentSet& b) {
    return a.n == b.n && a.elements == b.elements;
  }
};

DescentSet descent_set(const Composition& alpha);
Composition composition_of_descents(const DescentSet& s);

// All compositions obtained by summing adjacent runs of parts, i.e. all beta
// with Des(beta) contained in Des(alpha). Includes alpha. Sorted.
std::vector<Composition> coarsenings(const Composition& alpha);
// All beta with Des(beta) containing Des(alpha). Includes alpha. Sorted.
std::vector<Composition> refinements(const Composition& alpha);

Composition reverse(const Composition& alpha);
Composition complement(const Composition& alpha);
Composition transpose(const Composition& alpha);

Composition concat(const Composition& a, const Composition& b);
// (a_1,...,a_{l-1}, a_l + b_1, b_2,...,b_m); both arguments must be nonempty.
Composition near_concat(const Composition& a, const Composition& b);

// Replaces the i-th comma of the sequence by a near-concatenation for each
// i in glue_indices (1-based positions between consecutive entries).
std::vector<Composition> apply_glue_indices(const std::vector<Composition>& seq,
                                            const std::vector<int>& glue_indices);

std::vector<Composition> compositions_of(int n);
std::vector<Composition> compositions_of_length(int n, int len);

// "(3,1,1)" / "()" -> Composition; throws std::invalid_argument on bad input.
Composition parse_composition(const std::string& text);
// "(2);(1,2);(2,1)" -> sequence of compositions.
std::vector<Composition> parse_composition_sequence(const std::string& text);

std::string sequence_str(const std::vector<Composition>& seq);

}  // namespace rhc
