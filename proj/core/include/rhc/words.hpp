#pragma once

#include <vector>

namespace rhc {

using Word = std::vector<int>;

// All C(|u|+|v|, |u|) interleavings of u and v preserving each word's
// internal order, as a lexicographically sorted multiset.
std::vector<Word> shuffles(const Word& u, const Word& v);

// Word with n added to every letter.
Word shifted(const Word& w, int n);

// Permutation descent set {i : w_i > w_{i+1}} (1-based positions).
std::vector<int> word_descents(const Word& w);

}  // namespace rhc
