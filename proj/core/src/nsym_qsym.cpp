#include "rhc/nsym_qsym.hpp"

#include <sstream>
#include <stdexcept>

#include "rhc/tableau.hpp"

namespace rhc {

namespace {

template <typename Elem>
void add_term_impl(Elem& e, const Composition& a, const Rational& c) {
  if (c.is_zero()) return;
  auto it = e.coeffs.find(a);
  if (it == e.coeffs.end()) {
    e.coeffs.emplace(a, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) e.coeffs.erase(it);
  }
}

template <typename Elem>
Rational coeff_impl(const Elem& e, const Composition& a) {
  auto it = e.coeffs.find(a);
  return it == e.coeffs.end() ? Rational(0) : it->second;
}

int sign_pow(int k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

Rational NSymElem::coeff(const Composition& a) const { return coeff_impl(*this, a); }
void NSymElem::add_term(const Composition& a, const Rational& c) { add_term_impl(*this, a, c); }
Rational QSymElem::coeff(const Composition& a) const { return coeff_impl(*this, a); }
void QSymElem::add_term(const Composition& a, const Rational& c) { add_term_impl(*this, a, c); }

NSymElem nsym_h(const Composition& a) {
  NSymElem e{NBasis::H, {}};
  e.coeffs.emplace(a, Rational(1));
  return e;
}
NSymElem nsym_r(const Composition& a) {
  NSymElem e{NBasis::R, {}};
  e.coeffs.emplace(a, Rational(1));
  return e;
}
QSymElem qsym_m(const Composition& a) {
  QSymElem e{QBasis::M, {}};
  e.coeffs.emplace(a, Rational(1));
  return e;
}
QSymElem qsym_l(const Composition& a) {
  QSymElem e{QBasis::L, {}};
  e.coeffs.emplace(a, Rational(1));
  return e;
}

NSymElem nsym_add(const NSymElem& x, const NSymElem& y) {
  if (x.basis != y.basis) throw std::invalid_argument("nsym_add: basis mismatch");
  NSymElem out = x;
  for (const auto& [a, c] : y.coeffs) out.add_term(a, c);
  return out;
}

NSymElem nsym_scale(const NSymElem& x, const Rational& c) {
  NSymElem out{x.basis, {}};
  if (c.is_zero()) return out;
  for (const auto& [a, v] : x.coeffs) out.coeffs.emplace(a, v * c);
  return out;
}

QSymElem qsym_add(const QSymElem& x, const QSymElem& y) {
  if (x.basis != y.basis) throw std::invalid_argument("qsym_add: basis mismatch");
  QSymElem out = x;
  for (const auto& [a, c] : y.coeffs) out.add_term(a, c);
  return out;
}

QSymElem qsym_scale(const QSymElem& x, const Rational& c) {
  QSymElem out{x.basis, {}};
  if (c.is_zero()) return out;
  for (const auto& [a, v] : x.coeffs) out.coeffs.emplace(a, v * c);
  return out;
}

bool operator==(const NSymElem& x, const NSymElem& y) {
  return x.basis == y.basis && x.coeffs == y.coeffs;
}
bool operator==(const QSymElem& x, const QSymElem& y) {
  return x.basis == y.basis && x.coeffs == y.coeffs;
}

NSymElem h_to_r(const NSymElem& x) {
  if (x.basis == NBasis::R) return x;
  NSymElem out{NBasis::R, {}};
  for (const auto& [a, c] : x.coeffs)
    for (const auto& b : coarsenings(a)) out.add_term(b, c);
  return out;
}

NSymElem r_to_h(const NSymElem& x) {
  if (x.basis == NBasis::H) return x;
  NSymElem out{NBasis::H, {}};
  for (const auto& [a, c] : x.coeffs)
    for (const auto& b : coarsenings(a))
      out.add_term(b, c * Rational(sign_pow(a.length() - b.length())));
  return out;
}

QSymElem m_to_l(const QSymElem& x) {
  if (x.basis == QBasis::L) return x;
  // M_a = sum over refinements b of a of (-1)^{l(b)-l(a)} L_b
  QSymElem out{QBasis::L, {}};
  for (const auto& [a, c] : x.coeffs)
    for (const auto& b : refinements(a))
      out.add_term(b, c * Rational(sign_pow(b.length() - a.length())));
  return out;
}

QSymElem l_to_m(const QSymElem& x) {
  if (x.basis == QBasis::M) return x;
  QSymElem out{QBasis::M, {}};
  for (const auto& [a, c] : x.coeffs)
    for (const auto& b : refinements(a)) out.add_term(b, c);
  return out;
}

NSymElem r_product(const NSymElem& x0, const NSymElem& y0) {
  NSymElem x = h_to_r(x0), y = h_to_r(y0);
  NSymElem out{NBasis::R, {}};
  for (const auto& [a, ca] : x.coeffs) {
    for (const auto& [b, cb] : y.coeffs) {
      Rational c = ca * cb;
      if (a.empty() || b.empty()) {
        out.add_term(concat(a, b), c);
        continue;
      }
      out.add_term(concat(a, b), c);
      out.add_term(near_concat(a, b), c);
    }
  }
  return out;
}

NSymElem h_product(const NSymElem& x0, const NSymElem& y0) {
  NSymElem x = r_to_h(x0), y = r_to_h(y0);
  NSymElem out{NBasis::H, {}};
  for (const auto& [a, ca] : x.coeffs)
    for (const auto& [b, cb] : y.coeffs) out.add_term(concat(a, b), ca * cb);
  return out;
}

namespace {

Word representative_word(const Composition& a, bool use_tau0) {
  if (a.empty()) return {};
  return use_tau0 ? tau0(a).word : tau1(a).word;
}

}  // namespace

QSymElem l_product(const QSymElem& x0, const QSymElem& y0, bool use_tau0) {
  QSymElem x = m_to_l(x0), y = m_to_l(y0);
  QSymElem out{QBasis::L, {}};
  for (const auto& [a, ca] : x.coeffs) {
    Word u = representative_word(a, use_tau0);
    for (const auto& [b, cb] : y.coeffs) {
      Word v = shifted(representative_word(b, use_tau0), a.size());
      Rational c = ca * cb;
      for (const Word& w : shuffles(u, v)) {
        int n = static_cast<int>(w.size());
        out.add_term(composition_of_descents(DescentSet(n, word_descents(w))), c);
      }
    }
  }
  return out;
}

std::map<std::pair<Composition, Composition>, Rational> l_coproduct(const Composition& a) {
  std::map<std::pair<Composition, Composition>, Rational> out;
  int n = a.size();
  for (int t = 0; t <= n; ++t) {
    // split the ribbon traversal after t cells
    std::vector<int> left, right;
    int acc = 0;
    for (int i = 0; i < a.length(); ++i) {
      int lo = acc, hi = acc + a.part(i);
      int in_left = std::max(0, std::min(t, hi) - lo);
      int in_right = a.part(i) - in_left;
      if (in_left > 0) left.push_back(in_left);
      if (in_right > 0) right.push_back(in_right);
      acc = hi;
    }
    out[{Composition(left), Composition(right)}] += Rational(1);
  }
  return out;
}

Rational pairing(const NSymElem& x0, const QSymElem& y0) {
  NSymElem x = h_to_r(x0);
  QSymElem y = m_to_l(y0);
  Rational total(0);
  for (const auto& [a, c] : x.coeffs) {
    auto it = y.coeffs.find(a);
    if (it != y.coeffs.end()) total += c * it->second;
  }
  return total;
}

NSymElem perp(const QSymElem& f0, const NSymElem& h0) {
  QSymElem f = m_to_l(f0);
  NSymElem h = h_to_r(h0);
  NSymElem out{NBasis::R, {}};
  for (const auto& [beta, cf] : f.coeffs) {
    for (const auto& [delta, ch] : h.coeffs) {
      int m = delta.size() - beta.size();
      if (m < 0) continue;
      for (const auto& alpha : compositions_of(m)) {
        Rational c = pairing(nsym_r(delta), l_product(qsym_l(beta), qsym_l(alpha)));
        out.add_term(alpha, cf * ch * c);
      }
    }
  }
  return out;
}

namespace {

template <typename Elem>
std::string elem_str(const Elem& e, const char* letter) {
  if (e.coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [a, c] : e.coeffs) {
    if (!first) os << " + ";
    first = false;
    if (!(c == Rational(1))) os << c.str() << "*";
    os << letter << a.str();
  }
  return os.str();
}

}  // namespace

std::string nsym_str(const NSymElem& x) {
  return elem_str(x, x.basis == NBasis::R ? "R" : "H");
}
std::string qsym_str(const QSymElem& x) {
  return elem_str(x, x.basis == QBasis::L ? "L" : "M");
}

}  // namespace rhc
