#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rhc/composition.hpp"
#include "rhc/rational.hpp"
#include "rhc/words.hpp"

namespace rhc {

// Noncommutative symmetric functions, stored on the complete homogeneous (H)
// or ribbon (R) basis; quasisymmetric functions on the monomial (M) or
// fundamental (L) basis. R and L are the working bases; H and M are converted
// at the boundary. Zero coefficients are never stored; keys are compositions
// ordered by (size, parts), so all elements are implicitly graded.

enum class NBasis { H, R };
enum class QBasis { M, L };

struct NSymElem {
  NBasis basis = NBasis::R;
  std::map<Composition, Rational> coeffs;

  Rational coeff(const Composition& a) const;
  bool is_zero() const { return coeffs.empty(); }
  void add_term(const Composition& a, const Rational& c);
};

struct QSymElem {
  QBasis basis = QBasis::L;
  std::map<Composition, Rational> coeffs;

  Rational coeff(const Composition& a) const;
  bool is_zero() const { return coeffs.empty(); }
  void add_term(const Composition& a, const Rational& c);
};

NSymElem nsym_h(const Composition& a);
NSymElem nsym_r(const Composition& a);
QSymElem qsym_m(const Composition& a);
QSymElem qsym_l(const Composition& a);

NSymElem nsym_add(const NSymElem& x, const NSymElem& y);  // bases must match
NSymElem nsym_scale(const NSymElem& x, const Rational& c);
QSymElem qsym_add(const QSymElem& x, const QSymElem& y);
QSymElem qsym_scale(const QSymElem& x, const Rational& c);
bool operator==(const NSymElem& x, const NSymElem& y);
bool operator==(const QSymElem& x, const QSymElem& y);

// H_a = sum of R_b over coarsenings b of a, and the signed inverse.
NSymElem h_to_r(const NSymElem& x);
NSymElem r_to_h(const NSymElem& x);

// L_a = sum of M_b over refinements b of a, and the signed inverse.
QSymElem m_to_l(const QSymElem& x);
QSymElem l_to_m(const QSymElem& x);

// R_a R_b = R_{a.b} + R_{a(.)b}, extended bilinearly; result on the R basis.
NSymElem r_product(const NSymElem& x, const NSymElem& y);

// H_a H_b = H_{a.b}, extended bilinearly; result on the H basis.
NSymElem h_product(const NSymElem& x, const NSymElem& y);

// Product on the L basis via shuffles of representative reading words.
// The representative for a composition is tau1's reading word by default;
// use_tau0 switches to tau0's word (the result must not depend on it).
QSymElem l_product(const QSymElem& x, const QSymElem& y, bool use_tau0 = false);

// Coproduct of L_a: one term per traversal split of the ribbon, as
// (left, right) -> coefficient.
std::map<std::pair<Composition, Composition>, Rational> l_coproduct(const Composition& a);

// Duality pairing with <R_a, L_b> = delta_{a,b}; converts bases as needed.
Rational pairing(const NSymElem& x, const QSymElem& y);

// Skew operator: perp(F, H) = sum_a <H, F L_a> R_a.
NSymElem perp(const QSymElem& f, const NSymElem& h);

std::string nsym_str(const NSymElem& x);
std::string qsym_str(const QSymElem& x);

}  // namespace rhc
