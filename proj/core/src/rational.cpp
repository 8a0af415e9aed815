#include "rhc/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace rhc {

long Rational::to_long() const {
  if (v_.get_den() != 1) throw std::domain_error("Rational::to_long: not an integer: " + str());
  if (!v_.get_num().fits_slong_p()) throw std::domain_error("Rational::to_long: overflow: " + str());
  return v_.get_num().get_si();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace rhc
