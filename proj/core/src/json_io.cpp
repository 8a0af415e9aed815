#include "rhc/json_io.hpp"

namespace rhc {

json to_json(const Composition& a) { return json(a.parts()); }

json to_json(const GeneralizedRibbon& g) {
  json comps = json::array();
  for (const auto& c : g.components()) comps.push_back(to_json(c));
  json cells = json::array();
  for (const auto& cell : g.cells()) cells.push_back(json::array({cell.row, cell.col}));
  return json{{"components", comps}, {"cells", cells}};
}

json to_json(const StandardRibbonTableau& t) {
  json entries = json::array();
  for (size_t i = 0; i < t.word.size(); ++i) {
    const Cell& c = t.shape.cells()[i];
    entries.push_back(json::array({c.row, c.col, t.word[i]}));
  }
  return json{{"shape", to_json(t.shape)}, {"entries", entries}};
}

json to_json(const Rational& r) { return json(r.str()); }

json to_json(const SparseMatrix& m) {
  json entries = json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r)) entries.push_back(json::array({r, c, v.str()}));
  return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

json to_json(const MultiplicityVector& mv) {
  json out = json::array();
  for (const auto& [a, m] : mv) out.push_back(json::array({to_json(a), m}));
  return out;
}

json to_json(const GeneralizedMultiplicityVector& mv) {
  json out = json::array();
  for (const auto& [comps, m] : mv) {
    json key = json::array();
    for (const auto& c : comps) key.push_back(to_json(c));
    out.push_back(json::array({key, m}));
  }
  return out;
}

json to_json(const NSymElem& x) {
  json terms = json::array();
  for (const auto& [a, c] : x.coeffs) terms.push_back(json::array({to_json(a), c.str()}));
  return json{{"basis", x.basis == NBasis::R ? "R" : "H"}, {"terms", terms}};
}

json to_json(const QSymElem& x) {
  json terms = json::array();
  for (const auto& [a, c] : x.coeffs) terms.push_back(json::array({to_json(a), c.str()}));
  return json{{"basis", x.basis == QBasis::L ? "L" : "M"}, {"terms", terms}};
}

json module_to_json(const HeckeModule& m) {
  json basis = json::array();
  for (const auto& w : m.basis) basis.push_back(json(w));
  json gens = json::object();
  for (size_t i = 0; i < m.gens.size(); ++i) {
    json entries = json::array();
    for (int r = 0; r < m.gens[i].rows(); ++r)
      for (const auto& [c, v] : m.gens[i].row(r)) entries.push_back(json::array({r, c, v.str()}));
    gens[std::to_string(i + 1)] = entries;
  }
  return json{{"n", m.n}, {"dim", m.dim}, {"basis", basis}, {"generators", gens}};
}

}  // namespace rhc
