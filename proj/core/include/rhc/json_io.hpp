#pragma once

#include <json.hpp>

#include "rhc/complexes.hpp"
#include "rhc/hecke.hpp"
#include "rhc/koszul.hpp"
#include "rhc/skew.hpp"
#include "rhc/tableau.hpp"

namespace rhc {

// All reports use ordered JSON and iterate ordered containers, so identical
// inputs serialize byte-identically.
using json = nlohmann::ordered_json;

json to_json(const Composition& a);                 // [3,1,1]
json to_json(const GeneralizedRibbon& g);           // {"components":..., "cells":...}
json to_json(const StandardRibbonTableau& t);       // {"shape":..., "entries":...}
json to_json(const Rational& r);                    // "p" or "p/q"
json to_json(const SparseMatrix& m);                // {"rows":..,"cols":..,"entries":[[r,c,v],..]}
json to_json(const MultiplicityVector& mv);         // [[composition, mult], ...]
json to_json(const GeneralizedMultiplicityVector&); // [[[comp,...], mult], ...]
json to_json(const NSymElem& x);                    // {"basis":"R","terms":[[comp, coeff],..]}
json to_json(const QSymElem& x);
json module_to_json(const HeckeModule& m);          // {"n":..,"basis":..,"generators":..}

}  // namespace rhc
