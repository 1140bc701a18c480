#pragma once

// JSON encoding of engine results.  Integers and rationals are written as
// decimal strings ("-41", "41/16") so no value is ever rounded.

#include "congruent/descent.hpp"
#include "congruent/points.hpp"
#include "congruent/theory.hpp"

#include <json.hpp>

namespace congruent::cli {

using json = nlohmann::ordered_json;

json to_json(const arith::BigInt& v);
json to_json(const arith::ExactRational& q);
json to_json(const Curve& E);
json to_json(const points::RationalPoint& P);
json to_json(const points::RightTriangle& t);
json to_json(const descent::HomogeneousSpace& S);
json to_json(const descent::Witness& w);
json to_json(const descent::SolvabilityStatus& s);
// `with_points` adds the rational point of every witness.
json to_json(const descent::DescentImage& image, bool with_points = true);
json to_json(const descent::RankBounds& b);
json to_json(const theory::CongruentCase& c);
json to_json(const theory::TheoremVerdict& v);
json to_json(const theory::PythWitness& w);
json to_json(const theory::Rank2Result& r);

}  // namespace congruent::cli
