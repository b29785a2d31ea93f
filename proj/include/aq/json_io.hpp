#pragma once

#include <string>

#include "aq/ideal.hpp"
#include "json.hpp"

namespace aq::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Poly& p);
Json to_json(const MatQ& m);
Json to_json(const Mat2& m);
Json to_json(const TorusElement& u);
Json to_json(const TorusAutomorphism& s);
Json to_json(const SkewLaurent& u);
Json to_json(const SkewSeries& s);
Json to_json(const FractionalIdeal& I);
Json to_json(const CMPoint& p);
Json to_json(const GroupWord& w);
Json to_json(const PicElement& p);
Json to_json(const UnitWitness& u);
Json to_json(const MemberBounds& b);
Json to_json(const EquivarianceReport& r);

// All parsers throw SchemaError with the offending field in the message.
Rational rational_from(const Json& j, const std::string& field = "value");
Poly poly_from(const Json& j, const std::string& field = "poly");
MatQ matrix_from(const Json& j, const std::string& field = "matrix");
Mat2 mat2_from(const Json& j, const std::string& field = "m");
TorusElement torus_from(const Json& j);
TorusAutomorphism automorphism_from(const Json& j);
SkewLaurent skew_from(const Json& j);
FractionalIdeal ideal_from(const Json& j);
// Raw point without validation.
CMPoint point_data_from(const Json& j);
// Point checked by cm_validate; ValidationError names the violated invariant.
CMPoint point_from(const Json& j);
GroupWord word_from(const Json& j);
PicElement pic_from(const Json& j);
Side side_from(const Json& j);

// File contents or inline JSON text; SchemaError on unreadable or malformed input.
Json load(const std::string& path_or_text);

CMPoint parse_point(const std::string& path_or_text);
FractionalIdeal parse_ideal(const std::string& path_or_text);
PicElement parse_pic(const std::string& path_or_text);

}  // namespace aq::io
