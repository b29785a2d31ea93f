#include "aq/json_io.hpp"

#include <fstream>
#include <sstream>

#include "aq/errors.hpp"

namespace aq::io {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) throw SchemaError(std::string("expected an object with field \"") + key + "\"");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field \"") + key + "\"");
  return *it;
}

long integer_from(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) throw SchemaError("field \"" + field + "\" must be an integer");
  return j.get<long>();
}

const Json& array_from(const Json& j, const std::string& field) {
  if (!j.is_array()) throw SchemaError("field \"" + field + "\" must be an array");
  return j;
}

MatQ vector_from(const Json& j, const std::string& field, bool column) {
  const auto& a = array_from(j, field);
  const long n = static_cast<long>(a.size());
  MatQ m = column ? MatQ(n, 1) : MatQ(1, n);
  for (long k = 0; k < n; ++k) {
    Rational r = rational_from(a[static_cast<size_t>(k)], field);
    if (column) m(k, 0) = r;
    else m(0, k) = r;
  }
  return m;
}

Json vector_json(const MatQ& m) {
  Json a = Json::array();
  for (long k = 0; k < m.size(); ++k) a.push_back(to_json(m.rows() == 1 ? m(0, k) : m(k, 0)));
  return a;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_json(c));
  return a;
}

Json to_json(const MatQ& m) {
  Json a = Json::array();
  for (long r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(to_json(m(r, c)));
    a.push_back(row);
  }
  return a;
}

Json to_json(const Mat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Json to_json(const TorusElement& u) {
  Json terms = Json::array();
  for (const auto& [k, c] : u.terms()) terms.push_back({{"a", k.first}, {"b", k.second}, {"c", to_json(c)}});
  return {{"q", to_json(u.q())}, {"terms", terms}};
}

Json to_json(const TorusAutomorphism& s) {
  return {{"alpha", to_json(s.alpha())}, {"beta", to_json(s.beta())}, {"m", to_json(s.m())}};
}

Json to_json(const SkewLaurent& u) {
  Json coeffs = Json::array();
  for (const auto& [d, f] : u.coeffs())
    coeffs.push_back({{"deg", d}, {"num", to_json(f.num())}, {"den", to_json(f.den())}});
  return {{"side", to_string(u.side())}, {"q", to_json(u.q())}, {"coeffs", coeffs}};
}

Json to_json(const SkewSeries& s) {
  Json coeffs = Json::array();
  for (long k = 0; k <= s.depth(); ++k) {
    const RatFunc f = s.at(s.top() - k);
    if (f.is_zero()) continue;
    coeffs.push_back({{"deg", s.top() - k}, {"num", to_json(f.num())}, {"den", to_json(f.den())}});
  }
  return {{"side", to_string(s.side())}, {"q", to_json(s.q())}, {"top", s.top()}, {"depth", s.depth()},
          {"coeffs", coeffs}};
}

Json to_json(const FractionalIdeal& I) {
  Json gens = Json::array();
  for (const auto& g : I.gens) gens.push_back(to_json(g));
  return {{"side", to_string(I.side)}, {"q", to_json(I.q)}, {"gens", gens}};
}

Json to_json(const CMPoint& p) {
  return {{"q", to_json(p.q)}, {"n", p.n()},        {"X", to_json(p.X)},
          {"Y", to_json(p.Y)}, {"i", vector_json(p.i)}, {"j", vector_json(p.j)}};
}

Json to_json(const GroupWord& w) {
  Json letters = Json::array();
  for (Letter l : w.letters) letters.push_back(to_string(l));
  return {{"scaling", Json::array({to_json(w.alpha), to_json(w.beta)})}, {"letters", letters}};
}

Json to_json(const PicElement& p) {
  Json word = Json::array();
  for (Letter l : p.word.letters) word.push_back(to_string(l));
  return {{"alpha", to_json(p.alpha)}, {"beta", to_json(p.beta)}, {"m", to_json(p.m)}, {"word", word}};
}

Json to_json(const UnitWitness& u) { return {{"alpha", to_json(u.alpha)}, {"m", u.m}, {"k", u.k}}; }

Json to_json(const MemberBounds& b) { return {{"x_span", b.x_span}, {"y_span", b.y_span}}; }

Json to_json(const EquivarianceReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json st = {{"action", s.action}, {"side", to_string(s.side)}};
    st["orientation"] = s.orientation ? Json(to_string(*s.orientation)) : Json(nullptr);
    st["unit"] = s.unit ? Json{{"m", s.unit->m}, {"k", s.unit->k}} : Json(nullptr);
    st["bounds_used"] = to_json(s.bounds_used);
    steps.push_back(st);
  }
  Json out;
  out["orientation"] = r.orientation ? Json(to_string(*r.orientation)) : Json(nullptr);
  out["unit"] = r.unit ? Json{{"m", r.unit->m}, {"k", r.unit->k}} : Json(nullptr);
  out["bounds_used"] = to_json(r.bounds_used);
  out["status"] = r.ok ? "ok" : "not_found";
  out["steps"] = steps;
  return out;
}

Rational rational_from(const Json& j, const std::string& field) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const SchemaError& e) {
      throw SchemaError("field \"" + field + "\": " + e.what());
    }
  }
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw SchemaError("field \"" + field + "\" must be a rational string \"p/q\"");
}

Poly poly_from(const Json& j, const std::string& field) {
  std::vector<Rational> c;
  for (const auto& v : array_from(j, field)) c.push_back(rational_from(v, field));
  return Poly(c);
}

MatQ matrix_from(const Json& j, const std::string& field) {
  const auto& rows = array_from(j, field);
  const long r = static_cast<long>(rows.size());
  const long c = r == 0 ? 0 : static_cast<long>(array_from(rows[0], field).size());
  MatQ m(r, c);
  for (long a = 0; a < r; ++a) {
    const auto& row = array_from(rows[static_cast<size_t>(a)], field);
    if (static_cast<long>(row.size()) != c) throw SchemaError("field \"" + field + "\" has ragged rows");
    for (long b = 0; b < c; ++b) m(a, b) = rational_from(row[static_cast<size_t>(b)], field);
  }
  return m;
}

Mat2 mat2_from(const Json& j, const std::string& field) {
  const auto& rows = array_from(j, field);
  if (rows.size() != 2 || !rows[0].is_array() || !rows[1].is_array() || rows[0].size() != 2 || rows[1].size() != 2)
    throw SchemaError("field \"" + field + "\" must be a 2x2 integer matrix");
  return {integer_from(rows[0][0], field), integer_from(rows[0][1], field), integer_from(rows[1][0], field),
          integer_from(rows[1][1], field)};
}

TorusElement torus_from(const Json& j) {
  TorusElement u(rational_from(member(j, "q"), "q"));
  for (const auto& t : array_from(member(j, "terms"), "terms"))
    u.add_term(rational_from(member(t, "c"), "c"), integer_from(member(t, "a"), "a"), integer_from(member(t, "b"), "b"));
  return u;
}

TorusAutomorphism automorphism_from(const Json& j) {
  return {rational_from(member(j, "alpha"), "alpha"), rational_from(member(j, "beta"), "beta"),
          mat2_from(member(j, "m"), "m")};
}

Side side_from(const Json& j) {
  if (j == "x_left") return Side::x_left;
  if (j == "y_left") return Side::y_left;
  throw SchemaError("field \"side\" must be \"x_left\" or \"y_left\"");
}

SkewLaurent skew_from(const Json& j) {
  SkewLaurent u(side_from(member(j, "side")), rational_from(member(j, "q"), "q"));
  for (const auto& c : array_from(member(j, "coeffs"), "coeffs")) {
    Poly den = poly_from(member(c, "den"), "den");
    if (den.is_zero()) throw SchemaError("field \"den\" is the zero polynomial");
    u.add(integer_from(member(c, "deg"), "deg"), RatFunc(poly_from(member(c, "num"), "num"), den));
  }
  return u;
}

FractionalIdeal ideal_from(const Json& j) {
  FractionalIdeal I{side_from(member(j, "side")), rational_from(member(j, "q"), "q"), {}};
  for (const auto& g : array_from(member(j, "gens"), "gens")) {
    SkewLaurent u = skew_from(g);
    if (u.side() != I.side) throw SchemaError("generator side differs from the ideal side");
    if (u.q() != I.q) throw SchemaError("generator q differs from the ideal q");
    I.gens.push_back(u);
  }
  return I;
}

CMPoint point_data_from(const Json& j) {
  CMPoint p;
  p.q = rational_from(member(j, "q"), "q");
  const long n = integer_from(member(j, "n"), "n");
  if (n < 0) throw SchemaError("field \"n\" must be nonnegative");
  p.X = n == 0 ? MatQ(0, 0) : matrix_from(member(j, "X"), "X");
  p.Y = n == 0 ? MatQ(0, 0) : matrix_from(member(j, "Y"), "Y");
  p.i = vector_from(member(j, "i"), "i", true);
  p.j = vector_from(member(j, "j"), "j", false);
  auto check = [&](const MatQ& m, long r, long c, const char* f) {
    if (m.rows() != r || m.cols() != c)
      throw SchemaError(std::string("field \"") + f + "\" has the wrong shape for n = " + std::to_string(n));
  };
  check(p.X, n, n, "X");
  check(p.Y, n, n, "Y");
  check(p.i, n, 1, "i");
  check(p.j, 1, n, "j");
  return p;
}

CMPoint point_from(const Json& j) {
  CMPoint p = point_data_from(j);
  try {
    check_parameter(p.q);
  } catch (const Error& e) {
    throw ValidationError(std::string("q: ") + e.what());
  }
  auto v = cm_validate(p);
  if (!v.valid) throw ValidationError(v.diagnostic);
  return p;
}

GroupWord word_from(const Json& j) {
  GroupWord w;
  if (j.is_object() && j.contains("scaling")) {
    const auto& s = array_from(j["scaling"], "scaling");
    if (s.size() != 2) throw SchemaError("field \"scaling\" must have two entries");
    w.alpha = rational_from(s[0], "scaling");
    w.beta = rational_from(s[1], "scaling");
  }
  const Json& letters = j.is_array() ? j : member(j, "letters");
  for (const auto& l : array_from(letters, "letters")) {
    if (!l.is_string()) throw SchemaError("letters must be strings");
    w.letters.push_back(parse_letter(l.get<std::string>()));
  }
  return w;
}

PicElement pic_from(const Json& j) {
  PicElement p{rational_from(member(j, "alpha"), "alpha"), rational_from(member(j, "beta"), "beta"),
               mat2_from(member(j, "m"), "m"), {}};
  if (j.contains("word")) {
    p.word = word_from(j["word"]);
    if (p.word.matrix() != p.m) throw SchemaError("field \"word\" does not multiply out to \"m\"");
  } else {
    p.word = word_from_matrix(p.m);
  }
  return p;
}

Json load(const std::string& path_or_text) {
  std::string text = path_or_text;
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && std::string("{[\"-0123456789").find(text[first]) != std::string::npos;
  if (!inline_json) {
    std::ifstream in(path_or_text);
    if (!in) throw SchemaError("cannot read input \"" + path_or_text + "\"");
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

CMPoint parse_point(const std::string& path_or_text) { return point_from(load(path_or_text)); }
FractionalIdeal parse_ideal(const std::string& path_or_text) { return ideal_from(load(path_or_text)); }
PicElement parse_pic(const std::string& path_or_text) { return pic_from(load(path_or_text)); }

}  // namespace aq::io
