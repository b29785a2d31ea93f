#include "aq/cli.hpp"

#include <cxxabi.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <typeinfo>
#include <random>
#include <sstream>

#include "aq/errors.hpp"

namespace aq::cli {

using io::Json;

SearchConfig ToolConfig::search() const {
  SearchConfig s;
  s.membership = {membership_x_span, membership_y_span};
  s.escalation_steps = escalation_steps;
  s.unit_bound = unit_search_bound;
  s.series_depth = series_depth;
  s.seed = static_cast<unsigned long>(seed);
  return s;
}

void ToolConfig::validate() const {
  if (membership_x_span <= 0 || membership_y_span <= 0) throw InvalidParameter("membership spans must be positive");
  if (unit_search_bound <= 0) throw InvalidParameter("unit_search_bound must be positive");
  if (series_depth <= 0) throw InvalidParameter("series_depth must be positive");
  if (escalation_steps < 0) throw InvalidParameter("escalation_steps must be nonnegative");
}

Json to_json(const ToolConfig& c) {
  return {{"membership_x_span", c.membership_x_span}, {"membership_y_span", c.membership_y_span},
          {"unit_search_bound", c.unit_search_bound}, {"series_depth", c.series_depth},
          {"escalation_steps", c.escalation_steps},   {"seed", c.seed}};
}

ToolConfig config_from(const Json& j, ToolConfig base) {
  if (!j.is_object()) throw SchemaError("config must be a JSON object");
  auto read = [&](const char* key, auto& field) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw SchemaError(std::string("config field \"") + key + "\" must be an integer");
    field = j[key].get<std::remove_reference_t<decltype(field)>>();
  };
  for (const auto& [key, value] : j.items()) {
    static const std::vector<std::string> known{"membership_x_span", "membership_y_span", "unit_search_bound",
                                                "series_depth",      "escalation_steps",  "seed"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw SchemaError("unknown config field \"" + key + "\"");
  }
  read("membership_x_span", base.membership_x_span);
  read("membership_y_span", base.membership_y_span);
  read("unit_search_bound", base.unit_search_bound);
  read("series_depth", base.series_depth);
  read("escalation_steps", base.escalation_steps);
  read("seed", base.seed);
  return base;
}

void apply_bounds(ToolConfig& c, const std::string& spec) {
  std::vector<int> v;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      size_t used = 0;
      v.push_back(std::stoi(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw SchemaError("--bounds expects \"x,y,u\" with integers, got \"" + spec + "\"");
    }
  }
  if (v.size() != 3) throw SchemaError("--bounds expects \"x,y,u\", got \"" + spec + "\"");
  c.membership_x_span = v[0];
  c.membership_y_span = v[1];
  c.unit_search_bound = v[2];
}

Json Report::to_json() const {
  Json j = {{"command", command}, {"status", status}, {"payload", payload}, {"bounds_used", bounds_used}};
  if (!message.empty()) j["message"] = message;
  return j;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c{"cm-validate", "cm-make",         "cm-act",       "cm-equiv",
                                          "ideal-build", "ideal-member",    "ideal-isom",   "ideal-cyclic",
                                          "ideal-stab-units", "kappa-expand", "pic-mul",    "pic-normalize",
                                          "pic-word",    "pic-inner",       "equivariance", "stabilizer",
                                          "selftest"};
  return c;
}

namespace {

const std::string& input(const std::vector<std::string>& in, size_t k, const std::string& what) {
  if (k >= in.size()) throw SchemaError("missing input: " + what);
  return in[k];
}

Rational need_q(const Options& o) {
  if (!o.q) throw SchemaError("this command needs --q");
  return *o.q;
}

Json unit_payload(const IsoResult& r) {
  Json p = {{"bounds_used", io::to_json(r.bounds_used)}};
  p["unit"] = r.unit ? io::to_json(*r.unit) : Json(nullptr);
  return p;
}

Json equivalence_json(const Equivalence& e) { return {{"g", io::to_json(e.g)}, {"k", e.k}, {"m", e.m}}; }

// Seeded point through cm_make, as in the property suites.
CMPoint sample_point(std::mt19937_64& rng, long n, const Rational& q) {
  auto uni = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  auto nonzero = [&] {
    long a;
    do a = uni(-4, 4);
    while (a == 0);
    return Rational(a, uni(1, 4));
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> xs;
    while (static_cast<long>(xs.size()) < n) {
      Rational v(uni(-6, 6), uni(1, 2));
      if (v.is_zero()) continue;
      bool ok = true;
      for (auto& w : xs) ok = ok && w != v && q * w != v && q * v != w;
      if (ok) xs.push_back(v);
    }
    MatQ i(n, 1), j(1, n);
    for (long k = 0; k < n; ++k) {
      i(k, 0) = nonzero();
      j(0, k) = nonzero();
    }
    try {
      return cm_make(q, xs, i, j);
    } catch (const Error&) {
    }
  }
  throw ValidationFailed("could not sample a point");
}

Json selftest(const ToolConfig& cfg) {
  std::mt19937_64 rng(static_cast<unsigned long>(cfg.seed));
  const SearchConfig search = cfg.search();
  Json checks = Json::array();
  int passed = 0, failed = 0;
  auto record = [&](const std::string& name, const std::function<bool()>& f) {
    bool ok = false;
    std::string note;
    try {
      ok = f();
    } catch (const std::exception& e) {
      note = e.what();
    }
    Json c = {{"name", name}, {"passed", ok}};
    if (!note.empty()) c["message"] = note;
    checks.push_back(c);
    (ok ? passed : failed) += 1;
  };
  auto torus = [&](const Rational& q) {
    TorusElement u(q);
    for (int t = 0; t < 3; ++t)
      u.add_term(Rational(std::uniform_int_distribution<long>(-4, 4)(rng)),
                 std::uniform_int_distribution<long>(-2, 2)(rng), std::uniform_int_distribution<long>(-2, 2)(rng));
    return u;
  };
  const std::vector<Rational> qs{Rational(2), Rational(3), Rational(2, 3)};

  record("torus relation and associativity", [&] {
    for (const auto& q : qs) {
      auto x = TorusElement::x(q), y = TorusElement::y(q);
      if (x * y != q * (y * x)) return false;
      for (int t = 0; t < 30; ++t) {
        auto a = torus(q), b = torus(q), c = torus(q);
        if ((a * b) * c != a * (b * c)) return false;
      }
    }
    return true;
  });
  record("cm_act preserves the CM equation", [&] {
    for (const auto& q : qs)
      for (long n = 1; n <= 3; ++n) {
        CMPoint p = sample_point(rng, n, q);
        for (Letter l : {Letter::g1, Letter::g1inv, Letter::g2, Letter::g2inv})
          if (!cm_validate(cm_act(l, p)).valid) return false;
        if (!cm_validate(cm_act(GroupWord::scaling(Rational(3), Rational(-1, 2)), p)).valid) return false;
      }
    return true;
  });
  record("braid relation on points", [&] {
    for (const auto& q : qs) {
      CMPoint p = sample_point(rng, 2, q);
      GroupWord a{{Letter::g1, Letter::g2, Letter::g1}}, b{{Letter::g2, Letter::g1, Letter::g2}};
      if (cm_act(a, p) != cm_act(b, p)) return false;
    }
    return true;
  });
  record("kappa times its inverse", [&] {
    for (const auto& q : qs) {
      auto K = kappa_series(sample_point(rng, 2, q), cfg.series_depth);
      if (!series_mul(K.kappa, K.kappa_inv).agrees_with(SkewSeries::one(Side::x_left, q, cfg.series_depth)))
        return false;
    }
    return true;
  });
  record("cayley-hamilton echo", [&] {
    for (const auto& q : qs) {
      CMPoint p = sample_point(rng, 2, q);
      auto c = cayley_hamilton_coeffs(p.X);
      for (long s = 0; s <= 3; ++s)
        for (long r = 0; r <= 3; ++r) {
          Rational echo(0);
          for (size_t k = 0; k < c.size(); ++k) echo += c[k] * kappa_coefficient(p, s, r + static_cast<long>(k) + 1);
          if (echo != kappa_coefficient(p, s, r)) return false;
        }
    }
    return true;
  });
  record("normal-form conditions of omega_x", [&] {
    for (const auto& q : qs) {
      auto rep = check_conditions(omega_x(sample_point(rng, 2, q)), 10, static_cast<unsigned long>(cfg.seed), search);
      if (!rep.meets_laurent || !rep.laurent_leads || !rep.unit_lead) return false;
    }
    return true;
  });
  record("omega is a homomorphism on Pic", [&] {
    for (const auto& q : qs)
      for (int t = 0; t < 10; ++t) {
        auto pick = [&] {
          Mat2 m;
          for (int s = 0; s < 3; ++s) {
            long k = std::uniform_int_distribution<long>(-2, 2)(rng);
            m = m * (s % 2 == 0 ? Mat2{1, k, 0, 1} : Mat2{1, 0, k, 1});
          }
          return make_pic(q, Rational(std::uniform_int_distribution<long>(1, 9)(rng)),
                          Rational(1, std::uniform_int_distribution<long>(1, 9)(rng)), m);
        };
        auto p1 = pick(), p2 = pick();
        auto s = compose_automorphisms(q, pic_to_automorphism(q, p2), pic_to_automorphism(q, p1));
        if (omega_of_automorphism(q, s) != pic_mul(q, p1, p2)) return false;
      }
    return true;
  });
  record("equivariance at n = 1", [&] {
    CMPoint p = sample_point(rng, 1, Rational(2));
    for (Letter l : {Letter::g1, Letter::g2}) {
      GroupWord w;
      w.letters = {l};
      if (!equivariance_check(p, w, search).ok) return false;
    }
    return true;
  });
  return {{"passed", passed}, {"failed", failed}, {"checks", checks}};
}

void dispatch(Report& rep, const std::vector<std::string>& in, const Options& opts, const ToolConfig& cfg) {
  const std::string& c = rep.command;
  const SearchConfig search = cfg.search();
  if (c == "cm-validate") {
    CMPoint p = io::point_data_from(io::load(input(in, 0, "point")));
    auto v = cm_validate(p);
    rep.payload = {{"valid", v.valid}};
    if (!v.valid) rep.payload["diagnostic"] = v.diagnostic;
  } else if (c == "cm-make") {
    Json j = io::load(input(in, 0, "cm-make input {\"q\",\"x\",\"i\",\"j\"}"));
    Rational q = j.contains("q") ? io::rational_from(j["q"], "q") : need_q(opts);
    auto entries = [&](const char* key) {
      if (!j.contains(key) || !j[key].is_array()) throw SchemaError(std::string("missing field \"") + key + "\"");
      std::vector<Rational> v;
      for (const auto& e : j[key]) v.push_back(io::rational_from(e, key));
      return v;
    };
    const std::vector<Rational> xs = entries("x"), iv = entries("i"), jv = entries("j");
    const long n = static_cast<long>(xs.size());
    if (static_cast<long>(iv.size()) != n || static_cast<long>(jv.size()) != n)
      throw SchemaError("fields \"i\" and \"j\" need one entry per eigenvalue");
    MatQ i(n, 1), jr(1, n);
    for (long k = 0; k < n; ++k) {
      i(k, 0) = iv[static_cast<size_t>(k)];
      jr(0, k) = jv[static_cast<size_t>(k)];
    }
    rep.payload = io::to_json(cm_make(q, xs, i, jr));
  } else if (c == "cm-act") {
    CMPoint p = io::parse_point(input(in, 0, "point"));
    GroupWord w = io::word_from(io::load(input(in, 1, "word")));
    rep.payload = io::to_json(cm_act(w, p));
  } else if (c == "cm-equiv") {
    CMPoint a = io::parse_point(input(in, 0, "first point"));
    CMPoint b = io::parse_point(input(in, 1, "second point"));
    auto e = cm_equivalent(a, b);
    if (e) {
      rep.payload = equivalence_json(*e);
      rep.payload["verified"] = verify_equivalence(a, b, *e);
    } else {
      rep.status = "not_found";
      rep.message = "points are not equivalent";
    }
  } else if (c == "ideal-build") {
    CMPoint p = io::parse_point(input(in, 0, "point"));
    rep.payload = io::to_json(opts.side.value_or(Side::x_left) == Side::x_left ? omega_x(p) : omega_y(p));
  } else if (c == "ideal-member") {
    FractionalIdeal I = io::parse_ideal(input(in, 0, "ideal"));
    SkewLaurent f = io::skew_from(io::load(input(in, 1, "element")));
    auto r = ideal_member_escalating(f, I.gens, search.membership, search.escalation_steps);
    if (r.witness) {
      Json w = Json::array();
      for (const auto& t : *r.witness) w.push_back(io::to_json(t));
      rep.payload = {{"witness", w}, {"bounds_used", io::to_json(r.used)}};
    } else {
      rep.status = "not_found";
      rep.message = "no witness within the membership spans";
      rep.payload = {{"bounds_used", io::to_json(r.used)}};
    }
  } else if (c == "ideal-isom" || c == "ideal-cyclic") {
    FractionalIdeal I1 = io::parse_ideal(input(in, 0, "ideal"));
    IsoResult r = c == "ideal-cyclic" ? is_cyclic(I1, search)
                                      : ideal_isomorphic(I1, io::parse_ideal(input(in, 1, "second ideal")), search);
    rep.payload = unit_payload(r);
    if (!r.unit) {
      rep.status = "not_found";
      rep.message = "no unit within the search bound";
    }
  } else if (c == "ideal-stab-units") {
    FractionalIdeal I = io::parse_ideal(input(in, 0, "ideal"));
    Json units = Json::array();
    for (auto [m, k] : unit_stabilizer(I, search)) units.push_back({{"m", m}, {"k", k}});
    rep.payload = {{"units", units}};
  } else if (c == "kappa-expand") {
    CMPoint p = io::parse_point(input(in, 0, "point"));
    auto K = kappa_series(p, cfg.series_depth);
    Json a = Json::array();
    for (const auto& row : K.a) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(io::to_json(v));
      a.push_back(r);
    }
    rep.payload = {{"depth", K.depth},
                   {"a", a},
                   {"kappa", io::to_json(K.kappa)},
                   {"kappa_inv", io::to_json(K.kappa_inv)},
                   {"product_is_one",
                    series_mul(K.kappa, K.kappa_inv).agrees_with(SkewSeries::one(Side::x_left, p.q, K.depth))}};
  } else if (c == "pic-mul") {
    Rational q = need_q(opts);
    rep.payload = io::to_json(pic_mul(q, io::parse_pic(input(in, 0, "pic element")),
                                      io::parse_pic(input(in, 1, "second pic element"))));
  } else if (c == "pic-normalize") {
    Rational q = need_q(opts);
    Rational a = opts.alpha ? *opts.alpha : io::rational_from(io::load(input(in, 0, "alpha")), "alpha");
    auto r = pic_normalize(q, a);
    rep.payload = {{"canonical", io::to_json(r.canonical)}, {"k", r.k}};
  } else if (c == "pic-word") {
    Json j = io::load(input(in, 0, "matrix"));
    Mat2 m = io::mat2_from(j.is_object() ? j.at("m") : j, "m");
    GroupWord w = word_from_matrix(m);
    rep.payload = {{"m", io::to_json(m)}, {"letters", io::to_json(w)["letters"]}};
  } else if (c == "pic-inner") {
    Rational q = need_q(opts);
    TorusAutomorphism s = io::automorphism_from(io::load(input(in, 0, "automorphism")));
    auto r = is_inner(q, s);
    rep.payload = {{"inner", r.has_value()}, {"pic", io::to_json(omega_of_automorphism(q, s))}};
    if (r) rep.payload["unit"] = {{"n", r->first}, {"m", r->second}};
  } else if (c == "equivariance") {
    CMPoint p = io::parse_point(input(in, 0, "point"));
    GroupWord w = io::word_from(io::load(input(in, 1, "word")));
    auto r = equivariance_check(p, w, search);
    rep.payload = io::to_json(r);
    if (!r.ok) {
      rep.status = "not_found";
      rep.message = "no consistent orientation within the search bounds";
    }
  } else if (c == "stabilizer") {
    CMPoint p = io::parse_point(input(in, 0, "point"));
    GroupWord w = io::word_from(io::load(input(in, 1, "word")));
    auto e = cm_equivalent(cm_act(w, p), p);
    rep.payload = {{"stabilizes", e.has_value()}};
    if (e) rep.payload["equivalence"] = equivalence_json(*e);
  } else if (c == "selftest") {
    rep.payload = selftest(cfg);
    if (rep.payload["failed"].get<int>() != 0) {
      rep.status = "error";
      rep.message = "self-test failures";
    }
  } else {
    throw SchemaError("unknown command \"" + c + "\"");
  }
}

std::string error_kind(const Error& e) {
  int status = 0;
  char* name = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
  std::string out = status == 0 && name ? name : "Error";
  std::free(name);
  if (out.rfind("aq::", 0) == 0) out = out.substr(4);
  return out;
}

}  // namespace

Report run(const std::string& command, const std::vector<std::string>& inputs, const Options& opts,
           const ToolConfig& config) {
  Report rep;
  rep.command = command;
  rep.bounds_used = to_json(config);
  try {
    config.validate();
    dispatch(rep, inputs, opts, config);
  } catch (const Error& e) {
    rep.status = "error";
    rep.payload = Json::object();
    rep.message = error_kind(e) + ": " + e.what();
  } catch (const std::exception& e) {
    rep.status = "error";
    rep.payload = Json::object();
    rep.message = e.what();
  }
  return rep;
}

}  // namespace aq::cli
