#include "altmono/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace altmono {

namespace {

Json element_to_json(const ElementQ& e) {
  Json arr = Json::array();
  for (const Rational& c : e.a) arr.push_back(format_rational(c));
  return arr;
}

ElementQ element_from_json(const AlgebraSpec& spec, const Json& j) {
  if (!j.is_array() || static_cast<int>(j.size()) != spec.dim_total)
    throw std::invalid_argument("coefficient vector has wrong length");
  ElementQ e(spec);
  for (int i = 0; i < spec.dim_total; ++i)
    e.a[i] = parse_rational(j[i].get<std::string>());
  return e;
}

std::vector<int> exponents_from_json(const Json& j, int nvars) {
  if (!j.is_array() || static_cast<int>(j.size()) != nvars)
    throw std::invalid_argument("exponent vector has wrong length");
  std::vector<int> e;
  for (const Json& v : j) {
    int x = v.get<int>();
    if (x < 0) throw std::invalid_argument("negative exponent");
    e.push_back(x);
  }
  return e;
}

}  // namespace

Json spec_to_json(const AlgebraSpec& spec) {
  Json j;
  j["name"] = spec.name;
  j["dim_total"] = spec.dim_total;
  j["dim_hyper"] = spec.dim_hyper;
  Json structure = Json::array();
  for (const Rational& c : spec.structure) structure.push_back(format_rational(c));
  j["structure"] = std::move(structure);
  j["involution_sign"] = spec.involution_sign;
  return j;
}

AlgebraSpec spec_from_json(const Json& j) {
  AlgebraSpec spec;
  spec.name = j.at("name").get<std::string>();
  spec.dim_total = j.at("dim_total").get<int>();
  spec.dim_hyper = j.at("dim_hyper").get<int>();
  if (spec.dim_total < 1 || spec.dim_hyper < 2 || spec.dim_hyper > spec.dim_total)
    throw std::runtime_error("algebra spec rejected: dimensions out of range");

  const Json& structure = j.at("structure");
  const std::size_t want =
      static_cast<std::size_t>(spec.dim_total) * spec.dim_total * spec.dim_total;
  if (!structure.is_array() || structure.size() != want)
    throw std::runtime_error("algebra spec rejected: structure tensor has wrong size");
  spec.structure.reserve(want);
  for (const Json& c : structure) spec.structure.push_back(parse_rational(c.get<std::string>()));

  const Json& signs = j.at("involution_sign");
  if (!signs.is_array() || static_cast<int>(signs.size()) != spec.dim_total)
    throw std::runtime_error("algebra spec rejected: involution_sign has wrong size");
  for (const Json& s : signs) spec.involution_sign.push_back(s.get<int>());

  spec.index_nonzero();
  std::vector<std::string> problems = spec.validate();
  if (!problems.empty()) {
    std::ostringstream msg;
    msg << "algebra spec rejected:";
    for (const std::string& p : problems) msg << "\n  - " << p;
    throw std::runtime_error(msg.str());
  }
  return spec;
}

AlgebraSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open spec file: " + path);
  Json j;
  in >> j;  // nlohmann throws parse_error with position info on malformed input
  return spec_from_json(j);
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [expo, coeff] : p.terms) {
    Json t;
    t["exponents"] = expo;
    t["coeff"] = element_to_json(coeff);
    terms.push_back(std::move(t));
  }
  Json j;
  j["nvars"] = p.nvars;
  j["terms"] = std::move(terms);
  return j;
}

Polynomial polynomial_from_json(const AlgebraSpec& spec, const Json& j) {
  Polynomial p(spec, j.at("nvars").get<int>());
  if (p.nvars != spec.m() + 1)
    throw std::invalid_argument("polynomial nvars does not match the spec frame");
  for (const Json& t : j.at("terms"))
    p.add_term(exponents_from_json(t.at("exponents"), p.nvars),
               element_from_json(spec, t.at("coeff")));
  return p;
}

Json radial_to_json(const RadialRationalFunction& f) {
  Json terms = Json::array();
  for (const auto& [level, poly] : f.numerators) {
    const int radial_power = f.m + 1 + 2 * level;
    for (const auto& [expo, coeff] : poly.terms) {
      Json t;
      t["radial_power"] = radial_power;
      t["exponents"] = expo;
      t["coeff"] = element_to_json(coeff);
      terms.push_back(std::move(t));
    }
  }
  Json j;
  j["m"] = f.m;
  j["prefactor"] = {{"coef", format_rational(f.prefactor.coef)},
                    {"pi_power", f.prefactor.pi_power}};
  j["terms"] = std::move(terms);
  return j;
}

RadialRationalFunction radial_from_json(const AlgebraSpec& spec, const Json& j) {
  RadialRationalFunction f;
  f.spec = &spec;
  f.m = j.at("m").get<int>();
  if (f.m != spec.m())
    throw std::invalid_argument("radial function m does not match the spec frame");
  f.prefactor.coef = parse_rational(j.at("prefactor").at("coef").get<std::string>());
  f.prefactor.pi_power = j.at("prefactor").at("pi_power").get<int>();
  for (const Json& t : j.at("terms")) {
    const int radial_power = t.at("radial_power").get<int>();
    const int twice_level = radial_power - (f.m + 1);
    if (twice_level < 0 || twice_level % 2 != 0)
      throw std::invalid_argument("radial_power incompatible with the frame dimension");
    auto it = f.numerators.find(twice_level / 2);
    if (it == f.numerators.end())
      it = f.numerators.emplace(twice_level / 2, Polynomial(spec, f.m + 1)).first;
    it->second.add_term(exponents_from_json(t.at("exponents"), f.m + 1),
                        element_from_json(spec, t.at("coeff")));
  }
  return f;
}

Json rule_to_json(const QuadratureRule& rule) {
  Json j;
  j["kind"] = rule.kind == RuleKind::sphere_surface ? "sphere_surface" : "ball_volume";
  j["m"] = rule.m;
  j["center"] = rule.center;
  j["radius"] = rule.radius;
  j["resolution"] = rule.resolution;
  j["seed"] = rule.seed;
  j["node_count"] = rule.size();
  return j;
}

QuadratureRule rule_from_json(const Json& j) {
  const std::string kind_name = j.at("kind").get<std::string>();
  RuleKind kind;
  if (kind_name == "sphere_surface")
    kind = RuleKind::sphere_surface;
  else if (kind_name == "ball_volume")
    kind = RuleKind::ball_volume;
  else
    throw std::invalid_argument("unknown rule kind: " + kind_name);
  QuadratureRule rule =
      build_quadrature(kind, j.at("center").get<std::vector<double>>(),
                       j.at("radius").get<double>(), j.at("m").get<int>(),
                       j.at("resolution").get<int>(), j.at("seed").get<unsigned>());
  if (rule.size() != j.at("node_count").get<std::size_t>())
    throw std::invalid_argument("rule node count mismatch after rebuild");
  return rule;
}

}  // namespace altmono
