#include "ajc/json_io.hpp"

#include "ajc/errors.hpp"

namespace ajc::jsonio {

namespace {

Int parse_int(const Json& j) {
  if (!j.is_string()) throw SchemaError("expected an integer as a decimal string");
  Int v;
  if (v.set_str(j.get<std::string>(), 10) != 0) throw SchemaError("malformed integer \"" + j.get<std::string>() + "\"");
  return v;
}

Rat parse_rat(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (!j.is_string()) throw SchemaError("expected a rational as a string");
  Rat v;
  if (v.set_str(j.get<std::string>(), 10) != 0 || v.get_den() == 0)
    throw SchemaError("malformed rational \"" + j.get<std::string>() + "\"");
  v.canonicalize();
  return v;
}

int parse_exp(const Json& j) {
  if (!j.is_number_integer()) throw SchemaError("expected an integer exponent");
  return j.get<int>();
}

const Json& tuple(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) throw SchemaError("expected a list of length " + std::to_string(n));
  return j;
}

void require_array(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + ": expected a list");
}

Json rats(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

}  // namespace

Json to_json(const LaurentT& f) {
  Json out = Json::array();
  for (const auto& [e, c] : f.terms()) out.push_back(Json::array({e, c.get_str()}));
  return out;
}

LaurentT laurent_from_json(const Json& j) {
  require_array(j, "LaurentT");
  std::vector<LaurentT::Term> terms;
  for (const auto& t : j) {
    tuple(t, 2);
    terms.emplace_back(parse_exp(t[0]), parse_int(t[1]));
  }
  return LaurentT::from_terms(std::move(terms));
}

Json to_json(const PolyTM& f) {
  Json out = Json::array();
  for (const auto& [k, c] : f.terms()) out.push_back(Json::array({k.first, k.second, c.get_str()}));
  return out;
}

PolyTM polytm_from_json(const Json& j) {
  require_array(j, "PolyTM");
  PolyTM p;
  for (const auto& t : j) {
    tuple(t, 3);
    p.add_term(parse_exp(t[0]), parse_exp(t[1]), parse_int(t[2]));
  }
  return p;
}

Json to_json(const TorusOp& op) {
  Json out = Json::array();
  for (const auto& [k, a] : op.coeffs()) out.push_back(Json::array({k, to_json(a)}));
  return out;
}

TorusOp torus_from_json(const Json& j) {
  require_array(j, "TorusOp");
  TorusOp op;
  for (const auto& t : j) {
    tuple(t, 2);
    op.add_term(polytm_from_json(t[1]), parse_exp(t[0]));
  }
  return op;
}

Json to_json(const CommPoly& p) {
  Json out = Json::array();
  for (const auto& [k, c] : p.terms()) out.push_back(Json::array({k.first, k.second, c.get_str()}));
  return out;
}

CommPoly commpoly_from_json(const Json& j) {
  require_array(j, "CommPoly");
  CommPoly p;
  for (const auto& t : j) {
    tuple(t, 3);
    p.add_term(parse_exp(t[0]), parse_exp(t[1]), parse_rat(t[2]));
  }
  return p;
}

Json to_json(const QuasiPoly& q) {
  Json out;
  out["period"] = q.period;
  out["a"] = rats(q.a);
  out["b"] = rats(q.b);
  out["c"] = rats(q.c);
  out["N"] = q.N;
  return out;
}

QuasiPoly quasi_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("QuasiPoly: expected an object");
  QuasiPoly q;
  q.period = j.at("period").get<int>();
  q.N = j.at("N").get<long>();
  for (auto [key, dst] : {std::pair{"a", &q.a}, std::pair{"b", &q.b}, std::pair{"c", &q.c}}) {
    const Json& arr = j.at(key);
    require_array(arr, key);
    for (const auto& x : arr) dst->push_back(parse_rat(x));
    if (static_cast<int>(dst->size()) != q.period) throw SchemaError(std::string("QuasiPoly: ") + key + " needs period entries");
  }
  return q;
}

Json to_json(const RecurrenceCandidate& c) {
  Json out;
  out["op"] = to_json(c.op);
  out["order"] = c.op.max_l();
  out["ansatz"] = {{"d", c.d}, {"deg_m", c.deg_m}, {"deg_t", c.deg_t}, {"engine", c.engine}};
  out["guess_range"] = Json::array({c.guess_lo, c.guess_hi});
  out["verify_range"] = Json::array({c.verify_lo, c.verify_hi});
  out["status"] = "candidate";
  return out;
}

Json to_json(const AJVerdict& v) {
  Json out;
  out["status"] = verdict_name(v.status);
  out["convention"] = v.convention;
  if (v.status == Verdict::Match)
    out["cofactor"] = {{"num", v.cofactor_num.to_string()}, {"den", v.cofactor_den.to_string()}};
  else
    out["cofactor"] = nullptr;
  out["diagnostics"] = v.diagnostic;
  return out;
}

Json to_json(const NewtonPolygon& p) {
  Json out = Json::array();
  for (const auto& [l, m] : p.vertices) out.push_back(Json::array({l, m}));
  return out;
}

}  // namespace ajc::jsonio
