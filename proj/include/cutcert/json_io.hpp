#pragma once

#include <cstdio>
#include <json.hpp>
#include <string>

#include "cutcert/alexander.hpp"
#include "cutcert/harvey.hpp"
#include "cutcert/laurent.hpp"
#include "cutcert/version.hpp"

namespace cutcert {

using Json = nlohmann::ordered_json;

/// Serialization of a Laurent polynomial: arity plus the sorted sequence of
/// [exponent-vector, coefficient-string] pairs. Round-trips bit-exactly.
inline Json laurent_to_json(const LaurentPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exps = Json::array();
    for (int x : e) exps.push_back(x);
    terms.push_back(Json::array({exps, c.str()}));
  }
  return Json{{"arity", p.arity()}, {"terms", terms}};
}

inline LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("terms"))
    throw Error(Errc::parse, "malformed Laurent polynomial object");
  int arity = j.at("arity").get<int>();
  LaurentPoly p(arity);
  for (const auto& term : j.at("terms")) {
    if (!term.is_array() || term.size() != 2)
      throw Error(Errc::parse, "malformed Laurent polynomial term");
    LaurentPoly::Exponents e;
    for (const auto& x : term.at(0)) e.push_back(x.get<int>());
    if (e.size() != static_cast<size_t>(arity))
      throw Error(Errc::parse, "exponent vector length != arity");
    p += LaurentPoly::monomial(std::move(e), Int(term.at(1).get<std::string>()));
  }
  return p;
}

inline Json jet_to_json(const JetAtOne& j) {
  return Json::array({j.value.str(), j.slope.str()});
}

inline Json int_mat_to_json(const IntMat& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json tool_header() {
  return Json{{"name", kToolName}, {"version", kToolVersion}};
}

namespace harvey {

inline Json params_to_json(const Params& p) {
  Json n = Json::array();
  for (long long v : p.n) n.push_back(v);
  return Json{{"m", p.m}, {"n", n}, {"N", p.N}};
}

inline Json pair_labels(int m) {
  PairTable pt(m);
  Json out = Json::array();
  for (int k = 0; k < pt.count(); ++k) {
    auto [i, j] = pt.pair_at(k);
    out.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
  }
  return out;
}

inline Json certificate_to_json(const Certificate& cert) {
  Json j;
  j["tool"] = tool_header();
  j["kind"] = cert.kind;
  j["params"] = params_to_json(cert.params);
  j["pairs"] = pair_labels(cert.params.m);

  Json sym = Json::array();
  for (const auto& row : cert.symbolic) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(e.str());
    sym.push_back(std::move(r));
  }
  j["matrix_mod_J2"] = Json{{"symbolic", sym}};
  Json jets = Json::array();
  for (const auto& row : cert.jets) {
    Json r = Json::array();
    for (const auto& e : row) r.push_back(jet_to_json(e));
    jets.push_back(std::move(r));
  }
  j["matrix_mod_J2"]["jets"] = jets;

  j["S1"] = int_mat_to_json(cert.S1);
  j["A1"] = int_mat_to_json(cert.A1);
  j["detA1"] = cert.detA1.str();

  Json checks;
  for (const auto& [name, ok] : cert.checks) checks[name] = ok;
  j["checks"] = checks;
  if (cert.has_nilpotent_module) {
    j["nilpotent_module"] = Json{{"additive_rank", cert.nilpotent_module.additive_rank},
                                 {"annihilator_exponent", cert.nilpotent_module.annihilator_exponent},
                                 {"cyclic", cert.nilpotent_module.cyclic}};
  }
  j["certified"] = cert.certified;
  Json concs = Json::array();
  for (const auto& c : cert.conclusions)
    concs.push_back(Json{{"statement", c.statement}, {"cites", c.cites}});
  j["conclusions"] = concs;
  return j;
}

}  // namespace harvey

inline Json rank_certificate_to_json(const RankCertificate& cert) {
  Json j;
  j["tool"] = tool_header();
  j["kind"] = "corank-obstruction";
  char digest[32];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(cert.presentation_digest));
  j["presentation_digest"] = std::string(digest);
  Json phis = Json::array();
  for (const auto& phi : cert.phis) {
    Json v = Json::array();
    for (long long x : phi.n) v.push_back(x);
    phis.push_back(std::move(v));
  }
  j["phis"] = phis;
  j["ranks"] = cert.ranks;
  j["exhaustive_for_family"] = cert.exhaustive_for_family;
  Json concs = Json::array();
  for (const auto& c : cert.conclusions)
    concs.push_back(Json{{"statement", c.statement}, {"cites", c.cites}});
  j["conclusions"] = concs;
  return j;
}

/// Structured error object; every CLI error path emits one of these, never a
/// partial certificate.
inline Json error_to_json(Errc code, const std::string& message) {
  return Json{{"error", Json{{"code", errc_name(code)}, {"message", message}}}};
}

}  // namespace cutcert
