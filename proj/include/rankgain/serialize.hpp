// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_SERIALIZE_HPP
#define RANKGAIN_SERIALIZE_HPP

// JSON documents for every report. Keys are emitted in sorted order and
// rationals as "num/den" strings, so identical inputs give identical bytes.

#include "json.hpp"

#include <string>
#include <vector>

#include "rankgain/coverings.hpp"
#include "rankgain/cubic_galois.hpp"
#include "rankgain/newton_planner.hpp"
#include "rankgain/qseries.hpp"
#include "rankgain/scan.hpp"

namespace rankgain {

using Json = nlohmann::json;

inline constexpr const char* kSchemaVersion = "v1";

inline Json to_json(const Rational& q) { return q.str(); }

inline Json to_json(const UniPoly& f) { return f.to_strings(); }

inline Json to_json(const CubicField& k) {
  Json j{{"defining", to_json(k.defining)}, {"disc", to_json(k.disc)}, {"class", to_string(k.galois_class)}};
  if (k.sqrt_disc) j["sqrt_disc"] = to_json(*k.sqrt_disc);
  return j;
}

inline Json to_json(const DisjointnessWitness& w) {
  if (w.distinct()) return Json{{"verdict", "DistinctFields"}, {"prime", w.prime}};
  return Json{{"verdict", "PresumedEqual"}, {"bound", w.bound}};
}

inline Json to_json(const FamilyParams& p) {
  return Json{{"a1", to_json(p.a1)}, {"a4", to_json(p.a4)}, {"a3", to_json(p.a3)}, {"a6", to_json(p.a6)}};
}

inline Json to_json(const FieldPoint& p) {
  if (p.is_infinity()) return Json{{"infinity", true}, {"modulus", to_json(p.modulus().poly())}};
  return Json{{"modulus", to_json(p.modulus().poly())},
              {"x", to_json(p.point().x().rep())},
              {"y", to_json(p.point().y().rep())}};
}

inline Json to_json(const PrimeReduction& r) {
  return Json{{"prime", r.prime},
              {"trace", r.trace},
              {"residue_degree", r.residue_degree},
              {"group_order", r.group_order.get_str()}};
}

inline Json to_json(const ExtensionCertificate& c) {
  Json reductions = Json::array();
  for (const auto& r : c.reductions) reductions.push_back(to_json(r));
  Json wits = Json::array();
  for (const auto& w : c.disjointness) {
    Json e = to_json(w.witness);
    e["against"] = w.against;
    wits.push_back(std::move(e));
  }
  return Json{{"s", to_json(c.s)},
              {"t", to_json(c.t)},
              {"fiber", to_json(c.fiber)},
              {"disc", to_json(c.disc)},
              {"sqrt_disc", to_json(c.sqrt_disc)},
              {"galois_class", to_string(c.galois_class)},
              {"point", to_json(c.point)},
              {"torsion_bound", c.torsion_bound},
              {"torsion_reductions", std::move(reductions)},
              {"nontorsion_checked_to", c.nontorsion_checked_to},
              {"disjointness", std::move(wits)}};
}

inline Json to_json(const ScanResult& r) {
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  Json skipped = Json::array();
  for (const auto& s : r.skipped) skipped.push_back(Json{{"s", to_json(s.s)}, {"reason", s.reason}});
  Json summary{{"params", to_json(r.params)},
               {"fibers_tested", r.summary.fibers_tested},
               {"accepted", r.summary.accepted},
               {"skipped_reducible", r.summary.skipped_reducible},
               {"skipped_presumed_equal", r.summary.skipped_presumed_equal},
               {"skipped_degenerate", r.summary.skipped_degenerate},
               {"skipped_torsion", r.summary.skipped_torsion},
               {"s_height_max", r.config.s_height_max},
               {"witness_bound", r.config.witness_bound}};
  return Json{{"schema", kSchemaVersion},
              {"kind", "family-scan"},
              {"certificates", std::move(certs)},
              {"skipped", std::move(skipped)},
              {"summary", std::move(summary)}};
}

inline Json to_json(const TriangleReport& t) {
  Json j{{"m", t.m},
         {"p", t.p},
         {"shift_invariant", t.shift_invariant},
         {"fixed_points_fixed", t.fixed_points_fixed},
         {"fixed_points_on_curve", t.fixed_points_on_curve},
         {"on_curve_matches_m_mod_3", t.on_curve_matches_m_mod_3},
         {"on_curve_matches_p_mod_3", t.on_curve_matches_p_mod_3},
         {"all_pass", t.all_pass()}};
  j["nonsingular"] = t.nonsingular ? Json(*t.nonsingular) : Json(nullptr);
  return j;
}

inline Json to_json(const PsiReport& p) {
  return Json{{"m", p.m},
              {"identities",
               Json{{"monomial_identity", p.monomial_identity},
                    {"line_substitution", p.line_substitution},
                    {"sign_identity", p.sign_identity},
                    {"mobius_cycle", p.mobius_cycle},
                    {"extension_on_line", p.extension_on_line},
                    {"extension_equivariant", p.extension_equivariant},
                    {"extension_hits_branch_points", p.extension_hits_branch_points}}},
              {"all_pass", p.all_pass()}};
}

inline Json to_json(const SuperellipticModel& m) {
  return Json{{"p", m.p}, {"r", m.r}, {"s", m.s}, {"winding", {m.w0, m.w1, m.winf}}};
}

inline Json to_json(const DegreeSet& d) {
  return Json{{"n", d.n}, {"d_max", d.d_max}, {"N", d.universal}, {"achievable", d.achievable},
              {"covers_tail", d.covers_tail}};
}

inline Json to_json(const EtaIdentityReport& r) {
  Json j{{"schema", kSchemaVersion},
         {"kind", "modular-verify"},
         {"order", r.order},
         {"printed_coefficients_match", r.printed_coefficients_match},
         {"j_identity_match", r.j_identity_match},
         {"closed_form_match", r.closed_form_match},
         {"eta_exponent", r.eta_exponent},
         {"printed_exponent_valuation", to_json(r.printed_exponent_valuation)},
         {"used_exponent_valuation", to_json(r.used_exponent_valuation)}};
  if (r.first_mismatch) {
    j["first_mismatch"] = Json{{"check", r.first_mismatch->check},
                               {"exponent", r.first_mismatch->exponent},
                               {"expected", to_json(r.first_mismatch->expected)},
                               {"actual", to_json(r.first_mismatch->actual)}};
  }
  return j;
}

inline Json to_json(const FermatTriple& t) { return Json::array({t.a, t.b, t.c}); }

}  // namespace rankgain

#endif  // RANKGAIN_SERIALIZE_HPP
