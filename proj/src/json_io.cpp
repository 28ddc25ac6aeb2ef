#include "twobridge/json_io.hpp"

namespace twobridge {

Json complex_json(std::complex<double> z) { return Json::array({z.real(), z.imag()}); }

Json multipoly_json(const MultiPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms())
    terms.push_back(Json::array({e.e1, e.e2, e.e3, c.str()}));
  return terms;
}

MultiPoly multipoly_from_json(const nlohmann::json& j) {
  MultiPoly::TermMap terms;
  for (const auto& rec : j) {
    if (!rec.is_array() || rec.size() != 4)
      raise(ErrorCode::invalid_argument, "polynomial record must be [e1, e2, e3, coefficient]");
    terms[Exponents{rec[0].get<int>(), rec[1].get<int>(), rec[2].get<int>()}] =
        BigInt(rec[3].get<std::string>());
  }
  return MultiPoly::from_terms(std::move(terms));
}

namespace {

Json mat_json(const PolyMat2& mat) {
  return Json{{"a11", multipoly_json(mat.a11)},
              {"a12", multipoly_json(mat.a12)},
              {"a21", multipoly_json(mat.a21)},
              {"a22", multipoly_json(mat.a22)}};
}

}  // namespace

Json riley_json(const RileyData& data) {
  const auto checks = verify_riley_identities(data);
  Json j;
  j["p"] = data.form.p;
  j["q"] = data.form.q;
  j["hyperbolic"] = !is_torus(data.form);
  j["k"] = data.k;
  j["eps_k"] = data.eps_k;
  j["words"] = Json{{"w", data.words.w.render()},       {"v", data.words.v.render()},
                    {"v_prime", data.words.v_prime.render()}, {"y", data.words.y.render()},
                    {"w_dagger", data.words.w_dagger.render()}, {"r", data.words.r.render()}};
  j["phi_w"] = multipoly_json(data.phi_w);
  j["phi_w_text"] = data.phi_w.to_string();
  j["deg_u"] = data.phi_w.degree_u();
  j["leading_coeff"] = data.phi_w.leading_u_coeff() == MultiPoly::constant(1) ? 1 : -1;
  j["matrices"] = Json{{"w", mat_json(data.rho_w)},
                       {"v", mat_json(data.rho_v)},
                       {"v_prime", mat_json(data.rho_vprime)},
                       {"y", mat_json(data.rho_y)},
                       {"w_dagger", mat_json(data.rho_wdagger)}};
  j["identities"] = Json{{"det_w_is_one", checks.det_w_is_one},
                         {"u_w12_plus_w21_zero", checks.u_w12_plus_w21_zero},
                         {"dagger_identity", checks.dagger_identity},
                         {"relator_identity", checks.relator_identity},
                         {"vprime_identity", checks.vprime_identity},
                         {"degree_and_leading", checks.degree_and_leading}};
  return j;
}

Json report_json(const TorsionReport& report) {
  Json points = Json::array();
  for (const auto& pt : report.points)
    points.push_back(Json{{"u", complex_json(pt.u)}, {"residual", pt.residual}});
  Json torsions = Json::array();
  for (const auto& t : report.torsions) torsions.push_back(complex_json(t));
  return Json{{"p", report.form.p},
              {"q", report.form.q},
              {"c", complex_json(report.c)},
              {"d", complex_json(report.d)},
              {"points", points},
              {"torsions", torsions},
              {"inverse_sum", complex_json(report.inverse_sum)},
              {"inverse_magnitude_sum", report.inverse_magnitude_sum},
              {"relative_residual", report.relative_residual},
              {"flags", Json{{"min_root_gap", report.flags.min_root_gap},
                             {"min_dphi_dm", report.flags.min_dphi_dm},
                             {"min_dphi_du", report.flags.min_dphi_du},
                             {"min_w11", report.flags.min_w11},
                             {"min_v11phiv", report.flags.min_v11phiv}}}};
}

bool verify_passes(const RileyData& data, const SumStatistics& stats, const Tolerances& tol) {
  if (is_torus(data.form)) return stats.max_target_deviation <= tol.torus_rel;
  return stats.max_rel_residual <= tol.vanishing_rel;
}

Json statistics_json(const RileyData& data, const SumStatistics& stats, const RunConfig& cfg) {
  Json reports = Json::array();
  for (const auto& r : stats.reports) reports.push_back(report_json(r));
  Json summary{{"max_relative_residual", stats.max_rel_residual},
               {"median_relative_residual", stats.median_rel_residual},
               {"retries", stats.retries}};
  if (is_torus(data.form)) {
    summary["target"] = -2.0 * data.form.q;
    summary["max_target_deviation"] = stats.max_target_deviation;
  }
  return Json{{"p", data.form.p},
              {"q", data.form.q},
              {"hyperbolic", !is_torus(data.form)},
              {"trials", stats.trials},
              {"seed", cfg.seed},
              {"precision", precision_name(cfg.precision)},
              {"reports", reports},
              {"summary", summary},
              {"pass", verify_passes(data, stats, cfg.tol)}};
}

Json oracle_json(const RileyData& data, const OracleComparison& comparison,
                 const RunConfig& cfg) {
  Json rows = Json::array();
  for (const auto& row : comparison.rows)
    rows.push_back(Json{{"c", complex_json(row.c)},
                        {"d", complex_json(row.d)},
                        {"u", complex_json(row.u)},
                        {"formula", complex_json(row.formula)},
                        {"oracle", complex_json(row.oracle)},
                        {"magnitude_rel_diff", row.magnitude_rel_diff},
                        {"ratio", complex_json(row.ratio)}});
  return Json{{"p", data.form.p},
              {"q", data.form.q},
              {"seed", cfg.seed},
              {"precision", precision_name(cfg.precision)},
              {"characters", rows},
              {"max_rel_diff", comparison.max_rel_diff},
              {"sign_constant", comparison.sign_constant},
              {"sign_value", comparison.sign_value},
              {"pass", comparison.sign_constant &&
                           comparison.max_rel_diff <= cfg.tol.oracle_rel}};
}

namespace {

template <class Mat>
Json eigen_json(const Mat& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

Json cochain_json(const CochainData& cochain) {
  return Json{{"delta0", eigen_json(cochain.delta0)},
              {"delta1", eigen_json(cochain.delta1)},
              {"a0", eigen_json(cochain.a0)},
              {"a1", eigen_json(cochain.a1)},
              {"a2", eigen_json(cochain.a2)},
              {"a3", eigen_json(cochain.a3)},
              {"alpha1", complex_json(cochain.alpha1)},
              {"alpha2", complex_json(cochain.alpha2)},
              {"m_matrix", eigen_json(cochain.m_matrix)},
              {"p_vector", eigen_json(cochain.p_vector)},
              {"h1_rep", eigen_json(cochain.h1_rep)},
              {"h2_rep", eigen_json(cochain.h2_rep)},
              {"b1", Json::array({eigen_json(cochain.b1.first), eigen_json(cochain.b1.second)})}};
}

}  // namespace twobridge
