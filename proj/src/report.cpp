#include "hpcoh/report.hpp"

#include <sstream>

namespace hpcoh {

Json to_json(const GaussianRational& c) { return Json{{"re", c.re().str()}, {"im", c.im().str()}}; }

GradedElement vector_element(const Vector& v) {
  GradedElement out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.add(Mask{1} << i, v[i]);
  return out;
}

namespace {

Json table_json(const BidegreeTable& t, const char* field) {
  Json out = Json::array();
  for (const auto& [b, v] : t) out.push_back(Json{{"p", b.p}, {"q", b.q}, {field, v}});
  return out;
}

std::string table_text(const BidegreeTable& t, int max_degree) {
  int pmax = 0, qmax = 0;
  for (const auto& [b, v] : t) pmax = std::max(pmax, b.p), qmax = std::max(qmax, b.q);
  std::ostringstream os;
  os << "       ";
  for (int p = 0; p <= pmax; ++p) os << "  p=" << p << (p < 10 ? " " : "");
  os << "\n";
  for (int q = 0; q <= qmax; ++q) {
    os << "  q=" << q << (q < 10 ? "  " : " ");
    for (int p = 0; p <= pmax; ++p) {
      auto it = t.find({p, q});
      std::string cell = it == t.end() || p + q > max_degree ? "." : std::to_string(it->second);
      os << std::string(6 - std::min<std::size_t>(cell.size(), 5), ' ') << cell;
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace

Json structure_json(const SchoutenComplex& cx, const Labels& labels) {
  const auto& st = cx.structure();
  Json out;
  out["step"] = st.step;
  out["jacobi_ok"] = st.jacobi_ok;
  out["lcs_dims"] = st.lcs_dims;
  out["dim_center"] = st.dim_center;
  Json center = Json::array();
  for (const auto& v : st.center_basis) center.push_back(labels.format(vector_element(v)));
  out["center"] = center;
  Json layers = Json::array();
  for (const auto& layer : st.t_layers) {
    Json l = Json::array();
    for (const auto& v : layer.basis) l.push_back(labels.format(vector_element(v)));
    layers.push_back(l);
  }
  out["t_layers"] = layers;
  return out;
}

std::string structure_text(const SchoutenComplex& cx, const Labels& labels) {
  const auto& st = cx.structure();
  std::ostringstream os;
  os << "algebra " << cx.spec().name() << ": n = " << cx.n() << ", real dimension " << 2 * cx.n() << "\n";
  os << "  Jacobi identity: ok\n";
  os << "  nilpotent, step " << st.step << "; lower central series dims (complex):";
  for (int d : st.lcs_dims) os << " " << d;
  os << "\n  c^{1,0}: dim " << st.dim_center << " = span{";
  for (std::size_t i = 0; i < st.center_basis.size(); ++i)
    os << (i ? ", " : "") << labels.format(vector_element(st.center_basis[i]));
  os << "}\n";
  for (std::size_t l = 0; l < st.t_layers.size(); ++l) {
    os << "  t_" << l + 1 << ": {";
    const auto& layer = st.t_layers[l];
    for (std::size_t i = 0; i < layer.basis.size(); ++i)
      os << (i ? ", " : "") << labels.format(vector_element(layer.basis[i]));
    os << "}\n";
  }
  return os.str();
}

std::string obstruction_summary(const ObstructionResult& res, const Labels& labels) {
  switch (res.kind) {
    case ObstructionKind::trivial_action:
      return "trivial_action: iota_T d(rho_bar) = 0, ad_Lambda vanishes and the spectral sequence degenerates";
    case ObstructionKind::solvable:
      return "solvable: X = " + labels.format(res.x_element) + ", spectral sequence degenerates";
    case ObstructionKind::unsolvable: return "unsolvable: spectral sequence does not degenerate";
  }
  return {};
}

Json obstruction_json(const ObstructionResult& res, const Labels& labels) {
  Json out;
  out["kind"] = std::string(to_string(res.kind));
  out["lambda"] = labels.format(res.lambda);
  out["ad_lambda_rho_bar"] = labels.format(res.ad_rho_bar);
  if (res.kind == ObstructionKind::unsolvable) {
    out["x"] = nullptr;
  } else {
    Json coords = Json::array();
    for (std::size_t i = 0; i < res.t_indices.size(); ++i) {
      Json c = to_json(res.x.at(i));
      c["label"] = labels.name(res.t_indices[i]);
      coords.push_back(c);
    }
    out["x"] = Json{{"expression", labels.format(res.x_element)}, {"coordinates", coords}};
  }
  return out;
}

Json report_json(const CohomologyReport& rep, const SchoutenComplex& cx, const Labels& labels) {
  Json out;
  out["algebra"] = rep.name;
  out["n"] = cx.n();
  out["dim_L"] = rep.dim_L;
  out["max_degree"] = rep.max_degree;
  out["poisson"] = rep.poisson;
  out["structure"] = structure_json(cx, labels);
  out["hpq"] = table_json(rep.hpq, "dim");
  out["hn_lambda"] = rep.hn_lambda;
  out["e1_d1_ranks"] = table_json(rep.e1_d1_ranks, "rank");
  out["e2"] = table_json(rep.e2, "dim");
  out["degenerate"] = rep.degenerate;
  out["degeneracy_basis"] = rep.degeneracy_theorem_backed ? "theorem-backed" : "observed";
  out["hodge"] = rep.hodge.hodge;
  out["hodge_basis"] = rep.hodge.theorem_implied ? "theorem-implied" : "observed";
  Json degrees = Json::array();
  for (const auto& d : rep.hodge.degrees)
    degrees.push_back(Json{{"n", d.degree}, {"h_lambda", d.h_lambda}, {"sum_hpq", d.sum_hpq}, {"equal", d.equal()}});
  out["hodge_degrees"] = degrees;
  out["obstruction"] = rep.obstruction ? obstruction_json(*rep.obstruction, labels) : Json(nullptr);
  return out;
}

std::string report_text(const CohomologyReport& rep, const SchoutenComplex& cx, const Labels& labels) {
  std::ostringstream os;
  os << structure_text(cx, labels);
  os << "Poisson structure Lambda = " << rep.poisson << "\n";
  os << "degrees 0.." << rep.max_degree << " of " << rep.dim_L << "\n\n";
  os << "dim H^q(g^{p,0}):\n" << table_text(rep.hpq, rep.max_degree) << "\n";
  os << "rank d_1 at (p,q):\n" << table_text(rep.e1_d1_ranks, rep.max_degree) << "\n";
  os << "dim E_2^{p,q}:\n" << table_text(rep.e2, rep.max_degree) << "\n";
  os << "  n   H^n_Lambda   sum H^{p,q}\n";
  for (const auto& d : rep.hodge.degrees) {
    os << "  " << d.degree << (d.degree < 10 ? " " : "") << "  " << std::string(11 - std::to_string(d.h_lambda).size(), ' ')
       << d.h_lambda << "   " << std::string(11 - std::to_string(d.sum_hpq).size(), ' ') << d.sum_hpq
       << (d.equal() ? "" : "   strict") << "\n";
  }
  os << "\nfirst page: " << (rep.degenerate ? "degenerate" : "not degenerate") << " ("
     << (rep.degeneracy_theorem_backed ? "theorem-backed" : "observed") << ")\n";
  os << "Hodge decomposition: " << (rep.hodge.hodge ? "yes" : "no") << " ("
     << (rep.hodge.theorem_implied ? "theorem-implied" : "observed") << ")\n";
  if (rep.obstruction) os << "obstruction: " << obstruction_summary(*rep.obstruction, labels) << "\n";
  return os.str();
}

Json deformed_json(const DeformedResult& res, const Labels& labels) {
  Json out;
  out["square_zero"] = res.square_zero;
  out["dims"] = res.dims;
  Json images;
  for (std::size_t g = 0; g < res.generator_images.size(); ++g)
    images[labels.name(static_cast<int>(g))] = labels.format(res.generator_images[g]);
  out["generator_images"] = images;
  out["kernel_k1_dim"] = res.kernel_k1.size();
  Json kernel = Json::array();
  for (const auto& k : res.kernel_k1) kernel.push_back(labels.format(k));
  out["kernel_k1"] = kernel;
  return out;
}

std::string deformed_text(const DeformedResult& res, const Labels& labels) {
  std::ostringstream os;
  os << "delta^2 = 0: " << (res.square_zero ? "verified" : "no") << "\n";
  for (std::size_t g = 0; g < res.generator_images.size(); ++g)
    os << "  delta(" << labels.name(static_cast<int>(g)) << ") = " << labels.format(res.generator_images[g]) << "\n";
  os << "ker delta on K^1: dim " << res.kernel_k1.size() << "\n";
  for (const auto& k : res.kernel_k1) os << "  " << labels.format(k) << "\n";
  os << "dim H^n_delta:";
  for (auto d : res.dims) os << " " << d;
  os << "\n";
  return os.str();
}

}  // namespace hpcoh
