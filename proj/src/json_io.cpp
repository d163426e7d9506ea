#include "igusa/json_io.hpp"

namespace igusa {

namespace {

Json json_rat(const Rat& r) { return rat_str(r); }

Json json_vec(Vec2 v) { return Json::array({v.x, v.y}); }

Json json_face(const Face& f) {
  Json j;
  j["dim"] = f.dim;
  Json pts = Json::array();
  for (auto p : f.points) pts.push_back(json_vec(p));
  j["points"] = pts;
  return j;
}

const char* tag_name(EdgeTag t) {
  switch (t) {
    case EdgeTag::FacetNormal: return "facet_normal";
    case EdgeTag::Axis: return "axis";
    case EdgeTag::Inserted: return "inserted";
  }
  return "?";
}

}  // namespace

Json json_polytope(const NewtonPolytope& P) {
  Json j;
  Json verts = Json::array();
  for (auto v : P.vertices()) verts.push_back(json_vec(v));
  j["vertices"] = verts;
  Json sup = Json::array();
  for (auto v : P.support()) sup.push_back(json_vec(v));
  j["support"] = sup;
  Json facets = Json::array();
  for (auto& f : P.facets()) {
    Json jf;
    jf["normal"] = json_vec(f.normal);
    jf["offset"] = f.offset;
    Json pts = Json::array();
    for (auto p : f.points) pts.push_back(json_vec(p));
    jf["points"] = pts;
    facets.push_back(jf);
  }
  j["facets"] = facets;
  return j;
}

Json json_fan(const Fan& fan) {
  Json j;
  Json rays = Json::array();
  for (std::size_t i = 0; i < fan.rays.size(); ++i) {
    Json r;
    r["gen"] = json_vec(fan.rays[i]);
    r["tag"] = tag_name(fan.ray_tags[i]);
    rays.push_back(r);
  }
  j["rays"] = rays;
  Json cones = Json::array();
  for (auto& c : fan.cones) {
    Json jc;
    Json gens = Json::array();
    for (auto g : c.gens) gens.push_back(json_vec(g));
    jc["gens"] = gens;
    jc["det"] = c.det();
    jc["face"] = json_face(c.face);
    cones.push_back(jc);
  }
  j["cones"] = cones;
  return j;
}

Json json_rational_qt(const RationalQT& r) {
  Json j;
  Json num = Json::array();
  for (auto& [e, c] : r.num) {
    Json t;
    t["q"] = e.first;
    t["t"] = e.second;
    t["c"] = c.get_str();
    num.push_back(t);
  }
  j["num"] = num;
  Json den = Json::array();
  for (auto& [f, m] : r.den) {
    Json t;
    t["e"] = f.e;
    t["d"] = f.d;
    t["mult"] = m;
    den.push_back(t);
  }
  j["den"] = den;
  j["display"] = rational_qt_str(r);
  return j;
}

Json json_zeta(const ZetaResult& z) {
  Json j;
  auto row = [](const ZetaRow& r) {
    Json jr;
    Json gens = Json::array();
    for (auto g : r.cone.gens) gens.push_back(json_vec(g));
    jr["cone"] = gens;
    jr["face"] = json_face(r.cone.face);
    jr["L_base"] = json_rational_qt(r.L.base);
    jr["L_n_part"] = json_rational_qt(r.L.n_part);
    jr["S"] = json_rational_qt(r.S);
    if (r.N) jr["N"] = *r.N;
    return jr;
  };
  j["gamma_term"] = row(z.gamma_row);
  Json rows = Json::array();
  for (auto& r : z.rows) rows.push_back(row(r));
  j["rows"] = rows;
  if (z.total) j["total"] = json_rational_qt(*z.total);
  return j;
}

Json json_poles(const PoleData& pd) {
  Json j;
  Json poles = Json::array();
  for (auto& cp : pd.poles) {
    Json jp;
    jp["real_part"] = json_rat(cp.real_part);
    jp["period_d"] = cp.period_d;
    jp["multiplicity"] = cp.multiplicity;
    Json src = Json::array();
    for (auto s : cp.sources) src.push_back(json_vec(s));
    jp["sources"] = src;
    poles.push_back(jp);
  }
  j["poles"] = poles;
  Json strip;
  strip["alpha"] = pd.strip.alpha ? Json(json_rat(*pd.strip.alpha)) : Json(nullptr);
  strip["beta"] = json_rat(pd.strip.beta);
  strip["alpha_max"] =
      pd.strip.alpha_max ? Json(json_rat(*pd.strip.alpha_max)) : Json(nullptr);
  strip["beta_multiplicity"] = pd.strip.beta_multiplicity;
  j["strip"] = strip;
  return j;
}

Json json_series(const std::map<long, Rat>& coeffs) {
  Json j = Json::array();
  for (auto& [m, c] : coeffs) {
    Json t;
    t["m"] = m;
    t["coeff"] = json_rat(c);
    j.push_back(t);
  }
  return j;
}

Json json_spectrum(const ValuationSpectrum& s) {
  Json j;
  Json v = Json::array();
  for (auto& [m, x] : s.v) {
    Json t;
    t["m"] = m;
    t["vol"] = json_rat(x);
    v.push_back(t);
  }
  j["spectrum"] = v;
  j["tail"] = json_rat(s.tail);
  j["unresolved"] = json_rat(s.unresolved);
  j["certified"] = s.certified;
  return j;
}

Json json_asymptotics(const Asymptotics& a) {
  Json j;
  j["side"] = a.side;
  Json fams = Json::array();
  for (auto& f : a.families) {
    Json jf;
    jf["rate"] = json_rat(f.rate);
    jf["period"] = f.period;
    jf["residue"] = f.residue;
    Json poly = Json::array();
    for (auto& c : f.poly) poly.push_back(json_rat(c));
    jf["poly"] = poly;
    jf["degree"] = f.degree;
    fams.push_back(jf);
  }
  j["families"] = fams;
  j["certified"] = a.certified;
  j["fitted_constant"] =
      a.fitted_constant ? Json(json_rat(*a.fitted_constant)) : Json(nullptr);
  return j;
}

Json json_complex(const ComplexValue& v) {
  Json j;
  j["re"] = v.value.real();
  j["im"] = v.value.imag();
  j["err"] = v.err;
  return j;
}

Json json_envelope(const std::string& op, Json payload) {
  Json j;
  j["schema"] = "igusa-laurent/1";
  j["op"] = op;
  j["result"] = std::move(payload);
  return j;
}

}  // namespace igusa
