// Command-line front end: polytope/fan inspection, the symbolic zeta function
// and its pole data, exact series windows, the p-adic oracle, exponential
// sums and oscillatory integrals.  Output is JSON (schema igusa-laurent/1).
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "igusa/json_io.hpp"
#include "igusa/oracle.hpp"
#include "igusa/oscillatory.hpp"
#include "igusa/series.hpp"
#include "igusa/zeta.hpp"

using namespace igusa;

namespace {

void emit(const std::string& op, const Json& payload) {
  std::cout << json_envelope(op, payload).dump(2) << "\n";
}

PhiSpec parse_phi(const std::string& name, long ball_e, int unit_var) {
  PhiSpec phi;
  if (name == "quadrant") phi.kind = PhiSpec::Quadrant;
  else if (name == "ball") phi.kind = PhiSpec::Ball;
  else if (name == "unit-torus") phi.kind = PhiSpec::UnitTorus;
  else if (name == "half-torus") phi.kind = PhiSpec::HalfTorus;
  else throw CLI::ValidationError("--phi", "unknown domain " + name);
  phi.e = ball_e;
  phi.unit_var = unit_var;
  return phi;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"local zeta functions of Laurent polynomials in two variables"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker cap (evaluation is serial)");

  std::string poly;
  long p = 0;
  long M = 10;
  long mz = 1;
  long uu = 1;
  int coord = 0;
  int side = 1;
  long fit_window = 40;
  std::string phi_name = "quadrant";
  long ball_e = 1;
  int unit_var = 0;
  int depth_cap = 24;
  std::string ltau_form = "mass";
  bool refine = false;

  auto add_poly = [&](CLI::App* sub) {
    sub->add_option("-f,--poly", poly, "Laurent polynomial, e.g. \"x^-3+y^2+y^4\"")
        ->required();
  };

  auto* sc_poly = app.add_subcommand("polytope", "Newton polytope at infinity");
  add_poly(sc_poly);

  auto* sc_fan = app.add_subcommand("fan", "attainable fan / smooth refinement");
  add_poly(sc_fan);
  sc_fan->add_flag("--refine", refine, "emit the smooth refinement");

  auto* sc_nondeg = app.add_subcommand("nondeg", "non-degeneracy test mod p");
  add_poly(sc_nondeg);
  sc_nondeg->add_option("-p,--prime", p, "prime (0: search for the smallest good one)");

  auto* sc_zeta = app.add_subcommand("zeta", "explicit cone-by-cone formula");
  add_poly(sc_zeta);
  sc_zeta->add_option("-p,--prime", p, "prime for face counts (0: symbolic)");
  sc_zeta->add_option("--ltau-form", ltau_form, "mass|printed");

  auto* sc_poles = app.add_subcommand("poles", "candidate poles and strip");
  add_poly(sc_poles);

  auto* sc_series = app.add_subcommand("series", "exact coefficient window of Z");
  add_poly(sc_series);
  sc_series->add_option("-p,--prime", p, "prime")->required();
  sc_series->add_option("-M,--window", M, "window |m| <= M");

  auto* sc_asym = app.add_subcommand("asymptotics", "exponential-polynomial tails");
  add_poly(sc_asym);
  sc_asym->add_option("-p,--prime", p, "prime")->required();
  sc_asym->add_option("--side", side, "+1: t^m side; -1: t^-m side");
  sc_asym->add_option("--fit-window", fit_window, "window for the fitted constant");

  auto* sc_oracle = app.add_subcommand("oracle", "valuation spectrum over a domain");
  add_poly(sc_oracle);
  sc_oracle->add_option("-p,--prime", p, "prime")->required();
  sc_oracle->add_option("-M,--window", M, "window |m| <= M");
  sc_oracle->add_option("--phi", phi_name, "quadrant|ball|unit-torus|half-torus");
  sc_oracle->add_option("--ball-e", ball_e, "ball level e");
  sc_oracle->add_option("--unit-var", unit_var, "half-torus unit coordinate (0/1)");
  sc_oracle->add_option("--depth-cap", depth_cap, "fallback refinement cap");

  auto* sc_expsum = app.add_subcommand("expsum", "normalized exponential sum S_m");
  add_poly(sc_expsum);
  sc_expsum->add_option("-p,--prime", p, "prime")->required();
  sc_expsum->add_option("-m,--level", mz, "level m");
  sc_expsum->add_option("-i,--coord", coord, "which coordinate is the unit one");
  sc_expsum->add_option("-u,--unit", uu, "unit twist u");

  auto* sc_eprop = app.add_subcommand(
      "eprop4", "E(u p^-m) on the unit torus: character formula vs direct");
  add_poly(sc_eprop);
  sc_eprop->add_option("-p,--prime", p, "prime")->required();
  sc_eprop->add_option("-m,--level", mz, "level m");
  sc_eprop->add_option("-u,--unit", uu, "unit twist u");

  auto* sc_cmp = app.add_subcommand(
      "compare", "series window of the formula vs the oracle spectrum");
  add_poly(sc_cmp);
  sc_cmp->add_option("-p,--prime", p, "prime")->required();
  sc_cmp->add_option("-M,--window", M, "window |m| <= M");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  try {
    Laurent f = laurent_parse(poly);
    NewtonPolytope P(f);

    if (*sc_poly) {
      emit("polytope", json_polytope(P));
    } else if (*sc_fan) {
      Fan fan = attainable_fan(P);
      if (refine) fan = refine_to_simple(fan, P);
      emit("fan", json_fan(fan));
    } else if (*sc_nondeg) {
      long use_p = p;
      if (use_p == 0) {
        auto gp = find_good_prime(f);
        if (!gp) {
          std::cerr << "no good prime found in the search range\n";
          return 1;
        }
        use_p = *gp;
      }
      NondegReport rep = is_nondegenerate_mod_p(f, P, use_p);
      Json j;
      j["p"] = use_p;
      j["ok"] = rep.ok;
      if (rep.error) j["error"] = *rep.error;
      if (rep.bad_face) {
        j["bad_face_points"] = Json::array();
        for (auto v : rep.bad_face->points)
          j["bad_face_points"].push_back(Json::array({v.x, v.y}));
        j["witness"] = Json::array({rep.witness_x, rep.witness_y});
      }
      emit("nondeg", j);
      if (!rep.ok) return 1;
    } else if (*sc_zeta) {
      LTauForm form =
          ltau_form == "printed" ? LTauForm::Printed : LTauForm::MassIdentity;
      std::optional<long> pp;
      if (p != 0) pp = p;
      emit("zeta", json_zeta(zeta_first_quadrant(f, P, pp, form)));
    } else if (*sc_poles) {
      emit("poles", json_poles(candidate_poles(attainable_fan(P), P)));
    } else if (*sc_series) {
      ZetaResult z = zeta_first_quadrant(f, P, p);
      emit("series", json_series(series_expand(*z.total, p, M)));
    } else if (*sc_asym) {
      ZetaResult z = zeta_first_quadrant(f, P, p);
      emit("asymptotics",
           json_asymptotics(asymptotic_terms(*z.total, p, side, fit_window)));
    } else if (*sc_oracle) {
      PhiSpec phi = parse_phi(phi_name, ball_e, unit_var);
      emit("oracle",
           json_spectrum(valuation_spectrum(f, P, p, phi, M, depth_cap)));
    } else if (*sc_expsum) {
      emit("expsum", json_complex(exponential_sum(f, coord, p, mz, uu)));
    } else if (*sc_eprop) {
      ComplexValue via = oscillatory_via_characters(f, p, mz, uu);
      PhiSpec phi;
      phi.kind = PhiSpec::UnitTorus;
      ComplexValue direct = oscillatory_integral_direct(f, p, phi, mz, uu);
      Json j;
      j["character_formula"] = json_complex(via);
      j["direct"] = json_complex(direct);
      double diff = std::abs(via.value - direct.value);
      j["difference"] = diff;
      emit("eprop4", j);
      if (diff > via.err + direct.err + 1e-9) return 1;
    } else if (*sc_cmp) {
      ZetaResult z = zeta_first_quadrant(f, P, p);
      auto series = series_expand(*z.total, p, M);
      PhiSpec phi;
      phi.kind = PhiSpec::Quadrant;
      ValuationSpectrum spec = valuation_spectrum(f, P, p, phi, M);
      bool match = spec.certified;
      for (long m = -M; m <= M && match; ++m) {
        Rat a = series.count(m) ? series.at(m) : Rat(0);
        Rat b = spec.v.count(m) ? spec.v.at(m) : Rat(0);
        match = a == b;
      }
      Json j;
      j["formula"] = json_series(series);
      j["oracle"] = json_spectrum(spec);
      j["match"] = match;
      emit("compare", j);
      if (!match) return 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
