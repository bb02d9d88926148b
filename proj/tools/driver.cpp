#include "driver.hpp"

#include <algorithm>
#include <optional>
#include <variant>

#include "fiberfield/curves.hpp"
#include "fiberfield/deformation.hpp"
#include "fiberfield/liealg.hpp"
#include "fiberfield/version.hpp"

namespace fiberfield::cli {

namespace {

// ---------------------------------------------------------------------- //
// config parsing

Rational parse_rational(const json& v, const std::string& what) {
  try {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) return Rational(v.get<std::string>());
  } catch (const Error& e) {
    throw ConfigError(what + ": " + e.what());
  }
  throw ConfigError(what + ": expected an integer or a rational string");
}

UniPoly parse_unipoly(const json& v, const std::string& what) {
  if (!v.is_array()) throw ConfigError(what + ": expected an array of coefficients");
  std::vector<Rational> cs;
  for (const auto& c : v) cs.push_back(parse_rational(c, what));
  return UniPoly(cs);
}

const json& require(const json& cfg, const std::string& key) {
  if (!cfg.contains(key)) throw ConfigError("missing config key '" + key + "'");
  return cfg.at(key);
}

int require_int(const json& cfg, const std::string& key, int lo, int hi) {
  const auto& v = require(cfg, key);
  if (!v.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  const int n = v.get<int>();
  if (n < lo || n > hi)
    throw ConfigError("'" + key + "' out of range [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  return n;
}

struct CurveHandle {
  // exactly one is set
  std::optional<QuotientRing<Rational>> fiber;
  std::optional<WeierstrassFamily> family;
  std::string type;
};

CurveHandle build_curve(const json& desc, StepBudget& budget) {
  if (!desc.is_object()) throw ConfigError("curve description must be an object");
  const std::string type = require(desc, "type").get<std::string>();
  const json params = desc.value("params", json::object());
  CurveHandle h;
  h.type = type;
  try {
    if (type == "laurent") {
      h.fiber = laurent_ring(&budget);
    } else if (type == "cusp") {
      h.fiber = cusp_ring(&budget);
    } else if (type == "cusp_monomial") {
      h.fiber = cusp_monomial_ring(&budget);
    } else if (type == "nodal") {
      h.fiber = nodal_ring(parse_rational(require(params, "e"), "nodal e"), &budget);
    } else if (type == "weierstrass_fiber") {
      h.fiber = weierstrass_fiber(parse_rational(require(params, "e1"), "e1"),
                                  parse_rational(require(params, "e2"), "e2"),
                                  parse_rational(require(params, "e3"), "e3"), &budget);
    } else if (type == "weierstrass") {
      h.family = weierstrass_family(parse_unipoly(require(params, "e1"), "e1"),
                                    parse_unipoly(require(params, "e2"), "e2"),
                                    parse_unipoly(require(params, "e3"), "e3"), &budget);
    } else if (type == "punctured_p1") {
      std::vector<Rational> pts;
      for (const auto& p : require(params, "points"))
        pts.push_back(parse_rational(p, "puncture point"));
      h.fiber = punctured_p1_ring(pts, &budget).ring;
    } else if (type == "free") {
      std::vector<std::string> vars;
      for (const auto& v : require(params, "vars")) vars.push_back(v.get<std::string>());
      if (vars.empty()) throw ConfigError("free ring needs at least one variable");
      h.fiber = QuotientRing<Rational>::free_ring(vars);
    } else {
      throw ConfigError("unknown curve type '" + type + "'");
    }
  } catch (const InvariantError& e) {
    throw ConfigError(std::string("invalid curve parameters: ") + e.what());
  }
  return h;
}

// ---------------------------------------------------------------------- //
// serialization

template <class K>
json poly_list_json(const std::vector<MultiPoly<K>>& ps, const std::vector<std::string>& vars) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(p.str(vars));
  return a;
}

template <class K>
json basis_json(const DerivationBasis<K>& b) {
  json out;
  out["ring"] = b.ring.text();
  out["degree_bound"] = b.degree_bound;
  out["dimension"] = b.dim();
  out["complete"] = b.complete;
  json rows = json::array();
  for (const auto& d : b.basis) rows.push_back(poly_list_json(d.coeffs(), b.ring.vars()));
  out["basis"] = rows;
  return out;
}

// Sparse triples [i, j, [coords in the basis]]; pairs whose bracket leaves
// the solved span are listed separately.
template <class K>
json bracket_table_json(const DerivationBasis<K>& b) {
  json trips = json::array();
  json undef = json::array();
  for (int i = 0; i < b.dim(); ++i)
    for (int j = i + 1; j < b.dim(); ++j) {
      const auto br = bracket(b.basis[i], b.basis[j]);
      const auto c = coords_in_basis(b.basis, br);
      if (!c) {
        undef.push_back(json::array({i, j}));
        continue;
      }
      json coords = json::array();
      for (const auto& x : *c) coords.push_back(x.str());
      trips.push_back(json::array({i, j, coords}));
    }
  json out;
  out["brackets"] = std::move(trips);
  out["undefined_brackets"] = std::move(undef);
  return out;
}

json cohomology_json(const CohomologyReport& rep) {
  json out;
  out["weight"] = rep.weight;
  out["coefficients"] = coeff_name(rep.coeffs);
  out["dims"] = {{"Z2", rep.dim_cocycles}, {"B2", rep.dim_coboundaries}, {"H2", rep.dim_h2}};
  out["closed"] = rep.closed;
  if (rep.skipped_triples > 0) out["skipped_triples"] = rep.skipped_triples;
  if (!rep.generator.empty()) {
    json gen = json::array();
    for (const auto& [i, j, k, c] : rep.generator) {
      if (k < 0)
        gen.push_back(json::array({i, j, c}));
      else
        gen.push_back(json::array({i, j, k, c}));
    }
    out["generator"] = std::move(gen);
  }
  return out;
}

json base_change_json(const BaseChangeReport& rep) {
  return json{{"t0", rep.t0.str()},
              {"degree_bound", rep.degree_bound},
              {"dim_lhs", rep.dim_lhs},
              {"dim_rhs", rep.dim_rhs},
              {"rhs_contained", rep.rhs_contained},
              {"match", rep.match}};
}

json table_json(const FiberTable& t, const std::vector<std::string>& labels) {
  json out = json::array();
  for (const auto& [ij, v] : t) {
    json comps = json::array();
    for (const auto& [k, c] : v) comps.push_back(json::array({labels[k], c.str()}));
    out.push_back(json::array({labels[ij.first], labels[ij.second], comps}));
  }
  return out;
}

template <class K>
json gla_table_json(const GradedLieAlgebra<K>& L) {
  json out = json::array();
  for (const auto& [ij, v] : L.table()) {
    json comps = json::array();
    for (const auto& [k, c] : v) comps.push_back(json::array({k, c.str()}));
    out.push_back(json::array({ij.first, ij.second, comps}));
  }
  return out;
}

// ---------------------------------------------------------------------- //
// windowed cohomology through the derivation pipeline (trivial grading)

struct PipelineH2 {
  std::vector<std::pair<int, CohomologyReport>> per_truncation;
  bool stabilized = false;
  std::optional<int> value;
};

PipelineH2 windowed_h2_of_ring(const QuotientRing<Rational>& ring,
                               const std::vector<int>& truncations, StepBudget& budget) {
  PipelineH2 out;
  for (int d : truncations) {
    const auto basis = derivation_basis(ring, d, &budget);
    const auto wa = from_derivations(basis.basis, std::vector<int>(basis.dim(), 0));
    out.per_truncation.push_back(
        {d, ce_h2(wa.algebra, 0, CoeffKind::Trivial, ClosurePolicy::Partial)});
  }
  if (out.per_truncation.size() >= 2) {
    const auto& a = out.per_truncation[out.per_truncation.size() - 2].second;
    const auto& b = out.per_truncation.back().second;
    if (a.dim_h2 == b.dim_h2) {
      out.stabilized = true;
      out.value = b.dim_h2;
    }
  }
  return out;
}

json pipeline_h2_json(const PipelineH2& p) {
  json entries = json::array();
  for (const auto& [d, rep] : p.per_truncation) {
    json e = cohomology_json(rep);
    e["truncation"] = d;
    e["stabilized"] = p.stabilized;
    entries.push_back(std::move(e));
  }
  json out;
  out["entries"] = std::move(entries);
  out["stabilized"] = p.stabilized;
  if (p.stabilized)
    out["h2"] = *p.value;
  else
    out["note"] = "stabilization failed at the configured truncations; no value reported";
  return out;
}

// euler-graded window report for rings carrying a canonical euler field
json witt_compare_json(const DerivationBasis<Rational>& basis, const Derivation<Rational>& euler) {
  const auto graded = grade_by_ad_eigenvalues(basis.basis, euler);
  const auto wa = from_derivations(graded.basis, graded.weights);
  json out;
  out["weights"] = graded.weights;
  out["matches_witt_constants"] = matches_witt_constants(wa.algebra);
  out["jacobi_ok"] = jacobi_check(wa.algebra).ok;
  out["undefined_pairs"] = wa.undefined_pairs;
  const auto [lo, hi] =
      std::minmax_element(graded.weights.begin(), graded.weights.end());
  out["window"] = json::array({*lo, *hi});
  out["two_sided"] = (*lo < 0 && *hi > 0);
  return out;
}

}  // namespace

// ------------------------------------------------------------------------ //

json run_der_solve(const json& cfg, long budget_limit) {
  StepBudget budget(budget_limit);
  const int bound = require_int(cfg, "degree_bound", 0, 12);
  const auto curve = build_curve(require(cfg, "curve"), budget);
  json res;
  res["curve_type"] = curve.type;

  auto emit = [&](const auto& basis) {
    res["derivations"] = basis_json(basis);
    if (cfg.value("brackets", true)) res["bracket_table"] = bracket_table_json(basis);
    if (cfg.value("freeness_probe", false)) {
      const auto fr = freeness_probe(basis);
      res["freeness"] = {{"principal", fr.principal}, {"generator_index", fr.generator_index}};
    }
  };

  if (curve.family) {
    const auto basis = derivation_basis(curve.family->ring, bound, &budget);
    emit(basis);
    res["discriminant"] = discriminant(*curve.family).str();
  } else {
    const auto basis = derivation_basis(*curve.fiber, bound, &budget);
    emit(basis);
    if (cfg.value("witt_compare", false)) {
      const auto euler = canonical_euler(*curve.fiber);
      if (!euler)
        throw ConfigError("witt_compare needs a ring with a canonical euler field");
      res["witt_compare"] = witt_compare_json(basis, *euler);
    }
    if (cfg.contains("vanishing_point")) {
      std::vector<Rational> pt;
      for (const auto& c : cfg.at("vanishing_point"))
        pt.push_back(parse_rational(c, "vanishing_point"));
      try {
        const auto sub = vanishing_subalgebra(basis, pt);
        json vs;
        vs["codimension"] = sub.codimension;
        json rows = json::array();
        for (const auto& d : sub.sub_basis)
          rows.push_back(poly_list_json(d.coeffs(), curve.fiber->vars()));
        vs["sub_basis"] = std::move(rows);
        res["vanishing"] = std::move(vs);
      } catch (const InvariantError& e) {
        throw ConfigError(std::string("vanishing_point: ") + e.what());
      }
    }
  }
  res["budget_used"] = budget.used();
  return res;
}

json run_cohomology(const json& cfg, long budget_limit) {
  StepBudget budget(budget_limit);
  const auto& alg = require(cfg, "algebra");
  const std::string type = require(alg, "type").get<std::string>();
  json res;
  res["algebra"] = type;

  if (type == "witt") {
    std::vector<int> windows;
    for (const auto& w : require(alg, "windows")) windows.push_back(w.get<int>());
    if (windows.empty()) throw ConfigError("witt cohomology needs at least one window");
    for (int N : windows)
      if (N < 1 || N > 16) throw ConfigError("witt windows must lie in [1, 16]");
    std::vector<int> weights = {0};
    if (cfg.contains("weights")) {
      weights.clear();
      for (const auto& w : cfg.at("weights")) weights.push_back(w.get<int>());
    }
    std::vector<std::string> kinds = {"trivial"};
    if (cfg.contains("coefficients")) {
      kinds.clear();
      for (const auto& k : cfg.at("coefficients")) kinds.push_back(k.get<std::string>());
    }
    json entries = json::array();
    // stabilization over consecutive windows per (weight, kind)
    std::map<std::pair<int, std::string>, std::vector<int>> dims;
    std::map<std::pair<int, std::string>, std::vector<size_t>> entry_idx;
    for (int N : windows) {
      const auto W = witt_window(N);
      if (cfg.value("h1", true)) {
        const auto h1 = ce_h1_trivial(W);
        entries.push_back({{"window", N}, {"coefficients", "trivial"}, {"H1", h1.dim_h2}});
      }
      for (const auto& kindname : kinds) {
        const CoeffKind kind =
            kindname == "adjoint" ? CoeffKind::Adjoint : CoeffKind::Trivial;
        for (int w : weights) {
          json e;
          try {
            const auto rep = ce_h2(W, w, kind, ClosurePolicy::Strict);
            e = cohomology_json(rep);
            dims[{w, kindname}].push_back(rep.dim_h2);
            entry_idx[{w, kindname}].push_back(entries.size());
          } catch (const WindowClosureError& err) {
            e["weight"] = w;
            e["coefficients"] = kindname;
            e["error"] = "window-closure";
            e["offending_triple"] = err.triple;
          }
          e["window"] = N;
          if (kind == CoeffKind::Adjoint) e["note"] = "consistency check";
          entries.push_back(std::move(e));
        }
      }
    }
    json stab = json::object();
    for (const auto& [key, ds] : dims) {
      const auto& [w, kindname] = key;
      bool stable = ds.size() >= 2;
      for (size_t i = 1; i < ds.size(); ++i) stable = stable && ds[i] == ds[i - 1];
      for (size_t idx : entry_idx[key]) entries[idx]["stabilized"] = stable;
      json s;
      s["dims"] = ds;
      s["stabilized"] = stable;
      if (stable) s["value"] = ds.back();
      stab["w" + std::to_string(w) + "_" + kindname] = std::move(s);
    }
    res["entries"] = std::move(entries);
    res["stabilization"] = std::move(stab);
  } else {
    // curve pipeline: pole-order-truncated windows with the trivial grading
    std::vector<int> truncations = {5, 6};
    if (alg.contains("truncations")) {
      truncations.clear();
      for (const auto& t : alg.at("truncations")) truncations.push_back(t.get<int>());
    }
    for (int t : truncations)
      if (t < 2 || t > 10) throw ConfigError("truncations must lie in [2, 10]");
    const auto curve = build_curve(alg, budget);
    if (!curve.fiber) throw ConfigError("cohomology pipeline needs a ring over Q");
    const auto p = windowed_h2_of_ring(*curve.fiber, truncations, budget);
    res = pipeline_h2_json(p);
    res["algebra"] = type;
    res["ring"] = curve.fiber->text();
  }
  res["budget_used"] = budget.used();
  return res;
}

namespace {

json example_scaled_bracket(const json& cfg, StepBudget& budget) {
  (void)budget;
  const std::vector<std::string> labels{"h", "e", "f"};
  FiberTable sl2;
  sl2[{0, 1}] = {{1, Rational(2)}};
  sl2[{0, 2}] = {{2, Rational(-2)}};
  sl2[{1, 2}] = {{0, Rational(1)}};
  const UniPoly tm1 = UniPoly::t() - UniPoly(1);
  const auto fam = FreeBasisFamily::scaled_bracket(labels, sl2, tm1, Rational(0));

  json res;
  res["family"] = "bracket (t-1)[,] on sl2 over Q[t]";
  res["fiber_at_1_abelian"] = fam.fiber_table(Rational(1)).empty();
  res["fiber_at_0_equals_negated_table"] =
      tables_equal(fam.fiber_table(Rational(0)), negate_table(sl2));
  res["rescaling_iso_verified"] = diagonal_map_is_bracket_hom(
      sl2, fam.fiber_table(Rational(0)), {Rational(-1), Rational(-1), Rational(-1)});

  const DeformationFamily def{fam, Rational(0)};
  const auto naive = product_type_check(def, sl2);
  const auto fixed = product_type_check(def, negate_table(sl2));
  res["product_type"] = {
      {"naive_fiber", {{"is_product_type", naive.is_product_type}, {"witness", naive.witness}}},
      {"negated_fiber", {{"is_product_type", fixed.is_product_type}}}};

  std::vector<Rational> pts{Rational(0), Rational(1), Rational(2), Rational(-1), Rational(1, 2)};
  if (cfg.contains("points")) {
    pts.clear();
    for (const auto& p : cfg.at("points")) pts.push_back(parse_rational(p, "points"));
  }
  const auto cbc = cohomology_base_change_check(fam, pts);
  json fibers = json::array();
  for (const auto& f : cbc.fibers)
    fibers.push_back({{"t0", f.t0.str()}, {"H2", f.fiber_h2}, {"agrees", f.agrees}});
  res["cohomology_base_change"] = {{"generic_H2", cbc.generic_h2},
                                   {"fibers", std::move(fibers)},
                                   {"all_agree", cbc.all_agree}};
  res["fiber_table_at_0"] = table_json(fam.fiber_table(Rational(0)), labels);
  return res;
}

json example_cusp_degeneration(const json& cfg, StepBudget& budget) {
  const int bound = cfg.value("degree_bound", 4);
  if (bound < 2 || bound > 8) throw ConfigError("degree_bound must lie in [2, 8]");
  const auto fam = weierstrass_family(UniPoly::t(), -UniPoly::t(), UniPoly(), &budget);
  json res;
  res["family"] = "weierstrass (t, -t, 0)";
  res["discriminant"] = discriminant(fam).str();

  std::vector<Rational> pts{Rational(1), Rational(2), Rational(0)};
  if (cfg.contains("points")) {
    pts.clear();
    for (const auto& p : cfg.at("points")) pts.push_back(parse_rational(p, "points"));
  }
  json bc = json::array();
  for (const auto& t0 : pts) bc.push_back(base_change_json(base_change_check(fam.ring, t0, bound, &budget)));
  res["base_change"] = std::move(bc);

  // smooth picture: the two-punctured line carries the two-sided window
  {
    const auto ring = laurent_ring(&budget);
    const auto basis = derivation_basis(ring, bound, &budget);
    json smooth = witt_compare_json(basis, *canonical_euler(ring));
    smooth["ring"] = ring.text();
    smooth["dimension"] = basis.dim();
    res["smooth_picture"] = std::move(smooth);
  }
  // cusp picture: one-sided window through the normalization, l(-1) missing
  {
    const auto phi = normalize_cuspidal(&budget);
    const auto basis = derivation_basis(phi.source(), bound, &budget);
    std::vector<Derivation<Rational>> lifted;
    for (const auto& d : basis.basis) lifted.push_back(lift_derivation(phi, d));
    const auto line = phi.target();
    const Derivation<Rational> euler = *canonical_euler(line);
    DerivationBasis<Rational> lb{line, 2 * bound - 1, lifted, false};
    json cusp = witt_compare_json(lb, euler);
    cusp["ring"] = phi.source().text();
    cusp["dimension"] = basis.dim();
    bool has_minus1 = false, has_plus1 = false;
    for (int w : cusp["weights"]) {
      has_minus1 = has_minus1 || w == -1;
      has_plus1 = has_plus1 || w == 1;
    }
    cusp["missing_ell_minus_1"] = !has_minus1;
    cusp["has_ell_plus_1"] = has_plus1;
    res["cusp_picture"] = std::move(cusp);
  }
  return res;
}

json example_fs_elliptic(const json& cfg, StepBudget& budget) {
  const int bound = cfg.value("degree_bound", 4);
  if (bound < 3 || bound > 8) throw ConfigError("degree_bound must lie in [3, 8]");
  const Rational smooth_t0 =
      cfg.contains("smooth_t0") ? parse_rational(cfg.at("smooth_t0"), "smooth_t0") : Rational(2);
  const auto fam = weierstrass_family(UniPoly::t(), -UniPoly::t(), UniPoly(), &budget);
  if (discriminant(fam).eval(smooth_t0).is_zero())
    throw ConfigError("smooth_t0 must avoid the discriminant locus");

  json res;
  res["family"] = "weierstrass (t, -t, 0)";
  const auto fam_basis = derivation_basis(fam.ring, bound, &budget);
  res["family_module"] = {{"dimension", fam_basis.dim()},
                          {"freeness", freeness_probe(fam_basis).principal}};

  // generic smooth fiber: solved bracket table vs the witt window table
  {
    const auto fiber = fiber_ring(fam.ring, smooth_t0, &budget);
    const auto basis = derivation_basis(fiber, bound, &budget);
    const auto wa = from_derivations(basis.basis, std::vector<int>(basis.dim(), 0));
    const int N = (basis.dim() - 1) / 2;
    json g;
    g["t0"] = smooth_t0.str();
    g["dimension"] = basis.dim();
    g["bracket_table"] = gla_table_json(wa.algebra);
    g["undefined_pairs"] = wa.undefined_pairs;
    bool equals_witt = false;
    if (2 * N + 1 == basis.dim()) {
      const auto witt = witt_window(N);
      equals_witt = true;
      for (int i = 0; i < basis.dim() && equals_witt; ++i)
        for (int j = i + 1; j < basis.dim(); ++j) {
          const bool da = wa.algebra.defined(i, j), db = witt.defined(i, j);
          if (da != db || (da && wa.algebra.bracket(i, j) != witt.bracket(i, j))) {
            equals_witt = false;
            break;
          }
        }
    }
    g["equals_witt_table_in_solved_basis"] = equals_witt;
    // windowed H2 of the smooth affine fiber, reported as computed; the
    // truncations need headroom before the dimension settles
    PipelineH2 p = windowed_h2_of_ring(fiber, {bound + 4, bound + 5}, budget);
    g["windowed_h2"] = pipeline_h2_json(p);
    res["generic_fiber"] = std::move(g);
  }

  // degenerate fiber at t = 0: cuspidal; one-sided witt window after
  // normalization
  {
    const auto phi = normalize_cuspidal(&budget);
    const auto basis = derivation_basis(phi.source(), bound, &budget);
    std::vector<Derivation<Rational>> lifted;
    for (const auto& d : basis.basis) lifted.push_back(lift_derivation(phi, d));
    DerivationBasis<Rational> lb{phi.target(), 2 * bound - 1, lifted, false};
    json dg = witt_compare_json(lb, *canonical_euler(phi.target()));
    dg["t0"] = "0";
    dg["dimension"] = basis.dim();
    res["degenerate_fiber"] = std::move(dg);
  }

  json bc = json::array();
  for (const auto& t0 : {smooth_t0, Rational(0)})
    bc.push_back(base_change_json(base_change_check(fam.ring, t0, bound, &budget)));
  res["base_change"] = std::move(bc);
  return res;
}

}  // namespace

json run_example(const std::string& name, const json& cfg, long budget_limit) {
  StepBudget budget(budget_limit);
  json res;
  if (name == "scaled-bracket") {
    res = example_scaled_bracket(cfg, budget);
  } else if (name == "cusp-degeneration") {
    res = example_cusp_degeneration(cfg, budget);
  } else if (name == "fs-elliptic") {
    res = example_fs_elliptic(cfg, budget);
  } else {
    throw ConfigError("unknown example '" + name +
                      "' (expected scaled-bracket | fs-elliptic | cusp-degeneration)");
  }
  res["budget_used"] = budget.used();
  return res;
}

json wrap_report(const std::string& subcommand, const json& config_echo, json results,
                 double timing_ms) {
  json rep;
  rep["schema"] = "fiberfield-report/1";
  rep["tool"] = {{"name", "fiberfield"}, {"version", kVersion}};
  rep["subcommand"] = subcommand;
  rep["config"] = config_echo;
  rep["results"] = std::move(results);
  rep["timing_ms"] = timing_ms;
  return rep;
}

}  // namespace fiberfield::cli
