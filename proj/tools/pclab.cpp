#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pclab/acceptance.hpp"
#include "pclab/boundary.hpp"
#include "pclab/convex.hpp"
#include "pclab/divisor.hpp"
#include "pclab/domain.hpp"
#include "pclab/errors.hpp"
#include "pclab/levi.hpp"
#include "pclab/minkowski.hpp"
#include "pclab/multitype.hpp"
#include "pclab/packing.hpp"
#include "pclab/polydisc.hpp"
#include "pclab/report.hpp"

namespace {

using namespace pclab;
using nlohmann::json;

Domain load_domain(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open domain spec " + path);
  json spec;
  try {
    in >> spec;
  } catch (const json::exception& e) {
    throw InputError("domain spec " + path + ": " + e.what());
  }
  return Domain::from_json(spec);
}

// Point syntax: comma-separated coordinates, each "re" or "re:im".
Complex parse_complex(const std::string& token) {
  std::size_t colon = token.find(':');
  try {
    std::size_t used = 0;
    const std::string re_part = token.substr(0, colon);
    const double re = std::stod(re_part, &used);
    if (used != re_part.size()) throw InputError("trailing characters in '" + token + "'");
    double im = 0.0;
    if (colon != std::string::npos) {
      const std::string im_part = token.substr(colon + 1);
      im = std::stod(im_part, &used);
      if (used != im_part.size()) throw InputError("trailing characters in '" + token + "'");
    }
    return Complex(re, im);
  } catch (const std::logic_error&) {
    throw InputError("cannot parse coordinate '" + token + "'");
  }
}

std::vector<Complex> parse_complex_list(const std::string& text) {
  std::vector<Complex> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) out.push_back(parse_complex(token));
  return out;
}

CVec parse_point(const std::string& text, int n) {
  CVec p = parse_complex_list(text);
  if (int(p.size()) != n) {
    throw InputError("point has " + std::to_string(p.size()) + " coordinates, the domain needs " +
                     std::to_string(n));
  }
  return p;
}

CVec parse_boundary_point(const Domain& d, const std::string& text) {
  CVec p = parse_point(text, d.dimension());
  const double r = d.rho(p);
  if (std::abs(r) > 1e-6) {
    throw InputError("point is off the boundary, rho = " + fmt17(r));
  }
  return p;
}

Weight parse_weight(const std::string& text) {
  Weight w;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stoi(token, &used));
      if (used != token.size()) throw InputError("trailing characters in '" + token + "'");
    } catch (const std::logic_error&) {
      throw InputError("cannot parse weight entry '" + token + "'");
    }
  }
  if (w.empty()) throw InputError("empty weight");
  return w;
}

void point_columns(std::vector<std::string>& header, int n) {
  for (int j = 1; j <= n; ++j) {
    header.push_back("re" + std::to_string(j));
    header.push_back("im" + std::to_string(j));
  }
}

void point_values(std::vector<double>& row, const CVec& p) {
  for (const Complex& c : p) {
    row.push_back(c.real());
    row.push_back(c.imag());
  }
}

void emit_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open report file " + path);
  out << j.dump(2) << "\n";
}

void emit_csv(const std::string& path, const CsvWriter& csv) {
  if (!path.empty()) csv.write(path);
}

// Options shared by every subcommand that writes reports.
struct OutputOpts {
  std::string csv_path;
  std::string json_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& out) {
  cmd->add_option("--csv", out.csv_path, "write a CSV table to this path");
  cmd->add_option("--json", out.json_path, "write a JSON report to this path");
}

int run_classify(const std::string& domain_path, int res, double tol_rel, std::uint64_t seed,
                 const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  const double tol = default_weak_tol(d, tol_rel, seed);
  const WeakSetSample ws = weak_set_sample(d, res, tol, seed);

  std::vector<std::string> header = {"index"};
  point_columns(header, d.dimension());
  header.push_back("levi_det");
  header.push_back("weak");
  CsvWriter csv(header);
  for (std::size_t i = 0; i < ws.all_points.size(); ++i) {
    std::vector<double> row = {double(i)};
    point_values(row, ws.all_points[i]);
    row.push_back(ws.all_dets[i]);
    row.push_back(std::abs(ws.all_dets[i]) <= ws.tol ? 1.0 : 0.0);
    csv.row(row);
  }
  emit_csv(out.csv_path, csv);

  json rep;
  rep["meta"] = meta_block(seed, {{"tol_rel", tol_rel}, {"tol_abs", ws.tol}});
  rep["domain"] = d.name();
  rep["resolution"] = res;
  rep["total_sampled"] = ws.total_sampled;
  rep["weak_count"] = ws.points.size();
  rep["grid_spacing"] = ws.grid_spacing;
  emit_json(out.json_path, rep);

  std::printf("%s: %zu weak of %d sampled (tol %s)\n", d.name().c_str(), ws.points.size(),
              ws.total_sampled, fmt17(ws.tol).c_str());
  return 0;
}

int run_multitype(const std::string& domain_path, const std::string& point, int kmax, int dirs,
                  bool repair, std::uint64_t seed, const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  MultitypeOptions opt;
  opt.kmax = kmax;
  opt.direction_samples = dirs;
  opt.seed = seed;
  opt.repair_parity = repair;
  const MultitypeResult m = linear_multitype(d, parse_boundary_point(d, point), opt);

  std::string wtext;
  for (std::size_t j = 0; j < m.weight.size(); ++j) {
    if (j) wtext += ",";
    wtext += m.weight[j] == kInfiniteOrder ? "inf" : std::to_string(m.weight[j]);
  }
  json rep;
  rep["meta"] = meta_block(seed, {{"kmax", kmax}, {"direction_samples", dirs}});
  rep["domain"] = d.name();
  rep["weight"] = m.weight;
  rep["infinite"] = m.infinite;
  rep["converged"] = m.converged;
  rep["parity_ok"] = m.parity_ok;
  rep["gamma_valid"] = m.gamma_valid;
  emit_json(out.json_path, rep);

  std::printf("weight (%s) converged %s lattice-valid %s\n", wtext.c_str(),
              m.converged ? "yes" : "no", m.gamma_valid ? "yes" : "no");
  const bool ok = m.gamma_valid && (m.converged || m.infinite);
  return ok ? 0 : 1;
}

int run_family(const std::string& domain_path, int res, const std::string& field_kind,
               const std::string& weight_text, int spf, std::uint64_t seed,
               const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  MultitypeOptions opt;
  opt.seed = seed;

  MultitypeField field;
  if (field_kind == "minimal") {
    field = minimal_field(d, res);
  } else if (field_kind == "computed") {
    field = computed_field(d, res, opt);
  } else if (field_kind == "forced") {
    if (weight_text.empty()) throw InputError("--weight is required for a forced field");
    field = forced_field(d, res, parse_weight(weight_text));
  } else {
    throw InputError("unknown field kind '" + field_kind + "'");
  }
  const GoodFamily fam = build_good_family(d, field, spf);

  // The assigned weights must agree with the multitype actually computed at
  // the sample points, otherwise the family certifies nothing.
  int mismatches = 0, checked = 0;
  const std::size_t stride = std::max<std::size_t>(1, fam.field.points.size() / 12);
  for (std::size_t i = 0; i < fam.field.points.size(); i += stride) {
    const MultitypeResult m = linear_multitype(d, fam.field.points[i], opt);
    ++checked;
    if (m.weight != fam.field.weights[i]) ++mismatches;
  }
  const bool ok = mismatches == 0 && fam.delta0 >= 1e-3;

  json rep;
  rep["meta"] = meta_block(seed, {{"samples_per_face", spf}, {"delta0_floor", 1e-3}});
  rep["domain"] = d.name();
  rep["field"] = field_kind;
  rep["resolution"] = res;
  rep["points"] = fam.field.points.size();
  rep["delta0"] = fam.delta0;
  rep["weights_checked"] = checked;
  rep["weight_mismatches"] = mismatches;
  emit_json(out.json_path, rep);

  std::printf("delta0 %s, weight mismatches %d of %d\n", fmt17(fam.delta0).c_str(), mismatches,
              checked);
  return ok ? 0 : 1;
}

int run_packing(const std::string& domain_path, double delta, const std::string& target,
                int budget, int layers, double gamma0, int res, double tol_rel,
                const std::string& field_kind, int spf, std::uint64_t seed,
                const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  MultitypeOptions opt;
  opt.seed = seed;
  MultitypeField field = field_kind == "computed" ? computed_field(d, res, opt)
                                                  : minimal_field(d, res);
  const GoodFamily fam = build_good_family(d, std::move(field), spf);

  PackingResult pack{{}, {}, 0.0, 0.0};
  if (target == "collar") {
    pack = greedy_pack(d, fam, delta, PackTarget::whole_collar(), budget, seed);
  } else if (target == "weak") {
    const WeakSetSample ws = weak_set_sample(d, res, default_weak_tol(d, tol_rel, seed), seed);
    pack = layered_pack(d, fam, delta, ws, gamma0, layers);
  } else {
    throw InputError("unknown packing target '" + target + "'");
  }
  const bool disjoint = verify_disjoint(pack);
  const TheoremSum weighted = theorem_sum(pack, SumRule::OnePlusTwoMu);
  const TheoremSum plain = theorem_sum(pack, SumRule::PowerN);

  std::vector<std::string> header = {"index"};
  point_columns(header, d.dimension());
  header.push_back("r");
  header.push_back("mu");
  header.push_back("layer");
  CsvWriter csv(header);
  for (std::size_t i = 0; i < pack.points.size(); ++i) {
    std::vector<double> row = {double(i)};
    point_values(row, pack.points[i].a);
    row.push_back(pack.points[i].r);
    row.push_back(pack.points[i].mu);
    row.push_back(double(pack.points[i].layer));
    csv.row(row);
  }
  emit_csv(out.csv_path, csv);

  json rep;
  rep["meta"] = meta_block(seed, {{"tol_rel", tol_rel}});
  rep["domain"] = d.name();
  rep["target"] = target;
  rep["delta"] = delta;
  rep["delta0"] = fam.delta0;
  rep["nu"] = pack.nu;
  rep["points"] = pack.points.size();
  rep["disjoint"] = disjoint;
  rep["sum_weighted"] = weighted.total;
  rep["sum_power_n"] = plain.total;
  emit_json(out.json_path, rep);

  std::printf("packed %zu points, disjoint %s, weighted sum %s\n", pack.points.size(),
              disjoint ? "yes" : "no", fmt17(weighted.total).c_str());
  return disjoint ? 0 : 1;
}

int run_dim(const std::string& domain_path, int res, double tol_rel, double eps_max,
            double eps_min, int rungs, double shift, std::uint64_t seed, const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  const WeakSetSample ws = weak_set_sample(d, res, default_weak_tol(d, tol_rel, seed), seed);
  if (ws.points.empty()) throw NumericError("no weak points sampled, nothing to measure");
  const BoxCountReport rep = dim_estimate(embed_complex(ws.points), eps_max, eps_min, rungs, shift);

  CsvWriter csv({"eps", "boxes"});
  for (std::size_t i = 0; i < rep.eps.size(); ++i) {
    csv.row({rep.eps[i], double(rep.counts[i])});
  }
  emit_csv(out.csv_path, csv);

  json jrep;
  jrep["meta"] = meta_block(seed, {{"tol_rel", tol_rel}});
  jrep["domain"] = d.name();
  jrep["weak_count"] = ws.points.size();
  jrep["dimension"] = rep.dimension;
  jrep["fit_count"] = rep.fit_count;
  jrep["residual"] = rep.residual;
  jrep["pitch"] = rep.pitch;
  emit_json(out.json_path, jrep);

  std::printf("weak set dimension %s from %d rungs\n", fmt17(rep.dimension).c_str(),
              rep.fit_count);
  return 0;
}

int run_slice(const std::string& domain_path, const std::string& alpha_text, int direction,
              const std::string& offsets_text, double window, int res, double tol_rel,
              std::uint64_t seed, const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  const CVec alpha = parse_boundary_point(d, alpha_text);
  const std::vector<Complex> offsets = parse_complex_list(offsets_text);
  const double tol = default_weak_tol(d, tol_rel, seed);
  const SliceResult slice = slice_weak_set(d, alpha, direction, offsets, window, res, tol);

  double dimension = 0.0;
  if (!slice.coords.empty()) {
    dimension = dim_estimate(slice.coords, 0.8 * window, 0.1 * window, 6).dimension;
  }
  const double beta = strong_beta(dimension);

  CsvWriter csv({"s", "t"});
  for (const RVec& c : slice.coords) csv.row({c[0], c[1]});
  emit_csv(out.csv_path, csv);

  json rep;
  rep["meta"] = meta_block(seed, {{"tol_rel", tol_rel}, {"tol_abs", tol}});
  rep["domain"] = d.name();
  rep["direction"] = direction;
  rep["window"] = window;
  rep["attempted"] = slice.attempted;
  rep["failures"] = slice.failures;
  rep["weak_count"] = slice.coords.size();
  rep["dimension"] = dimension;
  rep["beta"] = beta;
  emit_json(out.json_path, rep);

  std::printf("slice weak points %zu of %d, dimension %s, beta %s\n", slice.coords.size(),
              slice.attempted, fmt17(dimension).c_str(), fmt17(beta).c_str());
  return 0;
}

int run_divisor(const std::string& domain_path, const std::string& coeffs_text, double delta,
                int budget, double radius, int res, int spf, std::uint64_t seed,
                const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  const DivisorGraph x = make_graph(parse_complex_list(coeffs_text));

  const ProjectionAreas areas = graph_areas(x, radius);
  const double surface = graph_surface_area(x, radius);
  const double split_err = std::abs(surface - areas.total) / areas.total;
  const WirtingerReport wr = wirtinger_check(x);
  const GoodFamily fam = build_good_family(d, minimal_field(d, res), spf);
  const DivisorSumReport sum = divisor_sum_check(d, fam, delta, x, budget, seed);
  const bool ok = wr.ok && sum.ok && split_err <= 1e-4;

  CsvWriter csv({"a1", "a2", "total", "surface", "area_floor", "lhs", "budget", "packed"});
  csv.row({areas.a1, areas.a2, areas.total, surface, wr.total, sum.lhs, sum.budget,
           double(sum.packed)});
  emit_csv(out.csv_path, csv);

  json rep;
  rep["meta"] = meta_block(seed, {{"split_rel", 1e-4}, {"budget_slack", 1.05}});
  rep["domain"] = d.name();
  rep["radius"] = radius;
  rep["delta"] = delta;
  rep["projection_areas"] = {{"a1", areas.a1}, {"a2", areas.a2}, {"total", areas.total}};
  rep["surface_area"] = surface;
  rep["split_error"] = split_err;
  rep["area_floor"] = {{"total", wr.total}, {"ok", wr.ok}, {"equality", wr.equality}};
  rep["mass_check"] = {{"lhs", sum.lhs},       {"budget", sum.budget}, {"packed", sum.packed},
                       {"saturated", sum.saturated}, {"ok", sum.ok}};
  emit_json(out.json_path, rep);

  std::printf("graph area %s (split error %s), mass %s within budget %s: %s\n",
              fmt17(surface).c_str(), fmt17(split_err).c_str(), fmt17(sum.lhs).c_str(),
              fmt17(sum.budget).c_str(), ok ? "pass" : "fail");
  return ok ? 0 : 1;
}

int run_convex(const std::string& domain_path, const std::string& check,
               const std::string& point_text, double delta, int factor, double p, int res,
               std::uint64_t seed, const OutputOpts& out) {
  const Domain d = load_domain(domain_path);
  json rep;
  rep["meta"] = meta_block(seed, json::object());
  rep["domain"] = d.name();
  rep["check"] = check;

  if (check == "doubling") {
    const CVec x = parse_point(point_text, d.dimension());
    const bool ok = doubling_check(d, x, delta, factor);
    rep["delta"] = delta;
    rep["factor"] = factor;
    rep["ok"] = ok;
    emit_json(out.json_path, rep);
    std::printf("doubling at factor %d: %s\n", factor, ok ? "yes" : "no");
    return ok ? 0 : 1;
  }
  if (check == "sh") {
    const CVec a = parse_point(point_text, d.dimension());
    bool all = true;
    json grid = json::array();
    for (int k = 0; k < 20; ++k) {
      const double q = 1.15 + 0.15 * k;
      const bool ok = sh_check(d, a, q);
      grid.push_back({{"q", q}, {"ok", ok}});
      all = all && ok;
    }
    all = all && sh_check2(d, a, 4.0, 4.0, 2.0) && sh_check2(d, a, 3.0, 6.0, 2.0) &&
          sh_check2(d, a, 2.0, 2.0, 1.0);
    rep["grid"] = grid;
    rep["ok"] = all;
    emit_json(out.json_path, rep);
    std::printf("norm identities: %s\n", all ? "pass" : "fail");
    return all ? 0 : 1;
  }
  if (check == "cp") {
    const double value = cp_constant(p);
    rep["p"] = p;
    rep["value"] = value;
    emit_json(out.json_path, rep);
    std::printf("series constant at p=%s: %s\n", fmt17(p).c_str(), fmt17(value).c_str());
    return 0;
  }
  if (check == "window") {
    const CVec a = parse_point(point_text, d.dimension());
    const GoodFamily fam = build_good_family(d, minimal_field(d, res), 8);
    const CarlesonWindow w = carleson_window_data(d, fam, a, p);
    rep["p"] = p;
    rep["boundary_area"] = w.boundary_area;
    rep["surrogate_inverse"] = w.surrogate_inverse;
    rep["ratio"] = w.ratio;
    rep["out_of_collar"] = w.out_of_collar;
    emit_json(out.json_path, rep);
    std::printf("window area %s, ratio %s%s\n", fmt17(w.boundary_area).c_str(),
                fmt17(w.ratio).c_str(), w.out_of_collar ? " (out of collar)" : "");
    return 0;
  }
  throw InputError("unknown check '" + check + "'");
}

int run_verify_all(const std::string& domain_path, std::uint64_t seed, const OutputOpts& out) {
  json rep;
  rep["meta"] = meta_block(seed, json::object());
  if (!domain_path.empty()) rep["domain"] = load_domain(domain_path).name();

  const std::vector<CriterionResult> results = run_acceptance(seed);
  bool all = true;
  json items = json::array();
  CsvWriter csv({"id", "pass", "name", "details"});
  for (const CriterionResult& r : results) {
    std::printf("[%s] C%d %s: %s\n", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.details.c_str());
    items.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"details", r.details}});
    csv.row({double(r.id), r.pass ? 1.0 : 0.0}, {r.name, "\"" + r.details + "\""});
    all = all && r.pass;
  }
  rep["criteria"] = items;
  rep["all_pass"] = all;
  emit_json(out.json_path, rep);
  emit_csv(out.csv_path, csv);
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for the boundary geometry of pseudoconvex model domains"};
  app.require_subcommand(1);

  std::string domain_path, point, alpha, offsets, coeffs, field_kind = "minimal";
  std::string target = "collar", check, weight_text;
  int res = 64, kmax = 12, dirs = 256, spf = 8, budget = 200, layers = 8, rungs = 6;
  int direction = 2, factor = 2, slice_res = 9;
  double tol_rel = 1e-8, delta = 0.2, gamma0 = 0.1, eps_max = 0.8, eps_min = 0.2, shift = 0.0;
  double window = 0.5, radius = 1.0, p_exp = 2.0;
  bool repair = false;
  std::uint64_t seed = 0;
  OutputOpts out;

  auto add_domain = [&](CLI::App* cmd) {
    cmd->add_option("--domain", domain_path, "JSON domain spec file")->required();
  };
  auto add_seed = [&](CLI::App* cmd) {
    cmd->add_option("--seed", seed, "seed for every sampled or randomized step")->required();
  };

  CLI::App* classify = app.add_subcommand("classify", "classify sampled boundary points");
  add_domain(classify);
  add_seed(classify);
  classify->add_option("--res", res, "boundary sample resolution");
  classify->add_option("--tol-rel", tol_rel, "weak threshold relative to the detection scale");
  add_output_opts(classify, out);

  CLI::App* multitype = app.add_subcommand("multitype", "linear multitype at a boundary point");
  add_domain(multitype);
  add_seed(multitype);
  multitype->add_option("--point", point, "boundary point re[:im],re[:im],...")->required();
  multitype->add_option("--kmax", kmax, "largest contact order probed");
  multitype->add_option("--dirs", dirs, "tangent direction samples");
  multitype->add_flag("--repair-parity", repair, "round odd tangential orders up");
  add_output_opts(multitype, out);

  CLI::App* family = app.add_subcommand("family", "build and certify a polydisc family");
  add_domain(family);
  add_seed(family);
  family->add_option("--res", res, "boundary field resolution");
  family->add_option("--field", field_kind, "field kind: minimal, computed or forced");
  family->add_option("--weight", weight_text, "weight entries for a forced field, e.g. 1,2");
  family->add_option("--spf", spf, "containment samples per polydisc face");
  add_output_opts(family, out);

  CLI::App* packing = app.add_subcommand("packing", "greedy or layered separated packings");
  add_domain(packing);
  add_seed(packing);
  packing->add_option("--delta", delta, "separation parameter");
  packing->add_option("--target", target, "collar or weak");
  packing->add_option("--budget", budget, "acceptance cap for the collar target");
  packing->add_option("--layers", layers, "layer count for the weak target");
  packing->add_option("--gamma0", gamma0, "first layer depth for the weak target");
  packing->add_option("--res", res, "field and weak-set resolution");
  packing->add_option("--tol-rel", tol_rel, "weak threshold relative to the detection scale");
  packing->add_option("--field", field_kind, "field kind: minimal or computed");
  packing->add_option("--spf", spf, "containment samples per polydisc face");
  add_output_opts(packing, out);

  CLI::App* dim = app.add_subcommand("dim", "box-counting dimension of the sampled weak set");
  add_domain(dim);
  add_seed(dim);
  dim->add_option("--res", res, "boundary sample resolution");
  dim->add_option("--tol-rel", tol_rel, "weak threshold relative to the detection scale");
  dim->add_option("--eps-max", eps_max, "largest box size");
  dim->add_option("--eps-min", eps_min, "smallest box size");
  dim->add_option("--rungs", rungs, "ladder length");
  dim->add_option("--shift", shift, "grid shift fraction");
  add_output_opts(dim, out);

  CLI::App* slice = app.add_subcommand("slice", "weak set of a tangent slice plane");
  add_domain(slice);
  add_seed(slice);
  slice->add_option("--alpha", alpha, "boundary base point")->required();
  slice->add_option("--direction", direction, "tangent direction index, 2-based");
  slice->add_option("--offsets", offsets, "offsets along the remaining tangents");
  slice->add_option("--window", window, "half-width of the slice grid");
  slice->add_option("--res", slice_res, "grid points per slice axis, odd keeps alpha on the grid");
  slice->add_option("--tol-rel", tol_rel, "weak threshold relative to the detection scale");
  add_output_opts(slice, out);

  CLI::App* divisor = app.add_subcommand("divisor", "graph divisor areas and packing mass");
  add_domain(divisor);
  add_seed(divisor);
  divisor->add_option("--coeffs", coeffs, "graph coefficients c0,c1,... (re[:im])")->required();
  divisor->add_option("--delta", delta, "separation parameter for the mass check");
  divisor->add_option("--budget", budget, "packing acceptance cap");
  divisor->add_option("--radius", radius, "chart radius for the area checks");
  divisor->add_option("--res", res, "field resolution");
  divisor->add_option("--spf", spf, "containment samples per polydisc face");
  add_output_opts(divisor, out);

  CLI::App* convex = app.add_subcommand("convex", "anisotropic radius and norm checks");
  add_domain(convex);
  convex->add_option("--check", check, "doubling, sh, cp or window")->required();
  convex->add_option("--point", point, "base point for doubling, sh and window");
  convex->add_option("--delta", delta, "pseudo-ball height for doubling");
  convex->add_option("--factor", factor, "enlargement factor for doubling");
  convex->add_option("--p", p_exp, "exponent for cp and window");
  convex->add_option("--res", res, "field resolution for window");
  convex->add_option("--seed", seed, "echoed into the report meta");
  add_output_opts(convex, out);

  CLI::App* verify = app.add_subcommand("verify-all", "run the full verification suite");
  verify->add_option("--domain", domain_path, "JSON domain spec, validated and echoed");
  add_seed(verify);
  add_output_opts(verify, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(classify)) return run_classify(domain_path, res, tol_rel, seed, out);
    if (app.got_subcommand(multitype))
      return run_multitype(domain_path, point, kmax, dirs, repair, seed, out);
    if (app.got_subcommand(family))
      return run_family(domain_path, res, field_kind, weight_text, spf, seed, out);
    if (app.got_subcommand(packing))
      return run_packing(domain_path, delta, target, budget, layers, gamma0, res, tol_rel,
                         field_kind, spf, seed, out);
    if (app.got_subcommand(dim))
      return run_dim(domain_path, res, tol_rel, eps_max, eps_min, rungs, shift, seed, out);
    if (app.got_subcommand(slice))
      return run_slice(domain_path, alpha, direction, offsets, window, slice_res, tol_rel, seed,
                       out);
    if (app.got_subcommand(divisor))
      return run_divisor(domain_path, coeffs, delta, budget, radius, res, spf, seed, out);
    if (app.got_subcommand(convex))
      return run_convex(domain_path, check, point, delta, factor, p_exp, res, seed, out);
    if (app.got_subcommand(verify)) return run_verify_all(domain_path, seed, out);
  } catch (const InputError& e) {
    std::fprintf(stderr, "input error: %s\n", e.what());
    return 2;
  } catch (const NumericError& e) {
    std::fprintf(stderr, "check failed: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
