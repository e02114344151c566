// polygeom: command-line front end for the polygeom library.
//
// Exit codes: 0 success, 1 property failure, 2 invalid input or unmet
// hypothesis, 3 root-finder non-convergence.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polygeom/campaign.hpp"
#include "polygeom/json_io.hpp"
#include "polygeom/polygeom.hpp"
#include "polygeom/svg.hpp"

namespace {

using nlohmann::json;
using namespace polygeom;
using namespace polygeom::json_io;

enum Exit { kOk = 0, kPropertyFailure = 1, kInvalid = 2, kNumerical = 3 };

struct Globals {
  double tol = kMembershipTol;
  std::uint64_t seed = 0;
  std::string json_out;
  std::string svg_out;
  int jobs = 1;
};

void write_json(const Globals& g, const json& doc) {
  const std::string text = with_schema(doc).dump(2) + "\n";
  if (g.json_out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.json_out, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidInput, "cannot write " + g.json_out);
  f << text;
}

void maybe_svg(const Globals& g, const std::vector<LabeledPoints>& sets, const std::vector<CircularRegion>& regions) {
  if (!g.svg_out.empty()) emit_svg(sets, regions, g.svg_out);
}

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonConvergence: return kNumerical;
    case ErrorKind::TheoremViolation: return kPropertyFailure;
    default: return kInvalid;
  }
}

RootOptions root_options(double tol, int max_iter) { return {tol, max_iter, 1e-6}; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Apolarity, coincidence and derivative-zero verification for complex polynomials"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Region membership tolerance (scaled by 1+|z|)");
  app.add_option("--seed", g.seed, "Seed for generated instances and campaigns");
  app.add_option("--json-out", g.json_out, "Write the JSON result here instead of stdout");
  app.add_option("--svg-out", g.svg_out, "Also write an SVG figure of the result");
  app.add_option("--jobs", g.jobs, "Worker threads for campaigns")->check(CLI::PositiveNumber);

  double root_tol = 1e-12;
  int max_iter = 200;

  // roots
  std::string poly_file;
  auto* roots = app.add_subcommand("roots", "All zeros of a polynomial");
  roots->add_option("--poly", poly_file, "Polynomial JSON")->required();
  roots->add_option("--tol", root_tol, "Root convergence tolerance");
  roots->add_option("--max-iter", max_iter, "Maximum Aberth sweeps");

  // apolar
  std::string a_file, b_file;
  int frame = -1;
  auto* apolar = app.add_subcommand("apolar", "Evaluate the apolarity functional A(a, b)");
  apolar->add_option("--a", a_file)->required();
  apolar->add_option("--b", b_file)->required();
  apolar->add_option("--n", frame, "Apolarity frame (formal degree)")->required();

  // grace
  std::string region_file;
  auto* grace = app.add_subcommand("grace", "Zero of b in S for apolar a, b with all zeros of a in S");
  grace->add_option("--a", a_file)->required();
  grace->add_option("--b", b_file)->required();
  grace->add_option("--region", region_file)->required();
  grace->add_option("--n", frame, "Frame; defaults to deg a");

  // coincidence / theorem1
  std::string multiaffine_file, points_file;
  bool classic = false, force = false;
  auto* coincidence = app.add_subcommand("coincidence", "Diagonal point z in S with P(z,...,z) = P(w)");
  coincidence->add_option("--multiaffine", multiaffine_file)->required();
  coincidence->add_option("--points", points_file)->required();
  coincidence->add_option("--region", region_file)->required();
  coincidence->add_flag("--classic", classic, "Use the classical hypothesis (m = n, all w in S)");
  coincidence->add_flag("--force", force, "Solve even when the hypothesis fails");

  auto* theorem1 = app.add_subcommand("theorem1", "Derivative-zero hypothesis, apolarity identity and witness");
  theorem1->add_option("--multiaffine", multiaffine_file)->required();
  theorem1->add_option("--points", points_file)->required();
  theorem1->add_option("--region", region_file)->required();

  // theorem2
  std::string instance_file;
  int k = 1, n_gen = 0;
  double radius = 1.0, outer_distance = 2.0;
  bool generate = false;
  auto* theorem2 = app.add_subcommand("theorem2", "Count k-th derivative zeros in the mean-centered disk");
  theorem2->add_option("--instance", instance_file, "Instance JSON (inner zeros, outer zero, disk)");
  theorem2->add_option("--k", k, "Derivative order");
  theorem2->add_flag("--generate", generate, "Emit a generated instance instead of checking one");
  theorem2->add_option("--n", n_gen, "Degree of the generated polynomial");
  theorem2->add_option("--radius", radius, "Disk radius for generation");
  theorem2->add_option("--outer-distance", outer_distance, "Distance of the outer zero from the center");

  // fuzz
  std::string property_name;
  int trials = 100, n_min = 0, n_max = 0;
  std::string region_kind = "mixed";
  std::vector<std::string> fixture_files;
  bool counterexample = false;
  auto* fuzz = app.add_subcommand("fuzz", "Run a seeded randomized campaign");
  fuzz->add_option("--property", property_name)->required();
  fuzz->add_option("--trials", trials)->check(CLI::PositiveNumber);
  fuzz->add_option("--n-min", n_min);
  fuzz->add_option("--n-max", n_max);
  fuzz->add_option("--region-kind", region_kind, "mixed, disk, halfplane or exterior");
  fuzz->add_option("--fixture", fixture_files, "Instance JSON replacing the first trials");
  fuzz->add_flag("--counterexample", counterexample, "Prepend the built-in coincidence counterexample fixture");
  fuzz->add_option("--root-tol", root_tol, "Root convergence tolerance");

  // replay
  auto* replay = app.add_subcommand("replay", "Re-run one recorded trial");
  replay->add_option("--instance", instance_file, "Instance JSON, or a failure record containing one")->required();
  replay->add_option("--property", property_name)->required();
  replay->add_option("--root-tol", root_tol, "Root convergence tolerance");

  // plot
  std::string plot_file;
  auto* plot = app.add_subcommand("plot", "Render labeled point sets and regions to SVG");
  plot->add_option("--input", plot_file, "{\"sets\":[{\"label\":..,\"points\":[..]}],\"regions\":[..]}")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*roots) {
      const Polynomial p = decode_polynomial(read_file(poly_file));
      try {
        const auto rs = find_roots(p, root_options(root_tol, max_iter));
        write_json(g, encode(rs));
        maybe_svg(g, {{"zeros", rs.roots}}, {});
      } catch (const NonConvergenceError& e) {
        json doc = encode(e.best_effort());
        doc["error"] = e.what();
        write_json(g, doc);
        return kNumerical;
      }
      return kOk;
    }

    if (*apolar) {
      const Polynomial a = decode_polynomial(read_file(a_file));
      const Polynomial b = decode_polynomial(read_file(b_file));
      const Complex value = apolarity_functional(a, b, frame);
      write_json(g, json{{"value", encode(value)}, {"apolar", is_apolar(a, b, frame)}});
      return kOk;
    }

    if (*grace) {
      const Polynomial a = decode_polynomial(read_file(a_file));
      const Polynomial b = decode_polynomial(read_file(b_file));
      const CircularRegion region = decode_region(read_file(region_file));
      GraceOptions opt;
      opt.membership_tol = g.tol;
      try {
        const auto res = grace_report(a, b, frame < 0 ? a.degree() : frame, region, opt);
        write_json(g, json{{"status", "witness"}, {"witness", encode(res.point)}, {"residual", res.residual},
                           {"b_roots", encode(res.candidates)}, {"region", encode(region)}});
        maybe_svg(g, {{"zeros of b", res.candidates.roots}, {"witness", {res.point}}}, {region});
        return kOk;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisViolated && e.kind() != ErrorKind::TheoremViolation) throw;
        const bool hyp = e.kind() == ErrorKind::HypothesisViolated;
        write_json(g, json{{"status", hyp ? "hypothesis_violation" : "theorem_violation"}, {"diagnostic", e.what()}});
        return hyp ? kInvalid : kPropertyFailure;
      }
    }

    if (*coincidence || *theorem1) {
      const auto P = decode_multiaffine(read_file(multiaffine_file));
      const PointSet w = decode_point_file(read_file(points_file));
      const CircularRegion region = decode_region(read_file(region_file));
      CoincidenceOptions opt;
      opt.membership_tol = g.tol;
      opt.classic = *coincidence && classic;
      opt.enforce_hypothesis = !(*coincidence && force);
      json doc{{"region", encode(region)}, {"value", encode(evaluate_multiaffine(P, w))}};
      if (*theorem1 && P.degree() >= 1) doc["apolarity_residual"] = theorem1_apolarity_residual(P, w);
      try {
        const auto res = coincidence_report(P, w, region, opt);
        doc["status"] = "witness";
        doc["witness"] = encode(res.point);
        doc["residual"] = res.residual;
        doc["degenerate"] = res.degenerate;
        doc["hypothesis"] = {{"holds", res.hypothesis.holds}, {"roots", encode_points(res.hypothesis.derivative_roots.roots)},
                             {"diagnostic", res.hypothesis.diagnostic}};
        doc["solutions"] = encode_points(res.candidates.roots);
        write_json(g, doc);
        maybe_svg(g, {{"points w", w}, {"hypothesis zeros", res.hypothesis.derivative_roots.roots}, {"witness", {res.point}}},
                  {region});
        return kOk;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::HypothesisViolated && e.kind() != ErrorKind::TheoremViolation) throw;
        const bool hyp = e.kind() == ErrorKind::HypothesisViolated;
        doc["status"] = hyp ? "hypothesis_violation" : "theorem_violation";
        doc["diagnostic"] = e.what();
        write_json(g, doc);
        maybe_svg(g, {{"points w", w}}, {region});
        return hyp ? kInvalid : kPropertyFailure;
      }
    }

    if (*theorem2) {
      if (generate) {
        const auto inst = generate_theorem2_instance(n_gen, g.seed, radius, outer_distance);
        write_json(g, encode(inst));
        maybe_svg(g, {{"inner zeros", inst.inner_zeros}, {"outer zero", {inst.outer_zero}}},
                  {CircularRegion::disk(inst.disk.center, inst.disk.radius)});
        return kOk;
      }
      if (instance_file.empty()) throw Error(ErrorKind::InvalidInput, "theorem2 needs --instance or --generate");
      const auto inst = decode_theorem2_instance(read_file(instance_file));
      Theorem2Options opt;
      opt.membership_tol = g.tol;
      const auto rep = check_theorem2(inst, k, opt);
      write_json(g, encode(rep));
      maybe_svg(g, {{"zeros of p", inst.all_zeros()}, {"zeros of p^(k)", rep.derivative_roots.roots}},
                {CircularRegion::disk(inst.disk.center, inst.disk.radius)});
      return rep.satisfied ? kOk : kPropertyFailure;
    }

    if (*fuzz) {
      CampaignConfig cfg;
      cfg.property = parse_property(property_name);
      cfg.trials = trials;
      cfg.seed = g.seed;
      if (n_min > 0 || n_max > 0) {
        const auto def = default_n_range(cfg.property);
        cfg.n_range = std::pair{n_min > 0 ? n_min : def.first, n_max > 0 ? n_max : def.second};
      }
      cfg.region_kind = region_kind;
      cfg.tol.membership = g.tol;
      cfg.tol.root = root_tol;
      if (counterexample) cfg.fixtures.push_back(counterexample_fixture());
      for (const auto& f : fixture_files) cfg.fixtures.push_back(read_file(f));
      const auto rep = run_campaign(cfg, g.jobs);
      write_json(g, encode(rep));
      std::cerr << to_string(cfg.property) << ": " << rep.passed << " passed, " << rep.failed << " failed, " << rep.errored
                << " errored in " << rep.wall_time << " s\n";
      if (rep.failed > 0) return kPropertyFailure;
      if (rep.errored > 0) return kNumerical;
      return kOk;
    }

    if (*replay) {
      const Property prop = parse_property(property_name);
      json inst = read_file(instance_file);
      // Accept a failure record from a campaign report as-is.
      if (inst.is_object() && inst.contains("trial_seed") && inst.contains("instance")) inst = inst.at("instance");
      Tolerances tol;
      tol.membership = g.tol;
      tol.root = root_tol;
      const Verdict v = evaluate_instance(prop, inst, tol);
      json doc = encode(v);
      doc["property"] = std::string(to_string(prop));
      doc["tolerances"] = encode(tol);
      write_json(g, doc);
      switch (v.outcome) {
        case Outcome::pass:
        case Outcome::hypothesis_violation: return kOk;
        case Outcome::fail: return kPropertyFailure;
        case Outcome::error: return kNumerical;
      }
    }

    if (*plot) {
      const json in = read_file(plot_file);
      std::vector<LabeledPoints> sets;
      for (const auto& s : in.value("sets", json::array()))
        sets.push_back({s.value("label", std::string{}), decode_points(field(s, "points"))});
      std::vector<CircularRegion> regions;
      for (const auto& r : in.value("regions", json::array())) regions.push_back(decode_region(r));
      if (g.svg_out.empty()) {
        std::cout << render_svg(sets, regions);
      } else {
        emit_svg(sets, regions, g.svg_out);
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "polygeom: " << e.what() << "\n";
    return exit_for(e.kind());
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "polygeom: malformed JSON: " << e.what() << "\n";
    return kInvalid;
  }
  return kOk;
}
