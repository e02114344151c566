// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "polygeom/campaign.hpp"
#include "polygeom/polygeom.hpp"

using namespace polygeom;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double time_limit, const std::function<Result()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Result out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (time_limit > 0.0 && secs >= time_limit) {
    out.ok = false;
    out.detail += " (over the " + std::to_string(static_cast<int>(time_limit)) + " s limit)";
  }
  if (!out.ok) ++failures;
  std::printf("%s  %2d  %-34s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", id, name, secs, out.detail.c_str());
  std::fflush(stdout);
}

std::string counts(const CampaignReport& r) {
  return std::to_string(r.passed) + " passed, " + std::to_string(r.failed) + " failed, " + std::to_string(r.errored) +
         " errored, " + std::to_string(r.hypothesis_violations) + " vacuous";
}

CampaignReport campaign(Property p, int trials, std::uint64_t seed, std::pair<int, int> n, const std::string& kind = "mixed",
                        int jobs = 4) {
  CampaignConfig cfg;
  cfg.property = p;
  cfg.trials = trials;
  cfg.seed = seed;
  cfg.n_range = n;
  cfg.region_kind = kind;
  cfg.round_trip_max_degree = 20;
  return run_campaign(cfg, jobs);
}

bool clean(const CampaignReport& r) { return r.failed == 0 && r.errored == 0 && r.hypothesis_violations == 0; }

}  // namespace

int main() {
  criterion(1, "coincidence counterexample", 1.0, [] {
    const SymmetricMultiaffine P(2, {0.0, 1.0});
    const PointSet w{-1.0, 1.0};
    Result out;
    const auto outside = CircularRegion::exterior(0.0, 1.0, true);
    bool flagged = false;
    try {
      coincidence_report(P, w, outside);
    } catch (const Error& e) {
      flagged = e.kind() == ErrorKind::HypothesisViolated;
    }
    CoincidenceOptions force;
    force.enforce_hypothesis = false;
    bool no_witness = false;
    try {
      coincidence_report(P, w, outside, force);
    } catch (const Error& e) {
      no_witness = e.kind() == ErrorKind::TheoremViolation;
    }
    const Complex inside = coincidence_witness(P, w, CircularRegion::disk(0.0, 1.0, true));
    out.ok = flagged && no_witness && std::abs(inside) <= 1e-10;
    out.detail = std::string("exterior: ") + (flagged ? "hypothesis violation" : "NOT flagged") + ", " +
                 (no_witness ? "no zero in S" : "zero found in S") + "; unit disk witness |z| = " + std::to_string(std::abs(inside));
    return out;
  });

  criterion(2, "multiaffine apolarity identity", 60.0, [] {
    const auto r = campaign(Property::theorem1_identity, 10000, 2, {1, 12});
    return Result{clean(r) && r.passed == 10000, counts(r) + ", tol 1e-10"};
  });

  criterion(3, "coincidence witness existence", 120.0, [] {
    const auto d = campaign(Property::theorem1_convex, 10000, 3, {1, 12}, "disk");
    const auto h = campaign(Property::theorem1_convex, 10000, 4, {1, 12}, "halfplane");
    const auto x = campaign(Property::theorem1_exterior, 10000, 5, {1, 12}, "exterior");
    return Result{clean(d) && clean(h) && clean(x),
                   "disk [" + counts(d) + "] halfplane [" + counts(h) + "] exterior [" + counts(x) + "]"};
  });

  criterion(4, "derivative zeros in the disk", 120.0, [] {
    const auto r = campaign(Property::theorem2, 10000, 6, {3, 15});
    return Result{clean(r), counts(r) + ", mean tol 1e-12, " + std::to_string(r.warnings) + " structure warnings"};
  });

  criterion(5, "kth derivative closed form", 0.0, [] {
    Rng rng(7);
    double worst = 0.0;
    int cases = 0;
    for (int n = 2; n <= 20; ++n)
      for (int k = 1; k <= n - 1; ++k)
        for (int t = 0; t < 10; ++t, ++cases) worst = std::max(worst, kth_derivative_identity(n, k, rng.in_box()));
    char buf[96];
    std::snprintf(buf, sizeof buf, "%d cases, worst residual %.3g (tol 1e-11)", cases, worst);
    return Result{worst <= 1e-11, buf};
  });

  criterion(6, "grace witness", 0.0, [] {
    CampaignConfig cfg;
    cfg.property = Property::grace;
    cfg.seed = 8;
    int ok = 0, bad = 0;
    for (int i = 0; i < 10000; ++i) {
      const json inst = generate_instance(cfg, mix_seed(cfg.seed, static_cast<std::uint64_t>(i)));
      const Polynomial a = json_io::decode_polynomial(inst["a"]), b = json_io::decode_polynomial(inst["b"]);
      const auto S = json_io::decode_region(inst["region"]);
      try {
        const Complex z = grace_witness(a, b, inst["n"].get<int>(), S);
        const bool root = std::abs(eval(b, z)) <= 1e-8 * eval_scale(b, z);
        (root && contains(S, z) ? ok : bad)++;
      } catch (const Error&) {
        ++bad;
      }
    }
    return Result{bad == 0, std::to_string(ok) + " witnesses in S, " + std::to_string(bad) + " missing"};
  });

  criterion(7, "apolarity algebra", 0.0, [] {
    const auto r = campaign(Property::apolarity_identity, 1000, 9, {1, 20});
    return Result{clean(r), counts(r) + ", tol 1e-10 relative"};
  });

  criterion(8, "root finder soundness", 0.0, [] {
    const auto r = campaign(Property::rootfind, 1000, 10, {1, 20});
    return Result{clean(r), counts(r) + ", vieta 1e-8, round trip 1e-7 up to degree 20"};
  });

  criterion(9, "critical points in the root hull", 0.0, [] {
    const auto r = campaign(Property::gauss_lucas, 1000, 11, {2, 15});
    return Result{clean(r), counts(r) + ", tol 1e-7"};
  });

  criterion(10, "determinism across jobs", 0.0, [] {
    int same = 0, total = 0;
    std::string diff;
    for (const auto& [prop, name] : kPropertyNames) {
      CampaignConfig cfg;
      cfg.property = prop;
      cfg.trials = 300;
      cfg.seed = 12;
      if (prop == Property::walsh_classic) cfg.fixtures = {counterexample_fixture()};
      const std::string ref = encode(run_campaign(cfg, 1)).dump();
      for (int jobs : {1, 2, 3, 8}) {
        ++total;
        if (encode(run_campaign(cfg, jobs)).dump() == ref) ++same;
        else diff += " " + std::string(name) + "@" + std::to_string(jobs);
      }
    }
    return Result{same == total, std::to_string(same) + "/" + std::to_string(total) + " reports identical" + diff};
  });

  std::printf("%s\n", failures == 0 ? "all criteria passed" : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
