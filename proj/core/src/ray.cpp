#include "coxeter/ray.hpp"

#include <algorithm>
#include <map>

#include "coxeter/cosets.hpp"
#include "coxeter/error.hpp"
#include "coxeter/finite_type.hpp"

namespace coxeter {

const char* to_string(Certification c) {
  return c == Certification::PhaseRecurrence ? "PhaseRecurrence" : "HorizonOnly";
}

bool TraceReport::all_memberships_pass() const {
  return std::all_of(memberships.begin(), memberships.end(),
                     [](const MembershipCheck& m) { return m.s0_check && m.t0_check; });
}

RaySpec make_ray(const CoxeterSystem& system, Word prefix, Word period, std::size_t horizon) {
  if (period.empty()) throw Error(ErrorKind::EmptyPeriod, "ray period must be non-empty");
  RaySpec ray{std::move(prefix), std::move(period), 0};
  Element w;
  for (std::size_t i = 1; i <= horizon; ++i) {
    const Generator s = ray.letter(i);
    if (s >= system.rank() || system.right_descents(w).contains(s))
      throw Error(ErrorKind::NotReducedAt,
                  "letter " + std::to_string(i) + " does not lengthen the prefix", std::nullopt, i);
    w = system.multiply(w, s);
  }
  ray.certified_reduced_up_to = horizon;
  return ray;
}

namespace {

TraceReport fold(const CoxeterSystem& system, GenSet subset,
                 const std::function<Generator(std::size_t)>& letter, std::size_t horizon) {
  if (!is_spherical(system.matrix(), subset))
    throw Error(ErrorKind::NonSphericalSubset, "trace needs W_T finite");
  TraceReport report;
  Element w, x;
  for (std::size_t i = 1; i <= horizon; ++i) {
    const Generator s = letter(i);
    if (s >= system.rank() || system.right_descents(w).contains(s))
      throw Error(ErrorKind::NotReducedAt,
                  "letter " + std::to_string(i) + " does not lengthen the prefix", std::nullopt, i);
    if (i == 1) {
      w = system.generator(s);
      x = longest_in_coset(system, subset, w).x;
    } else {
      StepOutcome out = coset_step(system, subset, w, s, x);
      w = system.multiply(w, s);
      if (!out.unchanged()) report.candidate_n = i;
      x = std::move(out.x_next);
    }
    report.steps.push_back(TraceStep{i, w, x});
  }
  report.x_limit = x;
  return report;
}

}  // namespace

TraceReport stabilize(const CoxeterSystem& system, GenSet subset,
                      const std::function<Generator(std::size_t)>& letter, std::size_t horizon) {
  return fold(system, subset, letter, horizon);
}

TraceReport stabilize(const CoxeterSystem& system, GenSet subset, const RaySpec& ray,
                      std::size_t horizon) {
  if (horizon > ray.certified_reduced_up_to)
    throw Error(ErrorKind::HorizonBeyondCertified,
                "horizon " + std::to_string(horizon) + " > certified " +
                    std::to_string(ray.certified_reduced_up_to));
  TraceReport report =
      fold(system, subset, [&](std::size_t i) { return ray.letter(i); }, horizon);

  // Look for a repeated (x_i, phase) pair after the last change and past the prefix.
  std::map<std::size_t, const Element*> seen;
  const std::size_t start = std::max(report.candidate_n, ray.prefix.size() + 1);
  for (std::size_t i = start; i <= horizon; ++i) {
    const Element& xi = report.steps[i - 1].x;
    auto [it, fresh] = seen.emplace(ray.phase(i), &xi);
    if (!fresh && *it->second == xi) {
      report.certification = Certification::PhaseRecurrence;
      break;
    }
  }
  return report;
}

TraceReport theorem_trace(const CoxeterSystem& system, const RaySpec& ray, GenSet subset,
                          Generator s0, Generator t0, std::size_t horizon) {
  const HypothesisResult hyp = hypothesis_check(system.matrix(), subset, s0);
  if (!hyp.ok || std::find(hyp.witnesses.begin(), hyp.witnesses.end(), t0) == hyp.witnesses.end())
    throw Error(ErrorKind::HypothesisFailed,
                "T must be maximal spherical with m(s0,t) >= 3 on T and m(s0,t0) = inf");

  TraceReport report = stabilize(system, subset, ray, horizon);
  const Element s0x = system.multiply(s0, report.x_limit);
  const Element t0s0x = system.multiply(t0, s0x);
  for (std::size_t i = report.candidate_n; i <= horizon; ++i) {
    const Element& wi = report.steps[i - 1].w;
    MembershipCheck check{i};
    check.s0_check =
        in_descent_class(system, system.inverse(system.multiply(s0x, wi)), GenSet{s0});
    check.t0_check =
        in_descent_class(system, system.inverse(system.multiply(t0s0x, wi)), GenSet{t0});
    report.memberships.push_back(check);
  }
  return report;
}

}  // namespace coxeter
