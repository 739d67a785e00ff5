#include "coxeter/cosets.hpp"
#include "coxeter/error.hpp"
#include "coxeter/oracle.hpp"
#include "coxeter/ray.hpp"
#include "doctest.h"
#include "support/systems.hpp"

using namespace coxeter;
using namespace testsupport;

namespace {

ErrorKind kind_of(auto&& f, std::size_t* position = nullptr) {
  try {
    f();
  } catch (const Error& e) {
    if (position && e.position()) *position = *e.position();
    return e.kind();
  }
  FAIL("expected coxeter::Error");
  return ErrorKind::InvalidLetter;
}

// Every step's x_i.w_i against the brute-force coset maximum.
void check_against_oracle(const CoxeterSystem& sys, GenSet t, const TraceReport& report,
                          std::size_t upto) {
  for (std::size_t i = 1; i <= upto && i <= report.steps.size(); ++i) {
    const auto& step = report.steps[i - 1];
    CAPTURE(i);
    CHECK(step.index == i);
    CHECK(sys.multiply(step.x, step.w) == longest_in_coset_oracle(sys, t, step.w));
    CHECK(step.x == longest_in_coset(sys, t, step.w).x);
  }
}

}  // namespace

TEST_CASE("make_ray") {
  const CoxeterSystem g1(presets::g1());
  const RaySpec ray = make_ray(g1, {}, {t0, s0}, 50);
  CHECK(ray.certified_reduced_up_to == 50);
  CHECK(ray.letter(1) == t0);
  CHECK(ray.letter(2) == s0);
  CHECK(ray.letter(51) == t0);

  const CoxeterSystem a2(presets::type_a(2));
  std::size_t at = 0;
  CHECK(kind_of([&] { make_ray(a2, {}, {a, b}, 50); }, &at) == ErrorKind::NotReducedAt);
  CHECK(at == 4);
  CHECK(kind_of([&] { make_ray(g1, {t1}, {t1}, 10); }, &at) == ErrorKind::NotReducedAt);
  CHECK(at == 2);
  CHECK(kind_of([&] { make_ray(g1, {t0}, {}, 10); }) == ErrorKind::EmptyPeriod);
}

TEST_CASE("stabilize: G1 ray (t0 s0)^inf with T = {t0, t1}") {
  const CoxeterSystem g1(presets::g1());
  const GenSet t{t0, t1};
  const TraceReport report = stabilize(g1, t, make_ray(g1, {}, {t0, s0}, 50), 50);
  REQUIRE(report.steps.size() == 50);
  check_against_oracle(g1, t, report, 10);
  CHECK(report.x_limit == g1.generator(t1));
  CHECK(report.candidate_n <= 2);
  CHECK(report.certification == Certification::PhaseRecurrence);
  for (std::size_t i = report.candidate_n; i <= 50; ++i) CHECK(report.steps[i - 1].x == report.x_limit);
}

TEST_CASE("stabilize with empty T") {
  const CoxeterSystem g1(presets::g1());
  const TraceReport report = stabilize(g1, GenSet{}, make_ray(g1, {t1}, {s0, t0}, 20), 20);
  CHECK(report.x_limit.is_identity());
  CHECK(report.candidate_n == 1);
  CHECK(report.certified());
}

TEST_CASE("stabilize with T = {s0, t1} along (t0 s0)^inf") {
  const CoxeterSystem g1(presets::g1());
  const GenSet t{s0, t1};
  const TraceReport report = stabilize(g1, t, make_ray(g1, {}, {t0, s0}, 50), 50);
  check_against_oracle(g1, t, report, 50);
  for (std::size_t i = 1; i < report.steps.size(); ++i)
    CHECK(report.steps[i].x.length() <= report.steps[i - 1].x.length());
}

TEST_CASE("a trace where the correction shrinks") {
  // w_1 = t1 gives x_1 = t0; w_2 = t1 t0 lies in W_T, so x_2 = e.
  const CoxeterSystem g1(presets::g1());
  const GenSet t{t0, t1};
  const TraceReport report = stabilize(g1, t, make_ray(g1, {t1, t0}, {s0, t0}, 30), 30);
  check_against_oracle(g1, t, report, 30);
  CHECK(report.steps[0].x == g1.generator(t0));
  CHECK(report.steps[1].x.is_identity());
  CHECK(report.candidate_n == 2);
  CHECK(report.x_limit.is_identity());
  CHECK(report.certified());
}

TEST_CASE("stabilize on tilde-A2 keeps lengths non-increasing") {
  const CoxeterSystem sys(presets::affine_a2());
  // (a b c)^inf is a reduced ray in affine A2
  const RaySpec ray = make_ray(sys, {}, {a, b, c}, 40);
  for (GenSet t : {GenSet{a, b}, GenSet{b, c}, GenSet{a, c}, GenSet{a}}) {
    const TraceReport report = stabilize(sys, t, ray, 40);
    check_against_oracle(sys, t, report, 12);
    for (std::size_t i = 1; i < report.steps.size(); ++i)
      CHECK(report.steps[i].x.length() <= report.steps[i - 1].x.length());
    for (std::size_t i = report.candidate_n; i <= 40; ++i) CHECK(report.steps[i - 1].x == report.x_limit);
  }
}

TEST_CASE("stabilize preconditions") {
  const CoxeterSystem g1(presets::g1());
  const RaySpec ray = make_ray(g1, {}, {t0, s0}, 10);
  CHECK(kind_of([&] { stabilize(g1, GenSet{t0, t1}, ray, 11); }) == ErrorKind::HorizonBeyondCertified);
  CHECK(kind_of([&] { stabilize(g1, GenSet{s0, t0}, ray, 10); }) == ErrorKind::NonSphericalSubset);
}

TEST_CASE("letter streams are only certified to the horizon") {
  const CoxeterSystem g1(presets::g1());
  auto alternating = [](std::size_t i) { return i % 2 ? t0 : s0; };
  const TraceReport report = stabilize(g1, GenSet{t0, t1}, alternating, 30);
  CHECK(report.certification == Certification::HorizonOnly);
  CHECK(report.x_limit == g1.generator(t1));

  std::size_t at = 0;
  auto stutter = [](std::size_t i) { return i < 3 ? t0 : s0; };
  CHECK(kind_of([&] { stabilize(g1, GenSet{t0, t1}, stutter, 10); }, &at) == ErrorKind::NotReducedAt);
  CHECK(at == 2);
}

TEST_CASE("theorem_trace: G1") {
  const CoxeterSystem g1(presets::g1());
  const GenSet t{t0, t1};
  const TraceReport report = theorem_trace(g1, make_ray(g1, {}, {t0, s0}, 50), t, s0, t0, 50);
  CHECK(report.certified());
  CHECK(report.x_limit == g1.generator(t1));
  CHECK(report.memberships.size() == 50 - report.candidate_n + 1);
  CHECK(report.all_memberships_pass());

  // S((x w_i)^-1) = T exactly; the memberships are recomputed directly for i <= 10
  for (std::size_t i = report.candidate_n; i <= 50; ++i) {
    const Element xw = g1.multiply(report.x_limit, report.steps[i - 1].w);
    CHECK(t.subset_of(g1.left_descents(xw)));
    CHECK(g1.right_descents(g1.inverse(xw)) == t);
    if (i <= 10) {
      const Element u = g1.inverse(g1.multiply(g1.multiply(s0, report.x_limit), report.steps[i - 1].w));
      CHECK(g1.right_descents(u) == GenSet{s0});
      const Element v = g1.inverse(g1.multiply(g1.multiply(t0, g1.multiply(s0, report.x_limit)),
                                              report.steps[i - 1].w));
      CHECK(g1.right_descents(v) == GenSet{t0});
    }
  }
}

TEST_CASE("theorem_trace requires the hypothesis") {
  const CoxeterSystem g1(presets::g1());
  const RaySpec ray = make_ray(g1, {}, {t0, s0}, 20);
  CHECK(kind_of([&] { theorem_trace(g1, ray, GenSet{s0, t1}, t0, s0, 20); }) ==
        ErrorKind::HypothesisFailed);
  // t1 is not a witness: m(s0,t1) = 3
  CHECK(kind_of([&] { theorem_trace(g1, ray, GenSet{t0, t1}, s0, t1, 20); }) ==
        ErrorKind::HypothesisFailed);
  std::size_t at = 0;
  CHECK(kind_of([&] { theorem_trace(g1, make_ray(g1, {t0}, {t0}, 5), GenSet{t0, t1}, s0, t0, 5); },
                &at) == ErrorKind::NotReducedAt);
  CHECK(at == 2);
}
