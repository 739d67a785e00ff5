#include <algorithm>

#include "coxeter/cosets.hpp"
#include "coxeter/error.hpp"
#include "coxeter/finite_type.hpp"
#include "coxeter/oracle.hpp"
#include "doctest.h"
#include "support/systems.hpp"

using namespace coxeter;
using namespace testsupport;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected coxeter::Error");
  return ErrorKind::InvalidLetter;
}

}  // namespace

TEST_CASE("longest_in_coset: documented examples") {
  const CoxeterSystem g1(presets::g1());
  const Element w = g1.reduce(Word{t1, s0, t0});
  const auto trivial = longest_in_coset(g1, GenSet{}, w);
  CHECK(trivial.x.is_identity());
  CHECK(trivial.v == w);
  CHECK(trivial.base == w);

  const auto r = longest_in_coset(g1, GenSet{t0, t1}, g1.generator(s0));
  CHECK(r.x == g1.reduce(Word{t0, t1}));
  CHECK(r.v == g1.reduce(Word{t0, t1, s0}));
  CHECK(r.v == longest_in_coset_oracle(g1, GenSet{t0, t1}, g1.generator(s0)));

  const auto inside = longest_in_coset(g1, GenSet{t0, t1}, g1.generator(t0));
  CHECK(inside.x == g1.generator(t1));
  CHECK(inside.v == g1.reduce(Word{t1, t0}));
  CHECK(inside.v.canonical == Word{t0, t1});
}

TEST_CASE("longest_in_coset invariants and scan-order independence") {
  for (const auto& ns : test_systems()) {
    CAPTURE(ns.name);
    const CoxeterSystem sys(ns.matrix);
    const Ball ball = enumerate_ball(ns.matrix, 4);
    const std::uint64_t limit = std::uint64_t{1} << sys.rank();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const GenSet t(mask);
      if (!is_spherical(ns.matrix, t)) continue;
      Word order = t.members();
      for (const Element& w : ball.elements()) {
        const auto r = longest_in_coset(sys, t, w);
        CHECK(sys.in_parabolic(r.x, t));
        CHECK(t.subset_of(sys.left_descents(r.v)));
        CHECK(r.v.length() == r.x.length() + w.length());
        CHECK(sys.multiply(r.x, w) == r.v);
        std::sort(order.begin(), order.end());
        do {
          CHECK(longest_in_coset(sys, t, w, order).v == r.v);
        } while (std::next_permutation(order.begin(), order.end()));
      }
    }
  }
}

TEST_CASE("longest_in_coset rejects infinite W_T") {
  const CoxeterSystem g1(presets::g1());
  CHECK(kind_of([&] { longest_in_coset(g1, GenSet{s0, t0}, g1.identity()); }) ==
        ErrorKind::NonSphericalSubset);
}

TEST_CASE("coset_step: documented examples") {
  const CoxeterSystem g1(presets::g1());
  const GenSet t{t0, t1};
  const Element x = g1.reduce(Word{t0, t1});

  const auto kept = coset_step(g1, t, g1.generator(s0), t0, x);
  CHECK(kept.unchanged());
  CHECK(kept.x_next == x);
  CHECK(kept.x_next == longest_in_coset(g1, t, g1.reduce(Word{s0, t0})).x);

  const auto cut = coset_step(g1, t, g1.identity(), t0, x);
  REQUIRE_FALSE(cut.unchanged());
  CHECK(*cut.deleted_position == 0);
  CHECK(cut.x_next == g1.generator(t1));
  CHECK(cut.x_next == longest_in_coset(g1, t, g1.generator(t0)).x);

  const Element w = g1.reduce(Word{t0, s0});
  for (Generator s : {t1, t0}) {
    if (g1.right_descents(w).contains(s)) continue;
    const auto trivial = coset_step(g1, GenSet{}, w, s, g1.identity());
    CHECK(trivial.unchanged());
    CHECK(trivial.x_next.is_identity());
  }
}

TEST_CASE("coset_step errors") {
  const CoxeterSystem g1(presets::g1());
  const GenSet t{t0, t1};
  CHECK(kind_of([&] { coset_step(g1, t, g1.generator(s0), s0, g1.reduce(Word{t0, t1})); }) ==
        ErrorKind::LengthDecreases);
  CHECK(kind_of([&] { coset_step(g1, t, g1.generator(s0), t0, g1.identity()); }) ==
        ErrorKind::StaleRepresentative);
  CHECK(kind_of([&] { coset_step(g1, t, g1.generator(s0), t0, g1.generator(s0)); }) ==
        ErrorKind::StaleRepresentative);
  CHECK(kind_of([&] { coset_step(g1, GenSet{s0, t0}, g1.identity(), t0, g1.identity()); }) ==
        ErrorKind::NonSphericalSubset);
}

TEST_CASE("coset_step agrees with recomputation from scratch") {
  for (const auto& ns : test_systems()) {
    CAPTURE(ns.name);
    const CoxeterSystem sys(ns.matrix);
    const Ball ball = enumerate_ball(ns.matrix, 4);
    const std::uint64_t limit = std::uint64_t{1} << sys.rank();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
      const GenSet t(mask);
      if (!is_spherical(ns.matrix, t)) continue;
      for (const Element& w : ball.elements())
        for (Generator s = 0; s < sys.rank(); ++s) {
          if (sys.right_descents(w).contains(s)) continue;
          const Element x = longest_in_coset_oracle(sys, t, w);
          const Element xs = sys.multiply(x, sys.inverse(w));
          const auto out = coset_step(sys, t, w, s, xs);
          const Element ws = sys.multiply(w, s);
          CHECK(sys.multiply(out.x_next, ws) == longest_in_coset_oracle(sys, t, ws));
          CHECK(out.x_next.length() <= xs.length());
          if (!out.unchanged()) {
            Word cut = xs.canonical;
            cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(*out.deleted_position));
            CHECK(sys.reduce(cut) == out.x_next);
          }
        }
    }
  }
}

TEST_CASE("in_descent_class") {
  const CoxeterSystem a2(presets::type_a(2));
  CHECK(in_descent_class(a2, a2.identity(), GenSet{}));
  CHECK(in_descent_class(a2, a2.reduce(Word{a, b, a}), GenSet{a, b}));
  CHECK_FALSE(in_descent_class(a2, a2.reduce(Word{a, b}), GenSet{a, b}));
  CHECK(in_descent_class(a2, a2.reduce(Word{a, b}), GenSet{b}));
}

TEST_CASE("check_descent_collapse") {
  const CoxeterSystem g1(presets::g1());
  const auto hit = check_descent_collapse(g1, g1.reduce(Word{t0, t1}), s0);
  CHECK(hit.hypothesis_ok);
  CHECK(hit.conclusion_ok);
  CHECK(g1.right_descents(g1.reduce(Word{t0, t1, s0})) == GenSet{s0});

  for (Generator g : {s0, t0, t1}) CHECK_FALSE(check_descent_collapse(g1, g1.identity(), g).hypothesis_ok);

  const CoxeterSystem a2(presets::type_a(2));
  const auto miss = check_descent_collapse(a2, a2.generator(a), b);
  CHECK_FALSE(miss.hypothesis_ok);
  // raw membership still reported: S(ab) = {b}
  CHECK(miss.conclusion_ok);
  CHECK_FALSE(check_descent_collapse(a2, a2.reduce(Word{a, b}), a).conclusion_ok);
}

TEST_CASE("descent collapse holds throughout a G1 ball") {
  const CoxeterSystem g1(presets::g1());
  std::size_t hypotheses = 0;
  const Ball ball = enumerate_ball(g1.matrix(), 7);
  for (const Element& w : ball.elements())
    for (Generator g : {s0, t0, t1}) {
      const auto r = check_descent_collapse(g1, w, g);
      if (!r.hypothesis_ok) continue;
      ++hypotheses;
      CHECK(r.conclusion_ok);
    }
  CHECK(hypotheses > 0);
}
