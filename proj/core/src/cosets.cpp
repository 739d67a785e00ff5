#include "coxeter/cosets.hpp"

#include <vector>

#include "coxeter/error.hpp"
#include "coxeter/finite_type.hpp"

namespace coxeter {

CosetLongest longest_in_coset(const CoxeterSystem& system, GenSet subset, const Element& w,
                              std::span<const Generator> ascent_order) {
  if (!is_spherical(system.matrix(), subset))
    throw Error(ErrorKind::NonSphericalSubset, "greedy ascent needs W_T finite");
  std::vector<Generator> scan(ascent_order.begin(), ascent_order.end());
  if (scan.empty()) scan = subset.members();

  Element v = w;
  for (bool climbed = true; climbed;) {
    climbed = false;
    for (Generator t : scan) {
      if (!subset.contains(t)) continue;
      if (system.left_descents(v).contains(t)) continue;
      v = system.multiply(t, v);
      climbed = true;
      break;
    }
  }
  Element x = system.multiply(v, system.inverse(w));
  return CosetLongest{std::move(x), std::move(v), w};
}

StepOutcome coset_step(const CoxeterSystem& system, GenSet subset, const Element& w, Generator s,
                       const Element& x) {
  if (!is_spherical(system.matrix(), subset))
    throw Error(ErrorKind::NonSphericalSubset, "coset step needs W_T finite");
  if (system.right_descents(w).contains(s))
    throw Error(ErrorKind::LengthDecreases, "l(ws) < l(w)");

  const Element xw = system.multiply(x, w);
  if (!system.in_parabolic(x, subset) || xw.length() != x.length() + w.length() ||
      !subset.subset_of(system.left_descents(xw)))
    throw Error(ErrorKind::StaleRepresentative, "x is not the longest-coset correction for w");

  if (!system.right_descents(xw).contains(s)) return StepOutcome{x, std::nullopt};

  // l(xws) = l(xw) - 1: xws = (x with one letter deleted).w
  const Element xws = system.multiply(xw, s);
  const Word& letters = x.canonical;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    Word shorter = letters;
    shorter.erase(shorter.begin() + static_cast<std::ptrdiff_t>(i));
    Element candidate = system.reduce(shorter);
    if (system.multiply(candidate, w) == xws) return StepOutcome{std::move(candidate), i};
  }
  throw std::logic_error("coset_step: no single-letter deletion of x matches xws");
}

bool in_descent_class(const CoxeterSystem& system, const Element& w, GenSet subset) {
  return system.right_descents(w) == subset;
}

DescentCollapse check_descent_collapse(const CoxeterSystem& system, const Element& w,
                                       Generator s0) {
  const CoxeterMatrix& m = system.matrix();
  const GenSet descents = system.right_descents(w);
  bool all_at_least_three = true, some_infinite = false;
  for (Generator t : descents.members()) {
    all_at_least_three = all_at_least_three && m.order(s0, t).at_least(3);
    some_infinite = some_infinite || m.order(s0, t).is_infinite();
  }
  DescentCollapse out;
  out.hypothesis_ok = all_at_least_three && some_infinite;
  out.conclusion_ok = in_descent_class(system, system.multiply(w, s0), GenSet{s0});
  return out;
}

}  // namespace coxeter
