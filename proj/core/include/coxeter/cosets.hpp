#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "coxeter/system.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

/// The longest element v of W_T.w together with x = v.w^-1 in W_T.
/// Invariants: x in W_T; l(tv) < l(v) for t in T; l(v) = l(x) + l(w).
struct CosetLongest {
  Element x;
  Element v;
  Element base;
};

/// Greedy ascent from v = w: while some t in T has l(tv) > l(v), replace v by
/// tv and restart the scan. `ascent_order` fixes the scan order over T
/// (default: increasing index). Throws Error{NonSphericalSubset}.
CosetLongest longest_in_coset(const CoxeterSystem& system, GenSet subset, const Element& w,
                              std::span<const Generator> ascent_order = {});

/// Outcome of moving from (T, w) to (T, ws) with l(ws) = l(w) + 1.
struct StepOutcome {
  Element x_next;
  /// Position in x's canonical word whose deletion gives x_next; empty when
  /// x_next = x.
  std::optional<std::size_t> deleted_position;

  bool unchanged() const { return !deleted_position.has_value(); }
};

/// Updates the coset correction x for w to the one for ws. Either xws is
/// already longest in W_T.ws and x is kept, or xws = x'w with x' obtained by
/// deleting one letter of x.
///
/// Throws Error{LengthDecreases} if l(ws) < l(w), Error{StaleRepresentative}
/// if x is not the correction for (T, w), Error{NonSphericalSubset}.
StepOutcome coset_step(const CoxeterSystem& system, GenSet subset, const Element& w, Generator s,
                       const Element& x);

/// w in W^T, i.e. the right descent set of w is exactly T.
bool in_descent_class(const CoxeterSystem& system, const Element& w, GenSet subset);

struct DescentCollapse {
  bool hypothesis_ok = false;
  bool conclusion_ok = false;
};

/// hypothesis: m(s0,t) >= 3 for every right descent t of w, and m(s0,t0) = inf
/// for at least one of them. conclusion: ws0 has right descent set {s0}.
/// The conclusion is evaluated whether or not the hypothesis holds.
DescentCollapse check_descent_collapse(const CoxeterSystem& system, const Element& w, Generator s0);

}  // namespace coxeter
