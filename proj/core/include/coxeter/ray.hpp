#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "coxeter/system.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

/// An eventually periodic infinite word prefix.period.period...; a stand-in
/// for a boundary point. Letters are numbered from 1.
struct RaySpec {
  Word prefix;
  Word period;
  std::size_t certified_reduced_up_to = 0;

  Generator letter(std::size_t i) const {
    return i <= prefix.size() ? prefix[i - 1] : period[(i - prefix.size() - 1) % period.size()];
  }
  /// Position within the period of letter i (i > |prefix|).
  std::size_t phase(std::size_t i) const { return (i - prefix.size() - 1) % period.size(); }
};

/// Checks l(w_i) = l(w_{i-1}) + 1 for every prefix up to `horizon` letters.
/// Throws Error{EmptyPeriod}, Error{NotReducedAt} (position = i).
RaySpec make_ray(const CoxeterSystem& system, Word prefix, Word period, std::size_t horizon);

enum class Certification {
  /// x_i was constant over the tail of the horizon; nothing more is claimed.
  HorizonOnly,
  /// (x_i, phase of i) repeated after the last change, past the prefix.
  PhaseRecurrence,
};

const char* to_string(Certification c);

struct TraceStep {
  std::size_t index = 0;
  Element w;  // s_1...s_i
  Element x;  // x_i, with x_i.w_i longest in W_T.w_i
};

struct MembershipCheck {
  std::size_t index = 0;
  bool s0_check = false;  // (s0 x w_i)^-1 in W^{s0}
  bool t0_check = false;  // (t0 s0 x w_i)^-1 in W^{t0}
};

struct TraceReport {
  std::vector<TraceStep> steps;
  /// First index from which x_i no longer changes within the horizon.
  std::size_t candidate_n = 1;
  Certification certification = Certification::HorizonOnly;
  Element x_limit;
  std::vector<MembershipCheck> memberships;

  bool certified() const { return certification == Certification::PhaseRecurrence; }
  bool all_memberships_pass() const;
};

/// Runs x_1 = longest_in_coset(T, s_1).x, then coset_step for every further
/// letter up to `horizon`. Throws Error{NonSphericalSubset},
/// Error{HorizonBeyondCertified}.
TraceReport stabilize(const CoxeterSystem& system, GenSet subset, const RaySpec& ray,
                      std::size_t horizon);

/// Same fold over an arbitrary letter stream (letter(i) for i >= 1). Such
/// rays have no period, so the result is always HorizonOnly. A letter that
/// shortens the word raises Error{NotReducedAt}.
TraceReport stabilize(const CoxeterSystem& system, GenSet subset,
                      const std::function<Generator(std::size_t)>& letter, std::size_t horizon);

/// stabilize, then checks the two descent-class memberships for every
/// i >= candidate_n. Requires hypothesis_check(T, s0).ok with t0 among the
/// witnesses, else Error{HypothesisFailed}.
TraceReport theorem_trace(const CoxeterSystem& system, const RaySpec& ray, GenSet subset,
                          Generator s0, Generator t0, std::size_t horizon);

}  // namespace coxeter
