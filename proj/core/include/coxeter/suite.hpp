#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "coxeter/oracle.hpp"
#include "coxeter/system.hpp"

namespace coxeter {

/// Outcome of exhaustively checking one property over a ball.
struct LemmaResult {
  std::string name;
  std::size_t radius = 0;
  std::size_t instances = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // first few, human readable
  double wall_ms = 0.0;

  bool passed() const { return failure_count == 0; }
};

struct SystemReport {
  std::string system;
  std::size_t ball_size = 0;
  std::vector<LemmaResult> lemmas;

  bool passed() const;
};

/// Renders a word with the given generator names ("e" when empty). Falls
/// back to numeric indices if `names` is too short.
std::string format_word(std::span<const Generator> word, std::span<const std::string> names,
                        char separator = '.');

/// One exhaustive check per property. Each uses ball(radius) of the system.
class LemmaChecker {
 public:
  LemmaChecker(const CoxeterSystem& system, std::vector<std::string> names = {});

  /// reduce() agrees with the oracle on every word of length <= radius.
  LemmaResult canonical_form(std::size_t radius) const;
  /// A single braid move or square deletion never changes reduce().
  LemmaResult braid_invariance(std::size_t radius) const;
  /// Every non-reduced word of length <= radius loses two letters i < j
  /// without changing its value.
  LemmaResult deletion(std::size_t radius) const;
  /// l(ws) and l(sw) differ from l(w) by exactly one, at word and oracle level.
  LemmaResult length_parity(std::size_t radius) const;
  /// l(w^-1) = l(w), (w^-1)^-1 = w, and right descents of w are the left
  /// descents of w^-1.
  LemmaResult inverse_laws(std::size_t radius) const;
  /// S(w) is spherical for every w.
  LemmaResult descents_spherical(std::size_t radius) const;
  /// Every w lies in exactly one class W^T, namely T = S(w).
  LemmaResult descent_partition(std::size_t radius) const;
  /// Longest coset elements: uniqueness, left-descent characterisation, length
  /// additivity, greedy = oracle, greedy independent of scan order.
  LemmaResult longest_coset(std::size_t radius) const;
  /// coset_step matches the from-scratch correction for ws, and is either
  /// Unchanged or a single-letter deletion.
  LemmaResult coset_step_agreement(std::size_t radius) const;
  /// Under the m >= 3 / m = inf hypothesis, ws0 has descent set {s0}.
  LemmaResult descent_collapse(std::size_t radius) const;
  /// Spherical subsets with catalogue order <= max_order enumerate to exactly
  /// that many elements; non-spherical ones keep growing up to the radius.
  LemmaResult parabolic_orders(std::size_t radius, std::size_t max_order = 200) const;

  /// All of the above at one radius.
  SystemReport run_all(const std::string& system_name, std::size_t radius) const;

 private:
  const Ball& ball(std::size_t radius) const;
  std::string fmt(const Word& w) const { return format_word(w, names_); }
  std::string fmt(const Element& e) const { return fmt(e.canonical); }

  CoxeterSystem system_;
  std::vector<std::string> names_;
  mutable std::vector<std::pair<std::size_t, Ball>> balls_;
};

}  // namespace coxeter
