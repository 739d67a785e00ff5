#pragma once

#include <cstddef>
#include <memory>
#include <span>

#include "coxeter/matrix.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

struct ReduceOptions {
  /// Maximum number of distinct words held in one braid-move closure.
  std::size_t closure_budget = 200'000;
  /// Entries kept in the memo cache before it is flushed. Zero disables caching.
  std::size_t cache_capacity = 1U << 20;
};

/// A Coxeter system (W,S) together with an exact solver for its word problem.
///
/// Reduction works one letter at a time. Given the canonical word u of the
/// prefix read so far and the next letter s, the braid-move closure of u.s is
/// saturated. By the exchange condition u.s is non-reduced iff some word of
/// that closure contains an adjacent equal pair; deleting it gives a reduced
/// word for us. The ShortLex-least word of the final closure is returned.
///
/// Instances are cheap to copy; copies share one memo cache. All member
/// functions are safe to call concurrently.
class CoxeterSystem {
 public:
  explicit CoxeterSystem(CoxeterMatrix matrix, ReduceOptions options = {});

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rank(); }
  const ReduceOptions& options() const { return options_; }

  Element identity() const { return {}; }
  Element generator(Generator s) const;

  /// Throws Error{InvalidLetter} on out-of-range letters and
  /// Error{ClosureBudgetExceeded} when a closure outgrows the budget.
  Element reduce(std::span<const Generator> word) const;
  bool is_reduced(std::span<const Generator> word) const;

  Element multiply(const Element& u, const Element& v) const;
  Element multiply(const Element& u, Generator s) const;
  Element multiply(Generator s, const Element& v) const;
  Element inverse(const Element& w) const;

  /// { s : l(ws) < l(w) }.
  GenSet right_descents(const Element& w) const;
  /// { s : l(sw) < l(w) }.
  GenSet left_descents(const Element& w) const;

  /// Membership in W_T. Every reduced expression of an element uses the same
  /// set of generators, so inspecting the canonical word suffices.
  bool in_parabolic(const Element& w, GenSet subset) const;

  /// Every reduced expression of w (its braid-move class), ShortLex sorted.
  std::vector<Word> reduced_words(const Element& w) const;

  std::size_t cache_size() const;

 private:
  struct Cache;

  void check_letters(std::span<const Generator> word) const;
  std::string step(const std::string& prefix, Generator s) const;
  std::pair<GenSet, GenSet> descents(const Element& w) const;

  CoxeterMatrix matrix_;
  ReduceOptions options_;
  std::vector<std::uint32_t> orders_;  // row-major m(s,t); 0 encodes infinity
  std::shared_ptr<Cache> cache_;
};

}  // namespace coxeter
