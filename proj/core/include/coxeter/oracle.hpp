#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "coxeter/matrix.hpp"
#include "coxeter/system.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

struct OracleOptions {
  /// Cap on the total number of reduced words stored across all vertices.
  std::size_t size_budget = 2'000'000;
};

/// The Cayley-graph ball of radius L around the identity, built by
/// breadth-first search without going through CoxeterSystem::reduce.
///
/// Each vertex owns the full table of its reduced words. Multiplying a
/// depth-k vertex by s either lands one level down (some reduced word ends
/// in s; strip it and look the prefix up) or one level up (look the extended
/// word up among the known depth-(k+1) words, or open a new vertex whose
/// table is the braid class of that word).
///
/// Vertices are numbered by (length, ShortLex canonical word), so output is
/// deterministic.
class Ball {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t radius() const { return radius_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Element>& elements() const { return elements_; }
  const Element& element(std::size_t v) const { return elements_[v]; }
  std::size_t length(std::size_t v) const { return elements_[v].length(); }

  /// Vertex reached from v along the edge labelled s, or npos when that
  /// vertex lies outside the ball.
  std::size_t neighbour(std::size_t v, Generator s) const { return edges_[v * rank_ + s]; }

  /// Number of vertices at each length 0..radius.
  std::vector<std::size_t> level_sizes() const;

  std::optional<std::size_t> find(const Element& e) const;
  /// Follows the word's letters from the identity. Empty if the walk leaves the ball.
  std::optional<std::size_t> evaluate(std::span<const Generator> word) const;

  /// True when the last level produced no new vertices, i.e. the ball is the
  /// whole (finite) group.
  bool complete() const { return complete_; }

 private:
  friend Ball enumerate_ball(const CoxeterMatrix&, std::optional<std::size_t>, OracleOptions);

  std::size_t rank_ = 0;
  std::size_t radius_ = 0;
  bool complete_ = false;
  std::vector<Element> elements_;
  std::vector<std::size_t> edges_;
  std::unordered_map<Element, std::size_t> index_;
};

/// Ball of the given radius; with no radius, runs until the group is
/// exhausted (only terminates for finite groups; guarded by the budget).
/// Throws Error{SizeBudgetExceeded}.
Ball enumerate_ball(const CoxeterMatrix& matrix, std::optional<std::size_t> radius,
                    OracleOptions options = {});

/// All elements of W_T, as elements of W. Requires T spherical.
std::vector<Element> parabolic_elements(const CoxeterMatrix& matrix, GenSet subset,
                                        OracleOptions options = {});

/// The coset W_T.w, ShortLex sorted. Throws Error{NonSphericalSubset}.
std::vector<Element> coset_elements(const CoxeterSystem& system, GenSet subset, const Element& w);

/// Maximum-length element of W_T.w by exhaustive listing. Throws
/// Error{NonUniqueMaximum} if two elements tie for the maximum.
Element longest_in_coset_oracle(const CoxeterSystem& system, GenSet subset, const Element& w);

}  // namespace coxeter
