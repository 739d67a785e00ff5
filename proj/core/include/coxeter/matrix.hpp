#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "coxeter/types.hpp"

namespace coxeter {

/// An entry m(s,t) of a Coxeter matrix: a positive integer or infinity.
class Order {
 public:
  constexpr explicit Order(std::uint32_t value) : value_(value) {}
  static constexpr Order infinity() { return Order(); }

  constexpr bool is_infinite() const { return value_ == 0; }
  constexpr bool is_finite() const { return value_ != 0; }
  /// Precondition: is_finite().
  constexpr std::uint32_t value() const { return value_; }

  /// Infinity compares greater than every finite order.
  constexpr bool at_least(std::uint32_t bound) const {
    return is_infinite() || value_ >= bound;
  }

  friend constexpr bool operator==(Order, Order) = default;

 private:
  constexpr Order() = default;
  std::uint32_t value_ = 0;
};

std::string to_string(Order order);

/// The function m: S x S -> {1, 2, ..., inf}. Always satisfies the three
/// Coxeter conditions; construct through validate_matrix.
class CoxeterMatrix {
 public:
  std::size_t rank() const { return rank_; }
  Order order(Generator s, Generator t) const { return entries_[s * rank_ + t]; }

  /// The matrix of the parabolic subsystem on T, generators renumbered
  /// 0..|T|-1 in increasing order of their index here.
  CoxeterMatrix restrict_to(GenSet subset) const;

  std::vector<std::vector<Order>> table() const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  friend CoxeterMatrix validate_matrix(const std::vector<std::vector<Order>>& raw);
  CoxeterMatrix(std::size_t rank, std::vector<Order> entries)
      : rank_(rank), entries_(std::move(entries)) {}

  std::size_t rank_ = 0;
  std::vector<Order> entries_;
};

/// Checks symmetry, unit diagonal and off-diagonal entries >= 2. Throws
/// Error{AsymmetricEntry | DiagonalNotOne | OffDiagonalBelowTwo} naming the
/// first offending pair in row-major order.
CoxeterMatrix validate_matrix(const std::vector<std::vector<Order>>& raw);

namespace presets {

CoxeterMatrix type_a(std::size_t rank);
CoxeterMatrix type_b(std::size_t rank);
CoxeterMatrix type_d(std::size_t rank);
CoxeterMatrix type_h3();
CoxeterMatrix type_h4();
CoxeterMatrix type_f4();
/// Dihedral group of order 2m; Order::infinity() gives the infinite dihedral group.
CoxeterMatrix dihedral(Order m);
/// Affine A2: a triangle with every edge labelled 3.
CoxeterMatrix affine_a2();
/// Generators (s0, t0, t1) with m(s0,t0)=inf, m(s0,t1)=3, m(t0,t1)=2.
CoxeterMatrix g1();

}  // namespace presets

}  // namespace coxeter
