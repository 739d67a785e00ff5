#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "coxeter/matrix.hpp"
#include "coxeter/types.hpp"

namespace coxeter {

using GroupOrder = boost::multiprecision::cpp_int;

/// Irreducible finite Coxeter types, plus a marker for anything infinite.
/// Rank-two diagrams are labelled A2 (m=3), B2 (m=4) or I2(m) for m >= 5.
struct TypeLabel {
  enum class Family { A, B, D, E, F, H, I, Infinite };

  Family family = Family::Infinite;
  std::size_t rank = 0;
  std::uint32_t dihedral_order = 0;  // m, for family I only

  bool is_finite() const { return family != Family::Infinite; }
  /// Group order of the irreducible type. Precondition: is_finite().
  GroupOrder group_order() const;

  friend bool operator==(const TypeLabel&, const TypeLabel&) = default;
};

std::string to_string(const TypeLabel& label);

struct DiagramComponent {
  GenSet members;
  TypeLabel type;
};

struct SphericalVerdict {
  bool spherical = true;
  /// Connected components of the diagram on T (edges: m >= 3), ordered by
  /// smallest member.
  std::vector<DiagramComponent> components;
  /// |W_T|; empty when W_T is infinite.
  std::optional<GroupOrder> order;
};

/// Decides whether W_T is finite by matching each diagram component against
/// the finite-type catalogue.
SphericalVerdict classify(const CoxeterMatrix& matrix, GenSet subset);
bool is_spherical(const CoxeterMatrix& matrix, GenSet subset);

/// All spherical T with no spherical strict superset, in GenSet order.
std::vector<GenSet> maximal_spherical_subsets(const CoxeterMatrix& matrix);

struct HypothesisResult {
  bool ok = false;
  /// Every t0 in T with m(s0,t0) = inf.
  std::vector<Generator> witnesses;
};

/// T maximal spherical, m(s0,t) >= 3 for all t in T, and at least one t0 in
/// T with m(s0,t0) = inf.
HypothesisResult hypothesis_check(const CoxeterMatrix& matrix, GenSet subset, Generator s0);

}  // namespace coxeter
