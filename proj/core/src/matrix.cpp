#include "coxeter/matrix.hpp"

#include "coxeter/error.hpp"

namespace coxeter {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::AsymmetricEntry: return "AsymmetricEntry";
    case ErrorKind::DiagonalNotOne: return "DiagonalNotOne";
    case ErrorKind::OffDiagonalBelowTwo: return "OffDiagonalBelowTwo";
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::ClosureBudgetExceeded: return "ClosureBudgetExceeded";
    case ErrorKind::SizeBudgetExceeded: return "SizeBudgetExceeded";
    case ErrorKind::NonSphericalSubset: return "NonSphericalSubset";
    case ErrorKind::NonUniqueMaximum: return "NonUniqueMaximum";
    case ErrorKind::LengthDecreases: return "LengthDecreases";
    case ErrorKind::StaleRepresentative: return "StaleRepresentative";
    case ErrorKind::EmptyPeriod: return "EmptyPeriod";
    case ErrorKind::NotReducedAt: return "NotReducedAt";
    case ErrorKind::HorizonBeyondCertified: return "HorizonBeyondCertified";
    case ErrorKind::HypothesisFailed: return "HypothesisFailed";
  }
  return "Unknown";
}

std::string to_string(Order order) {
  return order.is_infinite() ? std::string("inf") : std::to_string(order.value());
}

CoxeterMatrix validate_matrix(const std::vector<std::vector<Order>>& raw) {
  const std::size_t n = raw.size();
  if (n > kMaxRank)
    throw Error(ErrorKind::RankTooLarge,
                "rank " + std::to_string(n) + " exceeds " + std::to_string(kMaxRank));
  for (std::size_t i = 0; i < n; ++i)
    if (raw[i].size() != n)
      throw Error(ErrorKind::NotSquare, "row " + std::to_string(i) + " has " +
                                            std::to_string(raw[i].size()) + " entries, expected " +
                                            std::to_string(n));

  auto pair_text = [](std::size_t i, std::size_t j) {
    return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };
  std::vector<Order> entries;
  entries.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Order m = raw[i][j];
      if (m != raw[j][i])
        throw Error(ErrorKind::AsymmetricEntry,
                    "m" + pair_text(i, j) + " = " + to_string(m) + " but m" + pair_text(j, i) +
                        " = " + to_string(raw[j][i]),
                    std::pair{i, j});
      if (i == j && m != Order(1))
        throw Error(ErrorKind::DiagonalNotOne,
                    "m" + pair_text(i, j) + " = " + to_string(m) + ", expected 1", std::pair{i, j});
      if (i != j && !m.at_least(2))
        throw Error(ErrorKind::OffDiagonalBelowTwo,
                    "m" + pair_text(i, j) + " = " + to_string(m) + ", expected >= 2",
                    std::pair{i, j});
      entries.push_back(m);
    }
  }
  return CoxeterMatrix(n, std::move(entries));
}

CoxeterMatrix CoxeterMatrix::restrict_to(GenSet subset) const {
  const auto members = subset.members();
  std::vector<std::vector<Order>> raw(members.size(), std::vector<Order>(members.size(), Order(1)));
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j < members.size(); ++j) raw[i][j] = order(members[i], members[j]);
  return validate_matrix(raw);
}

std::vector<std::vector<Order>> CoxeterMatrix::table() const {
  std::vector<std::vector<Order>> out(rank_, std::vector<Order>(rank_, Order(1)));
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      out[i][j] = order(static_cast<Generator>(i), static_cast<Generator>(j));
  return out;
}

namespace presets {
namespace {

// All off-diagonal entries 2, then the listed edges.
CoxeterMatrix from_edges(std::size_t rank,
                         std::initializer_list<std::tuple<std::size_t, std::size_t, Order>> edges) {
  std::vector<std::vector<Order>> raw(rank, std::vector<Order>(rank, Order(2)));
  for (std::size_t i = 0; i < rank; ++i) raw[i][i] = Order(1);
  for (auto [i, j, m] : edges) raw[i][j] = raw[j][i] = m;
  return validate_matrix(raw);
}

std::vector<std::vector<Order>> path(std::size_t rank) {
  std::vector<std::vector<Order>> raw(rank, std::vector<Order>(rank, Order(2)));
  for (std::size_t i = 0; i < rank; ++i) raw[i][i] = Order(1);
  for (std::size_t i = 0; i + 1 < rank; ++i) raw[i][i + 1] = raw[i + 1][i] = Order(3);
  return raw;
}

}  // namespace

CoxeterMatrix type_a(std::size_t rank) { return validate_matrix(path(rank)); }

CoxeterMatrix type_b(std::size_t rank) {
  auto raw = path(rank);
  if (rank >= 2) raw[rank - 2][rank - 1] = raw[rank - 1][rank - 2] = Order(4);
  return validate_matrix(raw);
}

CoxeterMatrix type_d(std::size_t rank) {
  auto raw = path(rank);
  if (rank >= 4) {
    // branch the last node off rank-3 instead of rank-2
    raw[rank - 2][rank - 1] = raw[rank - 1][rank - 2] = Order(2);
    raw[rank - 3][rank - 1] = raw[rank - 1][rank - 3] = Order(3);
  }
  return validate_matrix(raw);
}

CoxeterMatrix type_h3() { return from_edges(3, {{0, 1, Order(5)}, {1, 2, Order(3)}}); }

CoxeterMatrix type_h4() {
  return from_edges(4, {{0, 1, Order(5)}, {1, 2, Order(3)}, {2, 3, Order(3)}});
}

CoxeterMatrix type_f4() {
  return from_edges(4, {{0, 1, Order(3)}, {1, 2, Order(4)}, {2, 3, Order(3)}});
}

CoxeterMatrix dihedral(Order m) { return from_edges(2, {{0, 1, m}}); }

CoxeterMatrix affine_a2() {
  return from_edges(3, {{0, 1, Order(3)}, {1, 2, Order(3)}, {0, 2, Order(3)}});
}

CoxeterMatrix g1() {
  return from_edges(3, {{0, 1, Order::infinity()}, {0, 2, Order(3)}, {1, 2, Order(2)}});
}

}  // namespace presets
}  // namespace coxeter
