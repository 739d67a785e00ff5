#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace coxeter {

enum class ErrorKind {
  // matrix validation
  NotSquare,
  RankTooLarge,
  AsymmetricEntry,
  DiagonalNotOne,
  OffDiagonalBelowTwo,
  // words and elements
  InvalidLetter,
  ClosureBudgetExceeded,
  // enumeration
  SizeBudgetExceeded,
  NonSphericalSubset,
  NonUniqueMaximum,
  // cosets
  LengthDecreases,
  StaleRepresentative,
  // rays
  EmptyPeriod,
  NotReducedAt,
  HorizonBeyondCertified,
  HypothesisFailed,
};

const char* to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `pair` names the offending matrix
/// entry for validation errors; `position` is the 1-based letter index for
/// NotReducedAt.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::pair<std::size_t, std::size_t>> pair = std::nullopt,
        std::optional<std::size_t> position = std::nullopt)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        pair_(pair),
        position_(position) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::optional<std::pair<std::size_t, std::size_t>>& pair() const noexcept {
    return pair_;
  }
  const std::optional<std::size_t>& position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::pair<std::size_t, std::size_t>> pair_;
  std::optional<std::size_t> position_;
};

}  // namespace coxeter
