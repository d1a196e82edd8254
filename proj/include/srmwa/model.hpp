#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace srmwa {

enum class ErrorCode {
  CapacityExceedsItems,
  TooFewAgents,
  PressureOutOfRange,
  NonPositiveCount,
  GammaOutOfRange,
  PolicyMismatch,
  DegenerateRates,
  ReducibleChain,
  NonIntegerCapacity,
  DivisionByZeroShare,
  InvalidArgument,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// How the analytic engine obtains the probability that a recommended item
/// is already owned by the taker.
struct ExactM1 {
  bool operator==(const ExactM1&) const = default;
};
struct Approximation {
  bool operator==(const Approximation&) const = default;
};
struct FixedGamma {
  double value = 0.0;
  bool operator==(const FixedGamma&) const = default;
};
using GammaPolicy = std::variant<ExactM1, Approximation, FixedGamma>;

/// ExactM1 for a single-slot stock, Approximation otherwise.
GammaPolicy default_gamma_policy(std::int64_t capacity);

std::string format_gamma_policy(const GammaPolicy& policy);
/// Accepts "exact-m1", "approx" and "fixed:<v>".
GammaPolicy parse_gamma_policy(const std::string& text);

struct ModelParams {
  std::int64_t n_agents = 100;
  std::int64_t n_items = 100;
  std::int64_t capacity = 10;
  double pressure = 0.1;
  double interactions_per_pair = 1000.0;
  GammaPolicy gamma_policy = Approximation{};

  bool operator==(const ModelParams&) const = default;
};

struct ValidationError {
  ErrorCode code;
  std::string field;
  std::string message;
};

std::optional<ValidationError> validate(const ModelParams& params);

/// Throws Error carrying the first violated constraint.
void require_valid(const ModelParams& params);

/// Attention capacity ratio M / I.
double rho(const ModelParams& params);

/// Total number of recommendations, ceil(nu * N^2).
std::uint64_t total_recommendations(const ModelParams& params);

/// Either one of the I regular items (1-based) or the single advertised item.
class ItemRef {
 public:
  static ItemRef advertised() { return ItemRef(0); }
  static ItemRef regular(std::size_t index) {
    if (index == 0) throw Error(ErrorCode::InvalidArgument, "regular item index is 1-based");
    return ItemRef(index);
  }

  bool is_advertised() const noexcept { return index_ == 0; }
  /// 1-based index of a regular item; 0 for the advertised item.
  std::size_t index() const noexcept { return index_; }

  bool operator==(const ItemRef&) const = default;

 private:
  explicit ItemRef(std::size_t index) : index_(index) {}
  std::size_t index_;
};

/// Effect of one recommendation on the number of agents owning the advertised item.
enum class TransitionKind { Up, Down, Stay };

}  // namespace srmwa
