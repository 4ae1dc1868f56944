#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dpv {

/// Upper bound on geometric variables per ring, auxiliary variables included.
inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector in the geometric variables.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> exp{};

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

  std::uint32_t degree() const;
  bool divides(const Monomial& other) const;
  bool is_one() const { return *this == Monomial{}; }
};

/// Throws std::overflow_error when an exponent leaves the 16-bit range.
Monomial operator*(const Monomial& a, const Monomial& b);
/// a / b; requires b | a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

class RingContext;
using Ring = std::shared_ptr<const RingContext>;

/// Characteristic, geometric variables with their (multi)degrees, and the
/// parameter variables whose rational functions form the coefficient field.
class RingContext {
 public:
  /// `weights[i]` is the degree vector of variable i; every vector has the
  /// same length (1 for ordinary weighted gradings).
  static Ring make(std::uint32_t p, std::vector<std::string> vars, std::vector<std::vector<int>> weights,
                   std::vector<std::string> params);
  /// All variables of weight 1.
  static Ring standard(std::uint32_t p, std::vector<std::string> vars, std::vector<std::string> params);

  std::uint32_t prime() const { return p_; }
  std::size_t nvars() const { return vars_.size(); }
  std::size_t nparams() const { return params_.size(); }
  std::size_t grading_rank() const { return weights_.empty() ? 1 : weights_.front().size(); }
  const std::vector<std::string>& var_names() const { return vars_; }
  const std::vector<std::string>& param_names() const { return params_; }
  const std::vector<int>& weight(std::size_t var) const { return weights_[var]; }
  const std::vector<std::vector<int>>& weights() const { return weights_; }

  std::optional<std::size_t> var_index(std::string_view name) const;
  std::optional<std::size_t> param_index(std::string_view name) const;

  /// Same characteristic and parameters, different geometric variables.
  Ring with_variables(std::vector<std::string> vars, std::vector<std::vector<int>> weights) const;
  /// This ring with `var` removed.
  Ring without(std::string_view var) const;
  /// This ring with extra weight-1 variables appended.
  Ring extended(const std::vector<std::string>& extra) const;
  /// A variable name not used in this ring, derived from `stem`.
  std::string fresh_name(std::string_view stem) const;

  bool same_as(const RingContext& o) const;
  bool same_parameters(const RingContext& o) const;

  /// The `ring ...` declaration line describing this ring.
  std::string declaration() const;

 private:
  RingContext() = default;

  std::uint32_t p_ = 2;
  std::vector<std::string> vars_;
  std::vector<std::vector<int>> weights_;
  std::vector<std::string> params_;
};

bool compatible(const Ring& a, const Ring& b);

}  // namespace dpv
