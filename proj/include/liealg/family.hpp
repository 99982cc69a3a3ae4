#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace liealg {

enum class AlgebraFamily { SL, SP, SO_EVEN, SO_ODD };

/// CLI spelling: sl, sp, so-even, so-odd.
inline std::string family_name(AlgebraFamily f) {
  switch (f) {
    case AlgebraFamily::SL: return "sl";
    case AlgebraFamily::SP: return "sp";
    case AlgebraFamily::SO_EVEN: return "so-even";
    case AlgebraFamily::SO_ODD: return "so-odd";
  }
  return "?";
}

inline std::optional<AlgebraFamily> parse_family(std::string_view name) {
  if (name == "sl") return AlgebraFamily::SL;
  if (name == "sp") return AlgebraFamily::SP;
  if (name == "so-even") return AlgebraFamily::SO_EVEN;
  if (name == "so-odd") return AlgebraFamily::SO_ODD;
  return std::nullopt;
}

/// One classical algebra. `n` is the index as written in sl_n, sp_2n, so_2n,
/// so_2n+1: the matrix size for SL, the half-size otherwise.
struct AlgebraSpec {
  AlgebraFamily family = AlgebraFamily::SL;
  int n = 2;

  AlgebraSpec() = default;
  AlgebraSpec(AlgebraFamily f, int index) : family(f), n(index) { validate(); }

  void validate() const {
    const int minimum = (family == AlgebraFamily::SL || family == AlgebraFamily::SO_EVEN) ? 2 : 1;
    if (n < minimum)
      throw std::invalid_argument(family_name(family) + " requires n >= " + std::to_string(minimum) +
                                  ", got " + std::to_string(n));
    if (n > 16) throw std::invalid_argument("n is capped at 16");
  }

  /// Size of the matrices realizing the algebra.
  int realization_dim() const {
    switch (family) {
      case AlgebraFamily::SL: return n;
      case AlgebraFamily::SP:
      case AlgebraFamily::SO_EVEN: return 2 * n;
      case AlgebraFamily::SO_ODD: return 2 * n + 1;
    }
    return 0;
  }

  /// Dimension of the Cartan subalgebra: n - 1 for sl_n, n otherwise.
  int lie_rank() const { return family == AlgebraFamily::SL ? n - 1 : n; }

  /// Number of a_i coordinates carried by weights (always n).
  int coordinate_count() const { return n; }

  int expected_dimension() const {
    switch (family) {
      case AlgebraFamily::SL: return n * n - 1;
      case AlgebraFamily::SP: return n * (2 * n + 1);
      case AlgebraFamily::SO_EVEN: return n * (2 * n - 1);
      case AlgebraFamily::SO_ODD: return n * (2 * n + 1);
    }
    return 0;
  }

  /// Conventional name: sl_3, sp_6, so_8, so_7.
  std::string name() const {
    switch (family) {
      case AlgebraFamily::SL: return "sl_" + std::to_string(n);
      case AlgebraFamily::SP: return "sp_" + std::to_string(2 * n);
      case AlgebraFamily::SO_EVEN: return "so_" + std::to_string(2 * n);
      case AlgebraFamily::SO_ODD: return "so_" + std::to_string(2 * n + 1);
    }
    return "?";
  }

  friend bool operator==(const AlgebraSpec&, const AlgebraSpec&) = default;
};

/// |Phi| in closed form.
inline int root_count(const AlgebraSpec& spec) {
  const int n = spec.n;
  switch (spec.family) {
    case AlgebraFamily::SL: return n * (n - 1);
    case AlgebraFamily::SP: return 2 * n * n;
    case AlgebraFamily::SO_EVEN: return 2 * n * (n - 1);
    case AlgebraFamily::SO_ODD: return 2 * n * n;
  }
  return 0;
}

/// |W| in closed form: (n)! for sl_n, 2^n n! for sp/so-odd, 2^(n-1) n! for so-even.
inline std::uint64_t weyl_order_closed_form(const AlgebraSpec& spec) {
  std::uint64_t fact = 1;
  for (int k = 2; k <= spec.n; ++k) fact *= static_cast<std::uint64_t>(k);
  switch (spec.family) {
    case AlgebraFamily::SL: return fact;
    case AlgebraFamily::SP:
    case AlgebraFamily::SO_ODD: return (std::uint64_t{1} << spec.n) * fact;
    case AlgebraFamily::SO_EVEN: return (std::uint64_t{1} << (spec.n - 1)) * fact;
  }
  return 0;
}

}  // namespace liealg
