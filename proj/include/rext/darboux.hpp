#pragma once

#include <cstddef>
#include <vector>

#include "rext/extension.hpp"

namespace rext {

enum class Direction { forward, adjoint };

/// n-th order intertwiner realized as a Wronskian quotient
///   f -> sign * W(seeds..., f) / W(seeds...),
/// evaluated through the cached cofactor expansion along the last column.
/// With no seeds it is the identity.
class DarbouxMap {
 public:
  DarbouxMap(std::vector<Seed> seeds, Potential source, Potential target, Direction direction = Direction::forward,
             int sign = 1);

  /// Forward map off `source`; the target is the Wronskian partner.
  static DarbouxMap forward(const Potential& source, std::vector<Seed> seeds);

  QuasiRat apply(const QuasiRat& f) const;
  QuasiRat operator()(const QuasiRat& f) const { return apply(f); }

  /// A^dagger = (-1)^n W(hat_1..hat_n, .) / W(hat_1..hat_n), where
  /// hat_i = W(seeds without i) / W(seeds) spans its kernel. Adjoint of an
  /// adjoint gives back the forward map.
  DarbouxMap adjoint() const;

  std::size_t order() const { return seeds_.size(); }
  const std::vector<Seed>& seeds() const { return seeds_; }
  const Potential& source() const { return source_; }
  const Potential& target() const { return target_; }
  Direction direction() const { return direction_; }
  int sign() const { return sign_; }
  std::vector<Rat> factorization_energies() const;
  /// Operator coefficients a_0..a_n (a_n = sign) of sum a_i d^i.
  const std::vector<QuasiRat>& coefficients() const { return coeffs_; }

 private:
  std::vector<Seed> seeds_;
  Potential source_, target_;
  Direction direction_;
  int sign_;
  std::vector<Seed> forward_seeds_;  // set on adjoint maps
  std::vector<QuasiRat> coeffs_;
};

/// hat_i = W(seeds without i) / W(seeds) for each i.
std::vector<QuasiRat> kernel_of_adjoint(const std::vector<Seed>& seeds);

/// Applies sum_i a_i d^i f for QuasiRat coefficients.
QuasiRat apply_differential(const std::vector<QuasiRat>& coeffs, const QuasiRat& f);

}  // namespace rext
