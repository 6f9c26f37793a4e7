#pragma once

#include <cstdint>
#include <random>

#include "tendo/etale.hpp"
#include "tendo/localfield.hpp"
#include "tendo/matrix.hpp"

namespace tendo {

/// One step of the splitmix64 sequence; used to derive independent per-seed streams.
std::uint64_t splitmix64(std::uint64_t& state);

/// Deterministic generator: std::mt19937_64 seeded through splitmix64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  /// Independent stream for (seed, index).
  static Rng derive(std::uint64_t seed, std::uint64_t index);

  std::int64_t uniform(std::int64_t lo, std::int64_t hi);  // inclusive
  bool coin() { return uniform(0, 1) == 1; }
  template <class Container>
  const auto& pick(const Container& items) {
    return items[static_cast<std::size_t>(uniform(0, static_cast<std::int64_t>(items.size()) - 1))];
  }
  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
};

/// Numerator in [-bound, bound], denominator in [1, den_bound].
Rational random_rational(Rng& rng, std::int64_t bound, std::int64_t den_bound = 1);
Rational random_nonzero_rational(Rng& rng, std::int64_t bound, std::int64_t den_bound = 1);
FieldElement random_field_element(Rng& rng, const LocalField& field, std::int64_t bound);

Matrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound);
Matrix random_invertible_matrix(Rng& rng, std::size_t n, std::int64_t bound);

/// Base field of the given degree: Q_p, Q_p(√r) for a random non-square class r, or t³ - p.
LocalField random_base_field(Rng& rng, const Prime& p, int degree);
/// Random tower over `base`; the quadratic step uses a random non-square of the base.
FactorTower random_tower(Rng& rng, const LocalField& base, bool split);

struct AlgebraShape {
  bool allow_split = true;
  bool allow_quadratic = true;
  int max_base_degree = 2;
};
/// Étale algebra with involution of Q_p-dimension 2·half_dim.
EtaleAlgebra random_algebra(Rng& rng, const Prime& p, int half_dim, const AlgebraShape& shape = {});

AlgebraElement random_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound);
AlgebraElement random_invertible_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound);
/// Invertible τ-fixed element.
AlgebraElement random_fixed_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound);
/// Invertible element with τ(c) = -c.
AlgebraElement random_anti_fixed_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound);
/// z/τ(z) for a random invertible z, so that y·τ(y) = 1.
AlgebraElement random_norm_one_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound);

}  // namespace tendo
