#include "tendo/sampling.hpp"

#include "tendo/error.hpp"

namespace tendo {

namespace {

constexpr int kRetryBudget = 10000;

}  // namespace

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t state = seed;
  std::seed_seq seq{splitmix64(state), splitmix64(state), splitmix64(state), splitmix64(state)};
  engine_.seed(seq);
}

Rng Rng::derive(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed;
  const std::uint64_t a = splitmix64(state);
  state = a ^ (index * 0xD1B54A32D192ED03ULL);
  return Rng(splitmix64(state));
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  require(lo <= hi, "empty range");
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
}

Rational random_rational(Rng& rng, std::int64_t bound, std::int64_t den_bound) {
  Rational out(rng.uniform(-bound, bound), rng.uniform(1, den_bound));
  out.canonicalize();
  return out;
}

Rational random_nonzero_rational(Rng& rng, std::int64_t bound, std::int64_t den_bound) {
  for (;;) {
    Rational r = random_rational(rng, bound, den_bound);
    if (r != 0) return r;
  }
}

FieldElement random_field_element(Rng& rng, const LocalField& field, std::int64_t bound) {
  FieldElement out;
  for (int i = 0; i < field.degree(); ++i) out.push_back(random_rational(rng, bound));
  return out;
}

Matrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::int64_t bound) {
  Matrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = rng.uniform(-bound, bound);
  return out;
}

Matrix random_invertible_matrix(Rng& rng, std::size_t n, std::int64_t bound) {
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    Matrix m = random_integer_matrix(rng, n, n, bound);
    if (determinant(m) != 0) return m;
  }
  throw InternalError("no invertible matrix within the retry budget");
}

LocalField random_base_field(Rng& rng, const Prime& p, int degree) {
  switch (degree) {
    case 1: return LocalField::rationals(p);
    case 2: {
      const auto classes = square_class_table(p);
      const auto& d = classes[static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(classes.size()) - 1))];
      return LocalField::quadratic(p, d.representative());
    }
    case 3: {
      Rational p_value = p.integer();
      return LocalField::from_poly(p, Poly({-p_value, 0, 0, 1}), Certificate::Eisenstein);
    }
    default: throw Unsupported("random base fields of degree " + std::to_string(degree));
  }
}

FactorTower random_tower(Rng& rng, const LocalField& base, bool split) {
  if (split) return FactorTower::split(base);
  if (base.is_rationals()) {
    const auto classes = square_class_table(base.prime());
    const auto& d = classes[static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(classes.size()) - 1))];
    return FactorTower::quadratic(base, base.from_rational(d.representative()));
  }
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    FieldElement d = random_field_element(rng, base, 6);
    if (base.is_zero(d) || base.is_square(d)) continue;
    return FactorTower::quadratic(base, std::move(d));
  }
  throw InternalError("no non-square step within the retry budget");
}

EtaleAlgebra random_algebra(Rng& rng, const Prime& p, int half_dim, const AlgebraShape& shape) {
  require(half_dim >= 1, "algebra dimension must be positive");
  require(shape.allow_split || shape.allow_quadratic, "no tower kind allowed");
  std::vector<FactorTower> towers;
  int remaining = half_dim;
  while (remaining > 0) {
    const int degree = static_cast<int>(rng.uniform(1, std::min(remaining, shape.max_base_degree)));
    const LocalField base = random_base_field(rng, p, degree);
    bool split = shape.allow_split && (!shape.allow_quadratic || rng.coin());
    towers.push_back(random_tower(rng, base, split));
    remaining -= degree;
  }
  return EtaleAlgebra(std::move(towers));
}

AlgebraElement random_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound) {
  Vector v;
  for (int i = 0; i < algebra.dim(); ++i) v.push_back(random_rational(rng, bound));
  return algebra.from_coordinates(v);
}

AlgebraElement random_invertible_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound) {
  for (int attempt = 0; attempt < kRetryBudget; ++attempt) {
    AlgebraElement x = random_element(rng, algebra, bound);
    if (algebra.is_invertible(x)) return x;
  }
  throw InternalError("no invertible element within the retry budget");
}

namespace {

std::vector<FieldElement> random_components(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound) {
  std::vector<FieldElement> out;
  for (const auto& f : algebra.factors()) {
    FieldElement c;
    do {
      c = random_field_element(rng, f.base, bound);
    } while (f.base.is_zero(c));
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

AlgebraElement random_fixed_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound) {
  return algebra.fixed(random_components(rng, algebra, bound));
}

AlgebraElement random_anti_fixed_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound) {
  return algebra.anti_fixed(random_components(rng, algebra, bound));
}

AlgebraElement random_norm_one_element(Rng& rng, const EtaleAlgebra& algebra, std::int64_t bound) {
  const AlgebraElement z = random_invertible_element(rng, algebra, bound);
  return algebra.mul(z, algebra.inverse(algebra.tau(z)));
}

}  // namespace tendo
