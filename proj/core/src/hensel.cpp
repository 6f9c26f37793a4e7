#include "field_internal.hpp"
#include "tendo/error.hpp"
#include "tendo/localfield.hpp"

namespace tendo {

namespace detail {

namespace {

Coeffs scalar(const LocalField& field, const Rational& c) {
  Coeffs x(static_cast<std::size_t>(field.degree()));
  x[0] = c;
  return x;
}

bool is_zero(const Coeffs& x) {
  for (const auto& c : x)
    if (c != 0) return false;
  return true;
}

Coeffs add(Coeffs a, const Coeffs& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

// π^{-1} in model coordinates.
Coeffs uniformizer_inverse(const LocalField& field) {
  if (field.model_kind() != LocalField::ModelKind::Eisenstein) {
    return scalar(field, Rational(1) / static_cast<long>(field.prime().value()));
  }
  // s^e + ... + a_1 s + a_0 = 0  ⇒  s^{-1} = -(s^{e-1} + a_{e-1} s^{e-2} + ... + a_1) / a_0
  const Poly& g = field.model_poly();
  Coeffs inv(static_cast<std::size_t>(field.degree()));
  for (int i = 1; i <= g.degree(); ++i) inv[static_cast<std::size_t>(i - 1)] = -g.coeff(i) / g.coeff(0);
  return inv;
}

// v_K(2)
int valuation_of_two(const LocalField& field) { return field.prime().is_two() ? field.ramification_index() : 0; }

}  // namespace

Coeffs uniformizer_power(const LocalField& field, int k) {
  Coeffs r = scalar(field, 1);
  const Coeffs step = k >= 0 ? field.model_uniformizer() : uniformizer_inverse(field);
  for (int i = 0; i < (k >= 0 ? k : -k); ++i) r = field.model_mul(r, step);
  return r;
}

std::pair<int, Coeffs> split_uniformizer(const LocalField& field, const Coeffs& model) {
  const int v = field.model_valuation(model);
  return {v, field.model_mul(model, uniformizer_power(field, -v))};
}

std::vector<Coeffs> residue_digits(const LocalField& field) {
  const std::size_t n = static_cast<std::size_t>(field.degree());
  const std::int64_t p = field.prime().value();
  std::vector<Coeffs> out;
  if (field.model_kind() != LocalField::ModelKind::Unramified) {
    for (std::int64_t d = 0; d < p; ++d) out.push_back(scalar(field, Rational(static_cast<long>(d))));
    return out;
  }
  std::vector<std::int64_t> digits(n, 0);
  while (true) {
    Coeffs x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = static_cast<long>(digits[i]);
    out.push_back(std::move(x));
    std::size_t i = 0;
    while (i < n && ++digits[i] == p) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

bool unit_is_square_by_lifting(const LocalField& field, const Coeffs& unit) {
  const int target = 2 * valuation_of_two(field) + 1;
  const auto digits = residue_digits(field);
  const auto deviation = [&](const Coeffs& w) {
    const Coeffs diff = add(field.model_mul(w, w), [&] {
      Coeffs neg = unit;
      for (auto& c : neg) c = -c;
      return neg;
    }());
    return is_zero(diff) ? target + 1 : field.model_valuation(diff);
  };
  std::vector<Coeffs> survivors;
  for (const auto& d : digits) {
    if (is_zero(d)) continue;
    const int dev = deviation(d);
    if (dev >= target) return true;
    if (dev >= 1) survivors.push_back(d);
  }
  for (int level = 1; level < target && !survivors.empty(); ++level) {
    const Coeffs pik = uniformizer_power(field, level);
    std::vector<Coeffs> next;
    for (const auto& w : survivors) {
      for (const auto& d : digits) {
        Coeffs cand = add(w, field.model_mul(d, pik));
        const int dev = deviation(cand);
        if (dev >= target) return true;
        if (dev >= level + 1) next.push_back(std::move(cand));
      }
    }
    survivors = std::move(next);
  }
  return false;
}

}  // namespace detail

using detail::Coeffs;

std::string to_string(Solubility s) {
  switch (s) {
    case Solubility::Soluble: return "soluble";
    case Solubility::Insoluble: return "insoluble";
    case Solubility::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct ReducedCoefficient {
  Coeffs value;  // valuation 0 or 1
  int half;      // original = value · π^{2·half}
};

ReducedCoefficient reduce_by_squares(const LocalField& field, const Coeffs& model) {
  auto [v, unit] = detail::split_uniformizer(field, model);
  const int half = v >= 0 ? v / 2 : -((-v + 1) / 2);
  if (v - 2 * half == 1) unit = field.model_mul(unit, field.model_uniformizer());
  return {unit, half};
}

class ZeroSearcher {
 public:
  ZeroSearcher(const LocalField& field, std::vector<Coeffs> coeffs)
      : field_(field), coeffs_(std::move(coeffs)), digits_(detail::residue_digits(field)) {
    v_two_ = field.prime().is_two() ? field.ramification_index() : 0;
    for (const auto& a : coeffs_) coeff_val_.push_back(field.model_valuation(a));
  }

  // Returns the certified candidate, if any, after `depth` levels; sets `status`.
  Solubility run(int depth, std::vector<Coeffs>& witness, int& levels) {
    const std::size_t m = coeffs_.size();
    levels = 0;
    if (m < 2) return Solubility::Insoluble;
    std::vector<Candidate> survivors;
    // Level 1: first unit coordinate fixed to 1, earlier coordinates 0.
    for (std::size_t j = 0; j < m; ++j) {
      std::vector<std::size_t> idx(m, 0);
      while (true) {
        Candidate c{std::vector<Coeffs>(m, zero()), j};
        c.x[j] = one();
        for (std::size_t i = j + 1; i < m; ++i) c.x[i] = digits_[idx[i]];
        if (consider(c, 1, survivors, witness)) {
          levels = 1;
          return Solubility::Soluble;
        }
        std::size_t i = j + 1;
        while (i < m && ++idx[i] == digits_.size()) idx[i++] = 0;
        if (i >= m) break;
      }
    }
    levels = 1;
    for (int level = 1; level < depth && !survivors.empty(); ++level) {
      const Coeffs pik = detail::uniformizer_power(field_, level);
      std::vector<Coeffs> steps;
      for (const auto& d : digits_) steps.push_back(field_.model_mul(d, pik));
      std::vector<Candidate> next;
      for (const auto& base : survivors) {
        std::vector<std::size_t> idx(m, 0);
        while (true) {
          Candidate c = base;
          for (std::size_t i = 0; i < m; ++i) {
            if (i != base.pinned) c.x[i] = add(c.x[i], steps[idx[i]]);
          }
          if (consider(c, level + 1, next, witness)) {
            levels = level + 1;
            return Solubility::Soluble;
          }
          std::size_t i = 0;
          while (i < m) {
            if (i == base.pinned) {
              ++i;
              continue;
            }
            if (++idx[i] == steps.size()) {
              idx[i++] = 0;
              continue;
            }
            break;
          }
          if (i >= m) break;
        }
      }
      survivors = std::move(next);
      levels = level + 1;
    }
    return survivors.empty() ? Solubility::Insoluble : Solubility::Inconclusive;
  }

 private:
  struct Candidate {
    std::vector<Coeffs> x;
    std::size_t pinned;
  };

  Coeffs zero() const { return Coeffs(static_cast<std::size_t>(field_.degree())); }
  Coeffs one() const {
    Coeffs c = zero();
    c[0] = 1;
    return c;
  }
  static Coeffs add(Coeffs a, const Coeffs& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
  }
  static bool is_zero(const Coeffs& x) {
    for (const auto& c : x)
      if (c != 0) return false;
    return true;
  }

  // Keeps the candidate if v(F) ≥ level; returns true if it is Hensel-certified.
  bool consider(const Candidate& c, int level, std::vector<Candidate>& keep, std::vector<Coeffs>& witness) {
    Coeffs value = zero();
    for (std::size_t i = 0; i < c.x.size(); ++i) {
      if (is_zero(c.x[i])) continue;
      value = add(value, field_.model_mul(coeffs_[i], field_.model_mul(c.x[i], c.x[i])));
    }
    bool certified = is_zero(value);
    if (!certified) {
      const int vf = field_.model_valuation(value);
      if (vf < level) return false;
      for (std::size_t i = 0; i < c.x.size() && !certified; ++i) {
        if (is_zero(c.x[i])) continue;
        const int vd = v_two_ + coeff_val_[i] + field_.model_valuation(c.x[i]);
        certified = vf > 2 * vd;
      }
    }
    if (certified) {
      witness = c.x;
      return true;
    }
    keep.push_back(c);
    return false;
  }

  const LocalField& field_;
  std::vector<Coeffs> coeffs_;
  std::vector<Coeffs> digits_;
  std::vector<int> coeff_val_;
  int v_two_ = 0;
};

}  // namespace

ZeroSearch find_isotropic_vector(const LocalField& field, std::span<const FieldElement> coeffs, int depth) {
  require(depth >= 1, "search depth must be positive");
  std::vector<Coeffs> reduced;
  std::vector<int> halves;
  for (const auto& a : coeffs) {
    require(!field.is_zero(a), "zero coefficient in diagonal form");
    auto r = reduce_by_squares(field, field.to_model(a));
    reduced.push_back(std::move(r.value));
    halves.push_back(r.half);
  }
  ZeroSearch result;
  std::vector<Coeffs> witness;
  ZeroSearcher searcher(field, std::move(reduced));
  result.status = searcher.run(depth, witness, result.levels);
  if (result.status == Solubility::Soluble) {
    // a_i x_i² = a'_i (π^{half_i} x_i)², so undo the substitution.
    for (std::size_t i = 0; i < witness.size(); ++i) {
      const Coeffs x = field.model_mul(witness[i], detail::uniformizer_power(field, -halves[i]));
      result.witness.push_back(field.from_model(x));
    }
  }
  return result;
}

int solubility_budget(const LocalField& field, const FieldElement& a, const FieldElement& b) {
  const auto ra = reduce_by_squares(field, field.to_model(a));
  const auto rb = reduce_by_squares(field, field.to_model(b));
  const int v_two = field.prime().is_two() ? field.ramification_index() : 0;
  return 2 * v_two + field.model_valuation(ra.value) + field.model_valuation(rb.value) +
         2 * field.ramification_index() + 1;
}

Solubility solubility_oracle(const FieldElement& a, const FieldElement& b, const LocalField& field, int depth) {
  const std::vector<FieldElement> coeffs = {field.one(), field.neg(a), field.neg(b)};
  const ZeroSearch search = find_isotropic_vector(field, coeffs, depth);
  if (search.status == Solubility::Inconclusive && depth >= solubility_budget(field, a, b)) {
    throw InternalError("solubility search undecided at its exhaustion budget");
  }
  return search.status;
}

Solubility solubility_oracle(const Rational& a, const Rational& b, const LocalField& field, int depth) {
  return solubility_oracle(field.from_rational(a), field.from_rational(b), field, depth);
}

int hilbert_tame(const LocalField& field, const FieldElement& a, const FieldElement& b) {
  if (field.prime().is_two()) throw Unsupported("tame Hilbert symbol needs odd residue characteristic");
  require(!field.is_zero(a) && !field.is_zero(b), "Hilbert symbol of zero");
  const auto [alpha, u] = detail::split_uniformizer(field, field.to_model(a));
  const auto [beta, w] = detail::split_uniformizer(field, field.to_model(b));
  const auto residue = detail::residue_field(field);
  int sign = 1;
  if ((alpha & 1) && (beta & 1)) {
    const Integer half = (field.residue_cardinality() - 1) / 2;
    if (mpz_odd_p(half.get_mpz_t())) sign = -sign;
  }
  if (beta & 1) sign *= residue.quadratic_character(field.model_residue(u));
  if (alpha & 1) sign *= residue.quadratic_character(field.model_residue(w));
  return sign;
}

int hilbert_symbol(const LocalField& field, const FieldElement& a, const FieldElement& b) {
  if (field.is_rationals()) return hilbert_qp(a[0], b[0], field.prime());
  if (field.prime().is_two()) throw Unsupported("Hilbert symbols over proper extensions of Q_2");
  return hilbert_tame(field, a, b);
}

bool is_local_norm(const LocalField& field, const FieldElement& d, const FieldElement& x) {
  require(!field.is_zero(x), "norm test of zero");
  if (!field.is_rationals() && field.prime().is_two()) {
    throw Unsupported("norm tests over proper extensions of Q_2");
  }
  if (field.is_square(d)) return true;
  return hilbert_symbol(field, d, x) == 1;
}

}  // namespace tendo
