#include "tendo/weil.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tendo/error.hpp"
#include "weil_table.hpp"

namespace tendo {

Mu8 Mu8::from_sign(int sign) {
  require(sign == 1 || sign == -1, "sign must be ±1");
  return Mu8(sign == 1 ? 0 : 4);
}

Mu8 Mu8::nearest(std::complex<double> z) {
  const double angle = std::arg(z);
  const long k = std::lround(angle / (std::numbers::pi / 4));
  return Mu8(static_cast<int>(k));
}

int Mu8::sign() const {
  if (!is_sign()) throw InvalidArgument(to_string(*this) + " is not ±1");
  return exponent_ == 0 ? 1 : -1;
}

std::complex<double> Mu8::value() const { return std::polar(1.0, exponent_ * std::numbers::pi / 4); }

std::string to_string(Mu8 z) { return "zeta8^" + std::to_string(z.exponent()); }

Mu8 parse_mu8(const std::string& text) {
  if (text == "1") return Mu8(0);
  if (text == "-1") return Mu8(4);
  const std::string prefix = "zeta8^";
  if (text.rfind(prefix, 0) != 0 || text.size() == prefix.size()) {
    throw ParseError("'" + text + "'", "expected zeta8^k");
  }
  const std::string digits = text.substr(prefix.size());
  if (!std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) || digits.size() > 6) {
    throw ParseError("'" + text + "'", "expected zeta8^k with k a non-negative integer");
  }
  return Mu8(std::stoi(digits));
}

Rational principal_part(const Rational& x, const Prime& p) {
  if (x == 0) return 0;
  Integer den = x.get_den();
  Integer rest;
  const unsigned long m = mpz_remove(rest.get_mpz_t(), den.get_mpz_t(), p.integer().get_mpz_t());
  if (m == 0) return 0;
  Integer pm;
  mpz_pow_ui(pm.get_mpz_t(), p.integer().get_mpz_t(), m);
  // x = N / (p^m·D') ≡ (N·D'^{-1} mod p^m) / p^m  modulo Z_p
  const Integer r = residue_mod(Rational(x.get_num(), rest), pm);
  Rational out(r, pm);
  out.canonicalize();
  return out;
}

std::vector<std::int64_t> weil_table_primes() {
  std::vector<std::int64_t> out;
  for (const auto& row : detail::weil_table_rows()) out.push_back(row.p);
  return out;
}

std::optional<std::vector<Mu8>> weil_table_row(const Prime& p) {
  for (const auto& row : detail::weil_table_rows()) {
    if (row.p != p.value()) continue;
    const std::size_t count = p.is_two() ? 8 : 4;
    std::vector<Mu8> out;
    for (std::size_t i = 0; i < count; ++i) out.emplace_back(row.exponents[i]);
    return out;
  }
  return std::nullopt;
}

Mu8 weil_rank1(const Rational& a, const Prime& p) {
  require(a != 0, "Weil index of ⟨0⟩");
  const auto row = weil_table_row(p);
  if (!row) throw Unsupported("no frozen Weil table for p = " + std::to_string(p.value()));
  return (*row)[square_class(a, p).index()];
}

Mu8 weil_index(const QuadForm& q) {
  Mu8 total;
  for (const auto& a : diagonalize(q).entries) total *= weil_rank1(a, q.prime());
  return total;
}

Mu8 epsilon_half(const QuadraticAlgebra& k) { return weil_index(norm_form(k)); }

namespace {

__extension__ typedef __int128 Wide;

constexpr long kMaxModulus = 1L << 27;
constexpr long kMaxPairTerms = 1L << 24;

// Level-k sum for ⟨a⟩: value = scale · Σ_{y mod modulus} e(c·y²/modulus).
struct LevelSum {
  double scale = 1;
  long modulus = 1;
  long c = 0;

  double phase(long y) const {
    const long y2 = static_cast<long>(static_cast<Wide>(y) * y % modulus);
    return static_cast<double>(static_cast<long>(static_cast<Wide>(c) * y2 % modulus)) / static_cast<double>(modulus);
  }
};

LevelSum level_sum(const Rational& a, const Prime& p, int k) {
  const int v = valuation(a, p);
  const int m = std::max(0, 2 * k - v);
  const double pd = static_cast<double>(p.value());
  LevelSum out;
  const int v2a = v + (p.is_two() ? 1 : 0);
  out.scale = std::pow(pd, -v2a / 2.0) * std::pow(pd, k - m);
  if (m == 0) return out;
  Integer pm;
  mpz_pow_ui(pm.get_mpz_t(), p.integer().get_mpz_t(), static_cast<unsigned long>(m));
  if (pm > Integer(kMaxModulus)) throw Unsupported("Gauss sum modulus " + pm.get_str() + " too large");
  // a·p^{-2k} = unit·p^{-m}
  Rational unit = a;
  Integer pv;
  mpz_pow_ui(pv.get_mpz_t(), p.integer().get_mpz_t(), static_cast<unsigned long>(std::abs(v)));
  if (v > 0) unit /= pv;
  if (v < 0) unit *= pv;
  out.modulus = pm.get_si();
  out.c = residue_mod(unit, pm).get_si();
  return out;
}

std::complex<double> evaluate(const LevelSum& s) {
  const double two_pi = 2 * std::numbers::pi;
  double re = 0;
  double im = 0;
  for (long y = 0; y < s.modulus; ++y) {
    const double t = two_pi * s.phase(y);
    re += std::cos(t);
    im += std::sin(t);
  }
  return s.scale * std::complex<double>(re, im);
}

GaussOracleResult finish(std::complex<double> value, std::complex<double> next, int k) {
  GaussOracleResult r;
  r.value = value;
  r.next_value = next;
  r.level = k;
  r.snapped = Mu8::nearest(value);
  r.snap_distance = std::abs(value - r.snapped.value());
  r.stabilized = r.snap_distance < kSnapTolerance && std::abs(next - value) < kSnapTolerance;
  return r;
}

}  // namespace

int gauss_oracle_min_level(const Rational& a, const Prime& p) {
  const int v = valuation(a, p);
  // Shells p^{-j}Z_p^x cancel once 2j - v ≥ 2 (odd p) or ≥ 4 (p = 2).
  const int extra = p.is_two() ? 1 : 0;
  const int half = v > 0 ? (v + 1) / 2 : 0;
  return std::max(1, half + extra);
}

GaussOracleResult gauss_oracle(const Rational& a, const Prime& p, int k) {
  require(a != 0, "Gauss sum of ⟨0⟩");
  require(k >= 1, "truncation level must be positive");
  return finish(evaluate(level_sum(a, p, k)), evaluate(level_sum(a, p, k + 1)), k);
}

GaussOracleResult gauss_oracle(const Rational& a, const Prime& p) {
  return gauss_oracle(a, p, gauss_oracle_min_level(a, p));
}

GaussOracleResult gauss_oracle_pair(const Rational& a, const Rational& b, const Prime& p) {
  require(a != 0 && b != 0, "Gauss sum of a degenerate form");
  const int k = std::max(gauss_oracle_min_level(a, p), gauss_oracle_min_level(b, p));
  const auto joint = [&](int level) {
    const LevelSum sa = level_sum(a, p, level);
    const LevelSum sb = level_sum(b, p, level);
    if (sa.modulus > kMaxPairTerms / sb.modulus) throw Unsupported("rank-two Gauss sum too large");
    std::vector<double> inner;
    inner.reserve(static_cast<std::size_t>(sb.modulus));
    for (long y = 0; y < sb.modulus; ++y) inner.push_back(sb.phase(y));
    std::complex<double> acc = 0;
    for (long x = 0; x < sa.modulus; ++x) {
      const double px = sa.phase(x);
      for (double py : inner) acc += std::polar(1.0, 2 * std::numbers::pi * (px + py));
    }
    return sa.scale * sb.scale * acc;
  };
  return finish(joint(k), joint(k + 1), k);
}

}  // namespace tendo
