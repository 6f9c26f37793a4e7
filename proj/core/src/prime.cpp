#include "tendo/error.hpp"
#include "tendo/localfield.hpp"

namespace tendo {

Prime::Prime(std::int64_t p) : p_(p) {
  bool prime = p >= 2;
  for (std::int64_t d = 2; prime && d <= p / d; ++d) prime = p % d != 0;
  if (!prime) throw InvalidArgument(std::to_string(p) + " is not prime");
}

int valuation(const Integer& a, const Prime& p) {
  require(a != 0, "valuation of zero");
  Integer rest;
  return static_cast<int>(mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.integer().get_mpz_t()));
}

int valuation(const Rational& a, const Prime& p) {
  require(a != 0, "valuation of zero");
  return valuation(Integer(a.get_num()), p) - valuation(Integer(a.get_den()), p);
}

std::int64_t least_nonresidue(const Prime& p) {
  require(!p.is_two(), "least non-residue needs an odd prime");
  const Integer pp = p.integer();
  for (long u = 2;; ++u) {
    if (mpz_legendre(Integer(u).get_mpz_t(), pp.get_mpz_t()) == -1) return u;
  }
}

int legendre(const Rational& a, const Prime& p) {
  require(!p.is_two(), "Legendre symbol needs an odd prime");
  const Integer pp = p.integer();
  const Integer r = residue_mod(a, pp);
  return mpz_legendre(r.get_mpz_t(), pp.get_mpz_t());
}

}  // namespace tendo
