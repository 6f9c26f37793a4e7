#include "tendo/params.hpp"

#include <tuple>

#include "tendo/error.hpp"

namespace tendo {

std::string to_string(SignType sign) {
  switch (sign) {
    case SignType::Plus: return "+1";
    case SignType::Minus: return "-1";
    case SignType::None: return "none";
  }
  return "?";
}

SignType sign_type_from_string(const std::string& text) {
  if (text == "+1" || text == "1") return SignType::Plus;
  if (text == "-1") return SignType::Minus;
  if (text == "none") return SignType::None;
  throw InvalidArgument("sign must be \"+1\", \"-1\" or \"none\", got '" + text + "'");
}

int FormalParameter::total_dim() const {
  int total = 0;
  for (const auto& c : constituents) total += c.mult * c.dim * (c.selfdual() ? 1 : 2);
  return total;
}

void validate(const FormalParameter& param) {
  require(!param.constituents.empty(), "parameter has no constituents");
  const Prime& p = param.constituents.front().det_char.prime();
  for (const auto& c : param.constituents) {
    require(c.dim >= 1, "constituent dimension must be positive");
    require(c.mult >= 1, "constituent multiplicity must be positive");
    require(c.det_char.prime() == p, "constituents over different primes");
    if (c.sign == SignType::Minus) {
      require(c.det_char.is_split(), "a symplectic constituent has trivial determinant");
      require(c.dim % 2 == 0, "a symplectic constituent has even dimension");
    }
  }
}

bool is_elliptic_param(const FormalParameter& param) {
  validate(param);
  const auto key = [](const FormalConstituent& c) {
    return std::make_tuple(c.dim, static_cast<int>(c.sign), c.det_char.d.representative(), c.label);
  };
  for (std::size_t i = 0; i < param.constituents.size(); ++i) {
    const auto& c = param.constituents[i];
    if (!c.selfdual() || c.mult != 1) return false;
    for (std::size_t j = 0; j < i; ++j)
      if (key(param.constituents[j]) == key(c)) return false;
  }
  return true;
}

Classification classify(const FormalParameter& param) {
  require(is_elliptic_param(param), "classification needs an elliptic parameter");
  const int total = param.total_dim();
  require(total % 2 == 0, "classification needs even total dimension");
  const Prime& p = param.constituents.front().det_char.prime();
  int symplectic = 0;
  int minus_count = 0;
  SquareClass character(1, p);
  for (const auto& c : param.constituents) {
    if (c.sign == SignType::Minus) {
      symplectic += c.dim;
      ++minus_count;
    } else {
      character = character * c.det_char.d;
    }
  }
  EndoscopicDatum datum{total - symplectic, symplectic, QuadraticAlgebra{character}};
  validate(datum, total / 2);
  return {datum, minus_count};
}

bool hypothesis_even_so(const FormalParameter& param) {
  validate(param);
  require(param.constituents.size() == 1 && param.constituents.front().mult == 1,
          "hypothesis applies to irreducible parameters");
  const SignType sign = param.constituents.front().sign;
  require(sign != SignType::None, "hypothesis needs a selfdual parameter");
  return sign == SignType::Plus;
}

MultShell mult_shell(const std::string& sigma_tag, const FormalParameter& phi, const EndoscopicDatum& group_of_sigma) {
  require(!sigma_tag.empty(), "σ needs a tag");
  const Classification group_of_phi = classify(phi);
  if (!(group_of_phi.datum == group_of_sigma)) return {true, "0"};
  return {false, "requires-packet-data"};
}

}  // namespace tendo
