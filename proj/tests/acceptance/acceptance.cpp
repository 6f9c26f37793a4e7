// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tendo/classes.hpp"
#include "tendo/cli/corpus.hpp"
#include "tendo/endoscopy.hpp"
#include "tendo/error.hpp"
#include "tendo/gsnorm.hpp"
#include "tendo/params.hpp"
#include "tendo/weil.hpp"

namespace {

using namespace tendo;
namespace oracle = tendo::testing;

struct Verdict {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    pass = false;
    if (failures.size() < 5) failures.push_back(what);
  }
};

std::string str(const Rational& r) { return to_string(r); }

// ---------------------------------------------------------------------------------------------
// 1 and 8 share the corpus

const cli::CorpusSpec kCorpus{{42}, {2, 3, 5, 7}, {1, 2, 3}, 1000};

Verdict constancy(const std::vector<cli::CorpusEntry>& entries) {
  Verdict v;
  const auto records = cli::run_entries(entries, {0, false});
  std::map<std::tuple<std::int64_t, int, std::string>, std::pair<int, int>> cases;
  std::map<std::pair<std::int64_t, int>, int> per_block;
  int passed = 0;
  for (const auto& r : records) {
    auto& c = cases[{r.entry.p, r.entry.half_dim, to_string(square_class(r.entry.character, Prime(r.entry.p)))}];
    ++c.first;
    ++per_block[{r.entry.p, r.entry.half_dim}];
    if (r.passed) {
      ++c.second;
      ++passed;
    } else {
      v.expect(false, "p=" + std::to_string(r.entry.p) + " n=" + std::to_string(r.entry.half_dim) +
                          " index=" + std::to_string(r.entry.index) + ": " + r.reason);
    }
  }
  for (const auto& [key, count] : per_block) {
    v.expect(count >= 1000, "fewer than 1000 configurations at p=" + std::to_string(key.first));
    const auto chars = constancy_characters(Prime(key.first), key.second);
    for (const auto& k : chars) {
      const auto it = cases.find({key.first, key.second, to_string(k.d)});
      v.expect(it != cases.end() && it->second.first > 0,
               "character " + to_string(k.d) + " missing at p=" + std::to_string(key.first));
    }
  }
  std::ostringstream os;
  os << passed << "/" << records.size() << " configurations over " << cases.size() << " (p, n, K) cases";
  v.detail = os.str();
  return v;
}

Verdict mutation(const std::vector<cli::CorpusEntry>& entries) {
  Verdict v;
  const char* names[] = {"X", "Y", "Q"};
  int total[3] = {0, 0, 0};
  int caught[3] = {0, 0, 0};
  for (const auto& entry : entries) {
    const GSConfiguration config = cli::entry_config(entry);
    Rng rng = Rng::derive(entry.seed ^ 0x6d75746174696f6eULL, entry.index);
    const int which = static_cast<int>(entry.index % 3);
    GSConfiguration bad = config;
    Matrix& m = which == 0 ? bad.to_dual : which == 1 ? bad.h_to_dual : bad.ambient.form_gram;
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m.rows()) - 1));
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(m.cols()) - 1));
    std::int64_t delta = 0;
    while (delta == 0) delta = rng.uniform(-3, 3);
    m(i, j) += Rational(static_cast<long>(delta));
    ++total[which];
    try {
      if (!gs_constancy_check(bad).passed) ++caught[which];
    } catch (const Error&) {
      ++caught[which];
    }
  }
  const int all = total[0] + total[1] + total[2];
  const int hit = caught[0] + caught[1] + caught[2];
  v.expect(hit * 100 >= all * 95, "mutation coverage below 95%");
  std::ostringstream os;
  os << hit << "/" << all << " mutants fail (";
  for (int k = 0; k < 3; ++k) os << (k ? ", " : "") << names[k] << " " << caught[k] << "/" << total[k];
  os << ")";
  v.detail = os.str();
  return v;
}

// ---------------------------------------------------------------------------------------------
// 2

Verdict eta_invariants() {
  Verdict v;
  int checks = 0;
  for (std::int64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int n = 1; n <= 5; ++n) {
      // Rank-one form θ̃(v | N^{2n-1} v′), reduced independently of the library.
      const Matrix form = theta_gram(n) * power(regular_nilpotent_sp(n), static_cast<unsigned>(2 * n - 1));
      Rational value = 0;
      int nonzero = 0;
      for (std::size_t r = 0; r < form.rows(); ++r)
        for (std::size_t c = 0; c < form.cols(); ++c)
          if (form(r, c) != 0) {
            ++nonzero;
            value = form(r, c);
          }
      v.expect(nonzero == 1 && square_class(value, p).is_trivial(), "θ̃ rank-one form at n=" + std::to_string(n));
      v.expect(eta_sp(n, p).is_trivial(), "eta_sp(" + std::to_string(n) + ") at p=" + std::to_string(pv));
      ++checks;
    }
    const auto table = square_class_table(p);
    for (int n = 1; n <= 4; ++n) {
      for (const auto& y : table) {
        for (const auto& z : table) {
          const Rational yv = y.representative();
          const QuadForm binary = QuadForm::diagonal({yv, z.representative()}, p);
          const SquareClass expected = square_class(Rational(n % 2 == 1 ? 1 : -1) * yv, p);
          v.expect(eta_so(binary, yv, n) == expected,
                   "eta_so n=" + std::to_string(n) + " y=" + str(yv) + " p=" + std::to_string(pv));
          if (n > 1) {
            // q(e₁ | N^{2n-2} e₁) from the matrices.
            const auto [space, nil] = regular_nilpotent_so(n, yv, z.representative(), p);
            const Vector e1 = [&] {
              Vector e(space.dim(), Rational(0));
              e[0] = 1;
              return e;
            }();
            const Vector image = power(nil, static_cast<unsigned>(2 * n - 2)) * e1;
            const Vector ge = space.gram() * image;
            v.expect(square_class(ge[0], p) == expected, "q(e₁|N^{2n-2}e₁) at n=" + std::to_string(n));
          } else {
            v.expect(oracle::represents_by_search(binary, expected.representative()),
                     "n=1 class not represented by the binary form");
          }
          ++checks;
        }
      }
    }
  }
  v.detail = std::to_string(checks) + " exact η comparisons at p in {2,3,5}";
  return v;
}

// ---------------------------------------------------------------------------------------------
// 3

Verdict oracle_concordance() {
  Verdict v;
  int hilbert_pairs = 0, weil_values = 0;
  double worst = 0;
  for (std::int64_t pv : {2, 3, 5, 7, 11}) {
    const Prime p(pv);
    const auto table = square_class_table(p);
    for (const auto& a : table) {
      for (const auto& b : table) {
        const Rational av = a.representative(), bv = b.representative();
        v.expect(hilbert_qp(av, bv, p) == oracle::hilbert_by_search(av, bv, p),
                 "hilbert (" + str(av) + ", " + str(bv) + ")_" + std::to_string(pv));
        ++hilbert_pairs;
      }
      // Canonical and scaled representatives of each class.
      for (const Rational& scale : std::vector<Rational>{1, 4, 9, Rational(1, 4), Rational(pv * pv)}) {
        const Rational av = a.representative() * scale;
        const GaussOracleResult r = gauss_oracle(av, p);
        worst = std::max(worst, r.snap_distance);
        v.expect(r.stabilized && r.snap_distance < 1e-6, "Gauss oracle unstable at a=" + str(av));
        v.expect(r.snapped == weil_rank1(av, p), "weil_rank1(" + str(av) + ") at p=" + std::to_string(pv));
        ++weil_values;
      }
    }
  }
  std::ostringstream os;
  os << hilbert_pairs << " Hilbert pairs, " << weil_values << " Weil indices, max snap distance " << worst;
  v.detail = os.str();
  return v;
}

// ---------------------------------------------------------------------------------------------
// 4

bool same_invariants(const FormInvariants& a, const FormInvariants& b) {
  return a.dim == b.dim && a.det == b.det && a.hasse == b.hasse && a.witt_index == b.witt_index;
}

Verdict form_theory() {
  Verdict v;
  int congruences = 0, oracle_pairs = 0, witnesses = 0, reconstructions = 0, hasse_pairs = 0;
  Rng rng(4004);
  const std::vector<std::int64_t> primes{2, 3, 5, 7};
  for (int f = 0; f < 80; ++f) {
    const Prime p(primes[static_cast<std::size_t>(f) % primes.size()]);
    const int dim = 1 + f % 5;
    const QuadForm q = oracle::random_form(rng, p, dim);
    const FormInvariants base = invariants(q);
    for (int k = 0; k < 50; ++k) {
      const QuadForm moved(congruence(q.gram(), oracle::random_congruence(rng, q.dim(), 4)), p);
      v.expect(same_invariants(invariants(moved), base), "invariants moved under congruence");
      ++congruences;
    }
    const WittDecomposition w = witt_decompose(q);
    std::vector<Rational> diag = realize_witt_class(w.kernel);
    QuadForm rebuilt = w.witt_index > 0 ? hyperbolic(w.witt_index, p) : QuadForm::diagonal(diag, p);
    if (w.witt_index > 0 && !diag.empty()) rebuilt = direct_sum(QuadForm::diagonal(diag, p), rebuilt);
    v.expect(rebuilt.dim() == q.dim() && equivalent(rebuilt, q), "Witt reconstruction");
    if (q.dim() <= 3) v.expect(oracle::equivalent_by_search(rebuilt, q), "Witt reconstruction (search)");
    ++reconstructions;
  }
  for (int t = 0; t < 300; ++t) {
    const Prime p(primes[static_cast<std::size_t>(t) % primes.size()]);
    const int dim = 1 + t % 3;
    const QuadForm a = oracle::random_form(rng, p, dim);
    // Half the pairs are congruent by construction.
    const QuadForm b = t % 2 == 0 ? QuadForm(congruence(a.gram(), oracle::random_congruence(rng, a.dim(), 3)), p)
                                  : oracle::random_form(rng, p, dim);
    const bool by_invariants = determinant_class(a) == determinant_class(b) && hasse_invariant(a) == hasse_invariant(b);
    const bool by_search = oracle::equivalent_by_search(a, b);
    v.expect(equivalent(a, b) == by_invariants, "equivalent() disagrees with (dim, det, Hasse)");
    v.expect(by_search == by_invariants, "search oracle disagrees with (dim, det, Hasse) at dim " + std::to_string(dim));
    if (by_invariants && dim == 2 && oracle::find_integer_congruence(a.gram(), b.gram(), 3)) ++witnesses;
    ++oracle_pairs;
  }
  for (int t = 0; t < 500; ++t) {
    const Prime p(primes[static_cast<std::size_t>(t) % primes.size()]);
    const QuadForm a = oracle::random_form(rng, p, 1 + static_cast<int>(rng.uniform(0, 3)));
    const QuadForm b = oracle::random_form(rng, p, 1 + static_cast<int>(rng.uniform(0, 3)));
    const int expected = hasse_invariant(a) * hasse_invariant(b) *
                         oracle::hilbert_by_search(determinant_class(a).representative(),
                                                   determinant_class(b).representative(), p);
    v.expect(hasse_invariant(direct_sum(a, b)) == expected, "Hasse sum rule");
    ++hasse_pairs;
  }
  std::ostringstream os;
  os << congruences << " congruences, " << oracle_pairs << " equivalence pairs vs search (" << witnesses
     << " explicit integer congruences found), " << reconstructions << " Witt reconstructions, " << hasse_pairs
     << " Hasse pairs";
  v.detail = os.str();
  return v;
}

// ---------------------------------------------------------------------------------------------
// 5

struct Parametrized {
  ClassParameter twisted;
  GSConfiguration config;
};

std::optional<Parametrized> parametrized_fixture(Rng& rng, const Prime& p, int half_dim, int epsilon, bool odd) {
  for (int tries = 0; tries < 1000; ++tries) {
    const EtaleAlgebra l = random_algebra(rng, p, half_dim);
    const AlgebraElement x = random_invertible_element(rng, l, 5);
    if (!l.is_generator(x) || !l.very_regular(x)) continue;
    if (!l.is_generator(l.mul(l.tau(x), l.inverse(x)))) continue;
    ClassParameter param{odd ? ClassKind::TglOdd : ClassKind::TglEven, l, x, {}, {}, {}};
    if (odd) param.extra_square = random_nonzero_rational(rng, 7);
    try {
      GSConfiguration config = config_from_twisted(build_class(param).gram, p, epsilon);
      if (!norm_is_very_regular(config)) continue;
      return Parametrized{std::move(param), std::move(config)};
    } catch (const InvalidArgument&) {
    }
  }
  return std::nullopt;
}

Verdict norm_correspondence() {
  Verdict v;
  const char* kinds[] = {"orthogonal", "symplectic", "odd orthogonal"};
  int fixtures = 0;
  for (std::int64_t pv : {2, 3, 5}) {
    const Prime p(pv);
    for (int kind = 0; kind < 3; ++kind) {
      const int eps = kind == 1 ? -1 : 1;
      const bool odd = kind == 2;
      for (int i = 0; i < 200; ++i) {
        Rng rng = Rng::derive(5000 + static_cast<std::uint64_t>(pv) * 10 + static_cast<std::uint64_t>(kind),
                              static_cast<std::uint64_t>(i));
        const int n = 1 + i % 2;
        const auto fx = parametrized_fixture(rng, p, n, eps, odd);
        const std::string tag = std::string(kinds[kind]) + " p=" + std::to_string(pv) + " #" + std::to_string(i);
        v.expect(fx.has_value(), "no fixture: " + tag);
        if (!fx) continue;
        ++fixtures;
        const GSConfiguration& config = fx->config;
        const EtaleAlgebra& l = fx->twisted.algebra;
        const Matrix gamma = gs_norm(config);
        const std::size_t dim = config.ambient.dim();

        const AlgebraElement ratio = l.mul(l.tau(fx->twisted.element), l.inverse(fx->twisted.element));
        if (odd) {
          v.expect(oracle::faddeev_leverrier(-gamma) ==
                       oracle::faddeev_leverrier(l.mult_matrix(ratio)) * Poly::linear_factor(1),
                   "odd char poly relation: " + tag);
        } else {
          v.expect(oracle::faddeev_leverrier(gamma) ==
                       oracle::faddeev_leverrier(Rational(-eps) * l.mult_matrix(ratio)),
                   "char poly relation: " + tag);
        }
        v.expect(gs_param_check(config, fx->twisted), "gs_param_check: " + tag);

        // Section round trip, and the twist invariant across 10 choices of X.
        const Poly reference = twist_invariant(config.h_to_dual);
        for (int k = 0; k < 10; ++k) {
          const Matrix x = k == 0 ? config.to_dual : random_invertible_matrix(rng, dim, 4);
          const Matrix y = gs_section(config.ambient, x, gamma);
          const GSConfiguration back{config.ambient, x, y};
          v.expect(xy_condition(back) && gs_norm(back) == gamma, "Norm ∘ section: " + tag);
          v.expect(twist_invariant(y) == reference, "twist invariant depends on X: " + tag);
        }
        for (int k = 0; k < 20; ++k) {
          const Matrix g = random_invertible_matrix(rng, dim, 3);
          const GSConfiguration moved{config.ambient, g * config.to_dual, g * config.h_to_dual * g.transpose()};
          v.expect(gs_norm(moved) == gamma, "Norm not g-invariant: " + tag);
        }
      }
    }
  }
  v.detail = std::to_string(fixtures) + " fixtures (200 per p in {2,3,5} and kind), 10 sections and 20 g-actions each";
  return v;
}

// ---------------------------------------------------------------------------------------------
// 6

Verdict separation() {
  Verdict v;
  int scalings = 0, pairs = 0;
  const std::vector<std::int64_t> primes{2, 3, 5, 7};
  for (int i = 0; i < 200; ++i) {
    Rng rng = Rng::derive(6006, static_cast<std::uint64_t>(i));
    const Prime p(primes[static_cast<std::size_t>(i) % primes.size()]);
    const EtaleAlgebra l = random_algebra(rng, p, 1 + i % 3);
    const AlgebraElement a = random_fixed_element(rng, l, 6);
    const AlgebraElement t = random_fixed_element(rng, l, 6);
    const Rational lhs = determinant(l.fixed_trace_form(l.mul(t, a)));
    const Rational rhs = l.fixed_norm(t) * determinant(l.fixed_trace_form(a));
    v.expect(square_class(lhs, p) == square_class(rhs, p), "determinant scaling identity");
    ++scalings;
    // Pairs on field towers, as in the separation argument.
    const EtaleAlgebra fields = random_algebra(rng, p, 1 + i % 3, AlgebraShape{false, true, 2});
    const AlgebraElement c1 = random_fixed_element(rng, fields, 6);
    const AlgebraElement c2 = random_fixed_element(rng, fields, 6);
    v.expect(separation_check(fields, c1, c2), "separation_check");
    v.expect(separation_check(l, a, l.mul(a, l.norm_to_fixed(random_invertible_element(rng, l, 4)))),
             "separation_check on a norm multiple");
    pairs += 2;
  }
  v.detail = std::to_string(scalings) + " determinant-scaling fixtures, " + std::to_string(pairs) + " separation pairs";
  return v;
}

// ---------------------------------------------------------------------------------------------
// 7

Verdict enumeration() {
  Verdict v;
  for (std::int64_t pv : {3, 5, 7, 11, 13}) {
    v.expect(enumerate_elliptic_data(1, Prime(pv)).size() == 4, "2n = 2 count at p=" + std::to_string(pv));
    v.expect(enumerate_elliptic_data(2, Prime(pv)).size() == 8, "2n = 4 count at p=" + std::to_string(pv));
  }
  v.expect(enumerate_elliptic_data(1, Prime(2)).size() == 8, "2n = 2 count at p=2");

  int classified = 0, rejected = 0;
  for (int i = 0; i < 2000; ++i) {
    Rng rng = Rng::derive(7007, static_cast<std::uint64_t>(i));
    const Prime p(rng.pick(std::vector<std::int64_t>{2, 3, 5, 7}));
    const auto classes = square_class_table(p);
    FormalParameter phi;
    int total = 0;
    SquareClass chi(1, p);
    int plus_dim = 0;
    const int count = static_cast<int>(rng.uniform(1, 4));
    for (int c = 0; c < count; ++c) {
      const bool minus = rng.coin();
      const int dim = minus ? 2 * static_cast<int>(rng.uniform(1, 2)) : static_cast<int>(rng.uniform(1, 3));
      const SquareClass det = minus ? SquareClass(1, p) : rng.pick(classes);
      phi.constituents.push_back(FormalConstituent{dim, minus ? SignType::Minus : SignType::Plus, QuadraticAlgebra{det},
                                                   1, "c" + std::to_string(c)});
      total += dim;
    }
    if (total % 2 == 1) {
      phi.constituents.push_back(FormalConstituent{1, SignType::Plus, QuadraticAlgebra{rng.pick(classes)}, 1, "odd"});
    }
    for (const auto& c : phi.constituents)
      if (c.sign == SignType::Plus) {
        plus_dim += c.dim;
        chi = chi * c.det_char.d;
      }
    // A 2-dimensional orthogonal part with trivial determinant is not discrete: no datum exists.
    if (plus_dim == 2 && chi.is_trivial()) {
      bool threw = false;
      try {
        (void)classify(phi);
      } catch (const InvalidArgument&) {
        threw = true;
      }
      v.expect(threw, "classify accepted n_O = 2 with trivial χ");
      ++rejected;
      continue;
    }
    const Classification c = classify(phi);
    const auto data = enumerate_elliptic_data(phi.total_dim() / 2, p);
    v.expect(std::find(data.begin(), data.end(), c.datum) != data.end(), "classification outside the enumeration");
    v.expect(c.datum.orthogonal_dim == plus_dim && c.datum.character.d == chi, "classification rule");
    ++classified;
  }
  v.detail = "counts 4/8 (p odd), 8 (p = 2); " + std::to_string(classified) + " random parameters classified inside " +
             "the enumeration, " + std::to_string(rejected) + " non-discrete ones rejected";
  return v;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  const auto entries = cli::expand(kCorpus);
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"GS constancy over the seeded corpus", [&] { return constancy(entries); }},
      {"eta invariants", eta_invariants},
      {"Hilbert and Weil oracle concordance", oracle_concordance},
      {"form theory", form_theory},
      {"norm correspondence", norm_correspondence},
      {"separation and determinant identity", separation},
      {"elliptic data enumeration", enumeration},
      {"mutation robustness", [&] { return mutation(entries); }},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    all = all && v.pass;
    std::printf("%s criterion %zu: %s: %s [%.1fs]\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                v.detail.c_str(), secs);
    for (const auto& f : v.failures) std::printf("    %s\n", f.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
