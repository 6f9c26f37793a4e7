#include "tendo/cli/app.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tendo/cli/corpus.hpp"
#include "tendo/cli/json_io.hpp"
#include "tendo/error.hpp"
#include "tendo/sampling.hpp"

namespace tendo::cli {
namespace {

struct Outcome {
  Json doc;
  int code = kExitPass;
};

// Every flag any verb may take; each subcommand binds the ones it uses.
struct Options {
  std::string input;
  std::string expr;
  std::string out;
  std::int64_t p = 0;
  int n = 0;
  std::uint64_t seed = 0;
  int count = 10;
  std::vector<std::uint64_t> seeds{0};
  std::vector<std::int64_t> primes{2, 3, 5, 7};
  std::vector<int> ns{1, 2, 3};
  unsigned jobs = 0;
  bool no_timing = false;
  std::vector<std::string> values;
  int depth = 0;
  int level = 0;
  int epsilon = 1;
  std::string character;
  std::string group = "sp";
  std::string y = "1";
  std::string complement = "1";
  bool table = false;
};

class Runner {
 public:
  Runner(std::istream& in, std::ostream& out, std::ostream& err) : in_(in), out_(out), err_(err) {}

  int main(int argc, const char* const* argv);

 private:
  using Handler = std::function<Outcome()>;

  CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& help, Handler handler) {
    CLI::App* sub = parent->add_subcommand(name, help);
    handlers_.emplace_back(sub, std::move(handler));
    return sub;
  }

  void add_input(CLI::App* sub) {
    sub->add_option("input", opt_.input, "Input file ('-' or omitted: standard input)");
    sub->add_option("-e,--expr", opt_.expr, "Inline input literal");
  }
  void add_out(CLI::App* sub) { sub->add_option("--out", opt_.out, "Write the document to this file"); }
  void add_prime(CLI::App* sub, bool required) {
    auto* o = sub->add_option("-p,--p", opt_.p, "Prime");
    if (required) o->required();
  }
  void add_n(CLI::App* sub, bool required) {
    auto* o = sub->add_option("-n,--n", opt_.n, "Half dimension n");
    if (required) o->required();
  }

  void build(CLI::App& app);

  // Input helpers.
  bool has_input() const { return !opt_.expr.empty() || (!opt_.input.empty() && opt_.input != "-"); }
  Json read_input();
  Prime prime() const { return Prime(opt_.p); }
  std::optional<Prime> optional_prime() const {
    return opt_.p == 0 ? std::nullopt : std::optional<Prime>(Prime(opt_.p));
  }
  Rational value_arg(std::size_t i) const;
  void emit(const Json& doc, const std::string& default_name);

  // Verbs.
  Outcome hilbert();
  Outcome sqclass();
  Outcome qform_invariants();
  Outcome qform_equiv();
  Outcome qform_witt();
  Outcome qform_isotropic();
  Outcome weil_index();
  Outcome weil_epsilon();
  Outcome weil_oracle();
  Outcome etale_build();
  Outcome etale_traceform();
  Outcome class_build();
  Outcome class_invariant();
  Outcome class_corresponds();
  Outcome class_elliptic();
  Outcome gs_random();
  Outcome gs_norm();
  Outcome gs_section();
  Outcome gs_verify();
  Outcome endo_enumerate();
  Outcome endo_eta();
  Outcome endo_delta();
  Outcome endo_check();
  Outcome param_classify();
  Outcome param_hypothesis();
  Outcome corpus_generate();
  Outcome corpus_run();

  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  Options opt_;
  std::vector<std::pair<CLI::App*, Handler>> handlers_;
  std::string default_name_;
};

Json Runner::read_input() {
  if (!opt_.expr.empty()) return parse_document(opt_.expr, "<expr>");
  std::ostringstream buf;
  std::string source;
  if (opt_.input.empty() || opt_.input == "-") {
    buf << in_.rdbuf();
    source = "<stdin>";
  } else {
    std::ifstream file(opt_.input, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open input file '" + opt_.input + "'");
    buf << file.rdbuf();
    source = opt_.input;
  }
  return parse_document(buf.str(), source);
}

Rational Runner::value_arg(std::size_t i) const {
  const std::string& text = opt_.values.at(i);
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw ParseError("argument " + std::to_string(i + 1), e.what());
  }
}

std::filesystem::path resolve_out(const std::string& requested, const std::string& default_name) {
  const char* dir = std::getenv("TENDO_OUT_DIR");
  if (!requested.empty()) {
    std::filesystem::path path(requested);
    if (path.is_relative() && dir != nullptr && *dir != '\0') path = std::filesystem::path(dir) / path;
    return path;
  }
  if (!default_name.empty() && dir != nullptr && *dir != '\0') return std::filesystem::path(dir) / default_name;
  return {};
}

void Runner::emit(const Json& doc, const std::string& default_name) {
  const auto path = resolve_out(opt_.out, default_name);
  if (path.empty()) {
    out_ << doc.dump(2) << '\n';
    return;
  }
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidArgument("cannot write '" + path.string() + "'");
  file << doc.dump(2) << '\n';
  err_ << "wrote " << path.string() << '\n';
}

// ---------------------------------------------------------------------------------------
// localfield / qform

Outcome Runner::hilbert() {
  const Prime p = prime();
  const Rational a = value_arg(0);
  const Rational b = value_arg(1);
  require(a != 0 && b != 0, "Hilbert symbol of zero");
  const int symbol = hilbert_qp(a, b, p);
  Outcome o{Json{{"p", p.value()}, {"a", to_json(a)}, {"b", to_json(b)}, {"symbol", symbol}}};
  if (opt_.depth > 0) {
    const Solubility s = solubility_oracle(a, b, LocalField::rationals(p), opt_.depth);
    o.doc["oracle"] = to_string(s);
    if (s == Solubility::Inconclusive) {
      o.code = kExitInconclusive;
    } else if ((s == Solubility::Soluble) != (symbol == 1)) {
      o.code = kExitCheckFailed;
    }
  }
  return o;
}

Outcome Runner::sqclass() {
  const Prime p = prime();
  if (opt_.table) {
    Json rows = Json::array();
    for (const auto& c : square_class_table(p)) rows.push_back(to_json(c));
    return {Json{{"p", p.value()}, {"classes", std::move(rows)}}};
  }
  require(!opt_.values.empty(), "sqclass needs a value or --table");
  const Rational a = value_arg(0);
  require(a != 0, "square class of zero");
  const SquareClass c = square_class(a, p);
  return {Json{{"p", p.value()},
               {"a", to_json(a)},
               {"class", to_json(c)},
               {"index", c.index()},
               {"valuation", valuation(a, p)}}};
}

Outcome Runner::qform_invariants() {
  const QuadForm q = form_from_json(read_input(), "");
  return {Json{{"form", to_json(q)}, {"invariants", to_json(invariants(q))}}};
}

Outcome Runner::qform_equiv() {
  const Json doc = read_input();
  if (!doc.is_array() || doc.size() != 2) throw ParseError("/", "expected a list of two form literals");
  const QuadForm a = form_from_json(doc[0], "/0");
  const QuadForm b = form_from_json(doc[1], "/1");
  return {Json{{"equivalent", equivalent(a, b)},
               {"witt_equivalent", witt_equivalent(a, b)},
               {"invariants", Json::array({to_json(invariants(a)), to_json(invariants(b))})}}};
}

Outcome Runner::qform_witt() {
  const QuadForm q = form_from_json(read_input(), "");
  const auto w = witt_decompose(q);
  Json diag = Json::array();
  for (const auto& a : realize_witt_class(w.kernel)) diag.push_back(to_json(a));
  return {Json{{"witt_index", w.witt_index},
               {"kernel",
                Json{{"aniso_dim", w.kernel.aniso_dim},
                     {"det", to_json(w.kernel.det)},
                     {"hasse", w.kernel.hasse},
                     {"diag", std::move(diag)}}}}};
}

Outcome Runner::qform_isotropic() {
  const QuadForm q = form_from_json(read_input(), "");
  const bool criterion = is_isotropic(q);
  Outcome o{Json{{"isotropic", criterion}}};
  if (opt_.depth > 0) {
    const LocalField field = LocalField::rationals(q.prime());
    std::vector<FieldElement> coeffs;
    for (const auto& a : diagonalize(q).entries) coeffs.push_back(field.from_rational(a));
    const ZeroSearch s = find_isotropic_vector(field, coeffs, opt_.depth);
    o.doc["search"] = to_string(s.status);
    if (s.status == Solubility::Inconclusive) {
      o.code = kExitInconclusive;
    } else if ((s.status == Solubility::Soluble) != criterion) {
      o.code = kExitCheckFailed;
    }
  }
  return o;
}

// ---------------------------------------------------------------------------------------
// weil

Outcome Runner::weil_index() {
  const QuadForm q = form_from_json(read_input(), "");
  return {Json{{"form", to_json(q)}, {"index", to_json(tendo::weil_index(q))}}};
}

Outcome Runner::weil_epsilon() {
  const Prime p = prime();
  require(!opt_.character.empty(), "weil epsilon needs --K d");
  const Rational d = parse_rational(opt_.character);
  require(d != 0, "K = Q_p(sqrt 0)");
  const QuadraticAlgebra k{square_class(d, p)};
  return {Json{{"p", p.value()}, {"K", to_json(k)}, {"epsilon", to_json(epsilon_half(k))}}};
}

Outcome Runner::weil_oracle() {
  const Prime p = prime();
  const Rational a = value_arg(0);
  require(a != 0, "Gauss sum of zero");
  const GaussOracleResult r = opt_.level > 0 ? gauss_oracle(a, p, opt_.level) : gauss_oracle(a, p);
  Outcome o{Json{{"p", p.value()},
                 {"a", to_json(a)},
                 {"level", r.level},
                 {"value", Json::array({r.value.real(), r.value.imag()})},
                 {"next_value", Json::array({r.next_value.real(), r.next_value.imag()})},
                 {"snapped", to_json(r.snapped)},
                 {"snap_distance", r.snap_distance},
                 {"stabilized", r.stabilized}}};
  if (!r.stabilized || r.snap_distance >= kSnapTolerance) {
    o.code = kExitInconclusive;
    return o;
  }
  if (weil_table_row(p)) {
    const Mu8 table = weil_rank1(a, p);
    o.doc["table"] = to_json(table);
    if (table != r.snapped) o.code = kExitCheckFailed;
  } else {
    o.doc["table"] = nullptr;
  }
  return o;
}

// ---------------------------------------------------------------------------------------
// etale / classes

namespace {

struct AlgebraInput {
  EtaleAlgebra algebra;
  std::optional<AlgebraElement> x;
};

AlgebraInput algebra_input(const Json& doc) {
  if (doc.is_array()) return {algebra_from_json(doc, ""), std::nullopt};
  if (!doc.is_object() || !doc.contains("algebra")) throw ParseError("/", "expected an algebra literal");
  EtaleAlgebra algebra = algebra_from_json(doc["algebra"], "/algebra");
  std::optional<AlgebraElement> x;
  if (doc.contains("x")) x = element_from_json(doc["x"], algebra, "/x");
  return {std::move(algebra), std::move(x)};
}

}  // namespace

Outcome Runner::etale_build() {
  const auto [algebra, x] = algebra_input(read_input());
  Json factors = Json::array();
  for (const auto& t : algebra.factors()) {
    factors.push_back(Json{{"base_degree", t.base_degree()},
                           {"ramification", t.base.ramification_index()},
                           {"residue_degree", t.base.residue_degree()},
                           {"split", t.is_split()}});
  }
  Json doc{{"algebra", to_json(algebra)}, {"dim", algebra.dim()}, {"factors", std::move(factors)}};
  if (x) {
    doc["x"] = Json{{"value", to_json(*x)},
                    {"tau", to_json(algebra.tau(*x))},
                    {"trace", to_json(algebra.trace(*x))},
                    {"char_poly", to_json(algebra.char_poly(*x))},
                    {"generator", algebra.is_generator(*x)},
                    {"invertible", algebra.is_invertible(*x)},
                    {"very_regular", algebra.is_invertible(*x) && algebra.very_regular(*x)}};
  }
  return {std::move(doc)};
}

Outcome Runner::etale_traceform() {
  const auto [algebra, x] = algebra_input(read_input());
  if (!x) throw ParseError("/", "traceform needs an element \"x\"");
  const Matrix gram = algebra.trace_form(*x);
  Json doc{{"gram", to_json(gram)}, {"symmetric", gram.is_symmetric()}};
  if (algebra.is_fixed(*x) && algebra.is_invertible(*x)) {
    doc["invariants"] = to_json(invariants(algebra.trace_form_quadratic(*x)));
  }
  return {std::move(doc)};
}

Outcome Runner::class_build() {
  const ClassParameter param = class_param_from_json(read_input(), "");
  const ClassRepresentative rep = build_class(param);
  Json doc{{"kind", to_string(rep.kind)}, {"gram", to_json(rep.gram)}};
  if (rep.group_element) doc["group_element"] = to_json(*rep.group_element);
  if (rep.complex_structure) doc["complex_structure"] = to_json(*rep.complex_structure);
  return {std::move(doc)};
}

Outcome Runner::class_invariant() {
  const ClassParameter param = class_param_from_json(read_input(), "");
  const ClassInvariant inv = tendo::class_invariant(param);
  Json doc{{"kind", to_string(inv.kind)},
           {"char_poly", to_json(inv.char_poly)},
           {"very_regular", is_very_regular(param)},
           {"elliptic", is_elliptic(param)}};
  if (inv.extra) doc["extra"] = to_json(*inv.extra);
  return {std::move(doc)};
}

Outcome Runner::class_corresponds() {
  const Json doc = read_input();
  if (!doc.is_object() || !doc.contains("twisted") || !doc.contains("orthogonal")) {
    throw ParseError("/", "expected {\"twisted\": param, \"orthogonal\": param}");
  }
  const ClassParameter twisted = class_param_from_json(doc["twisted"], "/twisted");
  const ClassParameter orthogonal = class_param_from_json(doc["orthogonal"], "/orthogonal");
  return {Json{{"corresponds", corresponds(twisted, orthogonal)}}};
}

Outcome Runner::class_elliptic() {
  const ClassParameter param = class_param_from_json(read_input(), "");
  return {Json{{"elliptic", is_elliptic(param)}}};
}

// ---------------------------------------------------------------------------------------
// gsnorm

Outcome Runner::gs_random() {
  const Prime p = prime();
  require(opt_.n >= 1, "gs random needs -n >= 1");
  Rng rng(opt_.seed);
  if (opt_.epsilon == 1) {
    const auto chars = constancy_characters(p, opt_.n);
    QuadraticAlgebra k = chars.front();
    if (!opt_.character.empty()) k = QuadraticAlgebra{square_class(parse_rational(opt_.character), p)};
    const ConstancyFixture f = constancy_fixture(p, opt_.n, k, rng);
    return {Json{{"config", to_json(f.config)}, {"K", to_json(f.character)}, {"scale", to_json(f.scale)}}};
  }
  require(opt_.epsilon == -1, "--epsilon must be 1 or -1");
  const AmbientSpace ambient = make_ambient(theta_gram(opt_.n), p, -1);
  return {Json{{"config", to_json(random_config(ambient, rng))}}};
}

Outcome Runner::gs_norm() {
  const GSConfiguration config = config_from_json(read_input(), "");
  if (!is_admissible(config)) return {Json{{"admissible", false}}, kExitCheckFailed};
  const Matrix norm = tendo::gs_norm(config);
  return {Json{{"admissible", true},
               {"norm", to_json(norm)},
               {"char_poly", to_json(char_poly(norm))},
               {"very_regular", norm_is_very_regular(config)}}};
}

Outcome Runner::gs_section() {
  const Json doc = read_input();
  const AmbientSpace ambient = ambient_from_json(doc.contains("ambient") ? doc["ambient"] : Json(), "/ambient");
  const Matrix x = matrix_from_json(doc.value("X", Json()), "/X");
  const Matrix gamma = matrix_from_json(doc.value("gamma", Json()), "/gamma");
  const Matrix y = tendo::gs_section(ambient, x, gamma);
  const GSConfiguration config{ambient, x, y};
  const bool round_trip = is_admissible(config) && tendo::gs_norm(config) == gamma;
  return {Json{{"Y", to_json(y)}, {"config", to_json(config)}, {"round_trip", round_trip}},
          round_trip ? kExitPass : kExitCheckFailed};
}

Outcome Runner::gs_verify() {
  const Json doc = read_input();
  const bool wrapped = doc.is_object() && doc.contains("config");
  const GSConfiguration config = config_from_json(wrapped ? doc["config"] : doc, wrapped ? "/config" : "");
  const bool admissible = is_admissible(config);
  Json out{{"admissible", admissible}, {"xy_condition", xy_condition(config)}};
  if (!admissible) return {std::move(out), kExitCheckFailed};
  const bool regular = norm_is_very_regular(config);
  out["very_regular"] = regular;
  int code = kExitPass;
  if (wrapped && doc.contains("param")) {
    const ClassParameter twisted = class_param_from_json(doc["param"], "/param");
    const bool ok = gs_param_check(config, twisted);
    out["param_check"] = ok;
    if (!ok) code = kExitCheckFailed;
  }
  return {std::move(out), code};
}

// ---------------------------------------------------------------------------------------
// endoscopy / params

Outcome Runner::endo_enumerate() {
  const Prime p = prime();
  const auto data = enumerate_elliptic_data(opt_.n, p);
  Json list = Json::array();
  for (const auto& d : data) list.push_back(to_json(d));
  return {Json{{"p", p.value()}, {"n", opt_.n}, {"count", data.size()}, {"data", std::move(list)}}};
}

Outcome Runner::endo_eta() {
  const Prime p = prime();
  require(opt_.n >= 1, "endo eta needs -n >= 1");
  if (opt_.group == "sp") {
    const SquareClass eta = eta_sp(opt_.n, p);
    return {Json{{"group", "sp"}, {"n", opt_.n}, {"eta", to_json(eta)}, {"expected", "1"}},
            eta.is_trivial() ? kExitPass : kExitCheckFailed};
  }
  require(opt_.group == "so", "--group must be sp or so");
  const Rational y = parse_rational(opt_.y);
  const Rational z = parse_rational(opt_.complement);
  require(y != 0 && z != 0, "binary part must be non-degenerate");
  const QuadForm binary = QuadForm::diagonal({y, z}, p);
  const SquareClass eta = eta_so(binary, y, opt_.n);
  const SquareClass expected = square_class((opt_.n % 2 == 1 ? 1 : -1) * y, p);
  return {Json{{"group", "so"},
               {"n", opt_.n},
               {"y", to_json(y)},
               {"binary", to_json(binary)},
               {"eta", to_json(eta)},
               {"expected", to_json(expected)}},
          eta == expected ? kExitPass : kExitCheckFailed};
}

Outcome Runner::endo_delta() {
  const Json doc = read_input();
  const QuadForm space = form_from_json(doc.contains("qV") ? doc["qV"] : Json(), "/qV");
  const Matrix delta = matrix_from_json(doc.value("delta", Json()), "/delta");
  require(space.dim() % 2 == 0, "orthogonal space must have even dimension");
  const int n = static_cast<int>(space.dim() / 2);
  return {Json{{"n", n},
               {"K", to_json(discriminant_algebra(space))},
               {"delta", transfer_factor(space, delta, n)},
               {"whittaker", to_json(transfer_factor_whittaker(space, delta, n))}}};
}

Outcome Runner::endo_check() {
  const GSConfiguration config = config_from_json(read_input(), "");
  const ConstancyResult r = gs_constancy_check(config);
  Json doc{{"pass", r.passed}, {"lhs", to_json(r.lhs)}, {"rhs", to_json(r.rhs)}};
  if (r.character) doc["K"] = to_json(*r.character);
  if (!r.reason.empty()) doc["reason"] = r.reason;
  return {std::move(doc), r.passed ? kExitPass : kExitCheckFailed};
}

Outcome Runner::param_classify() {
  const FormalParameter param = formal_param_from_json(read_input(), optional_prime(), "");
  const Classification c = classify(param);
  const int half = param.total_dim() / 2;
  const Prime p = c.datum.character.prime();
  bool listed = false;
  for (const auto& d : enumerate_elliptic_data(half, p)) listed = listed || d == c.datum;
  return {Json{{"param", to_json(param)},
               {"datum", to_json(c.datum)},
               {"minus_count", c.minus_count},
               {"count_differs_from_dim", c.count_differs_from_dim()},
               {"elliptic", is_elliptic_param(param)},
               {"in_enumeration", listed}}};
}

Outcome Runner::param_hypothesis() {
  const FormalParameter param = formal_param_from_json(read_input(), optional_prime(), "");
  return {Json{{"param", to_json(param)}, {"from_even_so", hypothesis_even_so(param)}}};
}

// ---------------------------------------------------------------------------------------
// corpus

Outcome Runner::corpus_generate() {
  const CorpusSpec spec{opt_.seeds, opt_.primes, opt_.ns, opt_.count};
  default_name_ = "corpus-" + std::to_string(spec.seeds.front()) + ".json";
  return {corpus_document(spec, expand(spec))};
}

Outcome Runner::corpus_run() {
  CorpusSpec spec{opt_.seeds, opt_.primes, opt_.ns, opt_.count};
  std::vector<CorpusEntry> entries;
  if (has_input()) {
    entries = entries_from_document(read_input(), spec);
  } else {
    entries = expand(spec);
  }
  default_name_ = "manifest-" + std::to_string(spec.seeds.empty() ? 0 : spec.seeds.front()) + ".json";
  RunOptions options;
  options.jobs = opt_.jobs;
  options.timing = !opt_.no_timing;
  const auto records = run_entries(entries, options);
  bool all = true;
  for (const auto& r : records) all = all && r.passed;
  return {manifest_document(spec, records, options.timing), all ? kExitPass : kExitCheckFailed};
}

// ---------------------------------------------------------------------------------------

void Runner::build(CLI::App& app) {
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every verb");

  auto* h = leaf(&app, "hilbert", "Hilbert symbol (a, b) over Q_p", [this] { return hilbert(); });
  add_prime(h, true);
  h->add_option("values", opt_.values, "a b")->expected(2)->required();
  h->add_option("--oracle-depth", opt_.depth, "Cross-check with the lifting search to this depth");
  add_out(h);

  auto* s = leaf(&app, "sqclass", "Square class of a in Q_p^x/Q_p^x2", [this] { return sqclass(); });
  add_prime(s, true);
  s->add_option("values", opt_.values, "a")->expected(1);
  s->add_flag("--table", opt_.table, "List all square classes");
  add_out(s);

  auto* q = app.add_subcommand("qform", "Quadratic form queries")->require_subcommand(1);
  for (auto* sub : {leaf(q, "invariants", "dim, det, d±, Hasse, Witt index", [this] { return qform_invariants(); }),
                    leaf(q, "equiv", "Equivalence of two forms [a, b]", [this] { return qform_equiv(); }),
                    leaf(q, "witt", "Witt decomposition", [this] { return qform_witt(); })}) {
    add_input(sub);
    add_out(sub);
  }
  auto* iso = leaf(q, "isotropic", "Isotropy by the criterion (and search)", [this] { return qform_isotropic(); });
  add_input(iso);
  add_out(iso);
  iso->add_option("--depth", opt_.depth, "Also run the lifting search to this depth");

  auto* w = app.add_subcommand("weil", "Weil indices")->require_subcommand(1);
  auto* wi = leaf(w, "index", "Weil index of a form", [this] { return weil_index(); });
  add_input(wi);
  add_out(wi);
  auto* we = leaf(w, "epsilon", "epsilon(1/2, chi_K, psi)", [this] { return weil_epsilon(); });
  add_prime(we, true);
  we->add_option("--K", opt_.character, "K = Q_p(sqrt d)")->required();
  add_out(we);
  auto* wo = leaf(w, "oracle", "Gauss-sum oracle for <a> against the table", [this] { return weil_oracle(); });
  add_prime(wo, true);
  wo->add_option("values", opt_.values, "a")->expected(1)->required();
  wo->add_option("--level", opt_.level, "Truncation level (default: minimal stable level)");
  add_out(wo);

  auto* e = app.add_subcommand("etale", "Etale algebras with involution")->require_subcommand(1);
  for (auto* sub : {leaf(e, "build", "Structure of an algebra (and element)", [this] { return etale_build(); }),
                    leaf(e, "traceform", "Trace form tr(tau(v) v' x)", [this] { return etale_traceform(); })}) {
    add_input(sub);
    add_out(sub);
  }

  auto* c = app.add_subcommand("class", "Stable conjugacy class parameters")->require_subcommand(1);
  for (auto* sub : {leaf(c, "build", "Matrix representative", [this] { return class_build(); }),
                    leaf(c, "invariant", "Comparable class invariant", [this] { return class_invariant(); }),
                    leaf(c, "corresponds", "Twisted/orthogonal correspondence",
                         [this] { return class_corresponds(); }),
                    leaf(c, "elliptic", "Ellipticity", [this] { return class_elliptic(); })}) {
    add_input(sub);
    add_out(sub);
  }

  auto* g = app.add_subcommand("gs", "Norm correspondence")->require_subcommand(1);
  auto* gr = leaf(g, "random", "Seeded random configuration", [this] { return gs_random(); });
  add_prime(gr, true);
  add_n(gr, true);
  gr->add_option("--seed", opt_.seed, "Seed");
  gr->add_option("--epsilon", opt_.epsilon, "1 (orthogonal) or -1 (symplectic)");
  gr->add_option("--K", opt_.character, "Discriminant character d for the orthogonal fixture");
  add_out(gr);
  for (auto* sub : {leaf(g, "norm", "Norm of a configuration", [this] { return gs_norm(); }),
                    leaf(g, "section", "Y from (ambient, X, gamma)", [this] { return gs_section(); }),
                    leaf(g, "verify", "Admissibility, regularity and parameter check", [this] { return gs_verify(); })}) {
    add_input(sub);
    add_out(sub);
  }

  auto* en = app.add_subcommand("endo", "Endoscopic data and transfer factors")->require_subcommand(1);
  auto* ee = leaf(en, "enumerate", "Elliptic endoscopic data of tGL(2n)", [this] { return endo_enumerate(); });
  add_prime(ee, true);
  add_n(ee, true);
  add_out(ee);
  auto* et = leaf(en, "eta", "Nilpotent invariants eta", [this] { return endo_eta(); });
  add_prime(et, true);
  add_n(et, true);
  et->add_option("--group", opt_.group, "sp or so")->check(CLI::IsMember({"sp", "so"}));
  et->add_option("--y", opt_.y, "Represented value y (so)");
  et->add_option("--complement", opt_.complement, "Second entry of the binary part <y, z> (so)");
  add_out(et);
  for (auto* sub : {leaf(en, "delta", "Transfer factor of {qV, delta}", [this] { return endo_delta(); }),
                    leaf(en, "check", "Constancy check on a configuration", [this] { return endo_check(); })}) {
    add_input(sub);
    add_out(sub);
  }

  auto* pa = app.add_subcommand("param", "Formal parameters")->require_subcommand(1);
  for (auto* sub : {leaf(pa, "classify", "Endoscopic datum of a parameter", [this] { return param_classify(); }),
                    leaf(pa, "hypothesis", "Irreducible parameter from an even orthogonal group",
                         [this] { return param_hypothesis(); })}) {
    add_input(sub);
    add_prime(sub, false);
    add_out(sub);
  }

  auto* co = app.add_subcommand("corpus", "Seeded constancy corpus")->require_subcommand(1);
  auto* cg = leaf(co, "generate", "Write a corpus file", [this] { return corpus_generate(); });
  auto* cr = leaf(co, "run", "Check a corpus and write the manifest", [this] { return corpus_run(); });
  for (auto* sub : {cg, cr}) {
    sub->add_option("--seed", opt_.seeds, "Seed list")->delimiter(',');
    sub->add_option("-p,--p", opt_.primes, "Prime list")->delimiter(',');
    sub->add_option("-n,--n", opt_.ns, "Half-dimension list")->delimiter(',');
    sub->add_option("--count", opt_.count, "Entries per (seed, p, n)");
    add_out(sub);
  }
  add_input(cr);
  cr->add_option("--jobs", opt_.jobs, "Worker threads (0: all cores)");
  cr->add_flag("--no-timing", opt_.no_timing, "Omit timing fields");
}

int Runner::main(int argc, const char* const* argv) {
  CLI::App app{"Exact p-adic computations for twisted endoscopy", "tendo"};
  build(app);
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err_ << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  for (const auto& [sub, handler] : handlers_) {
    if (!sub->parsed()) continue;
    try {
      const Outcome o = handler();
      emit(o.doc, default_name_);
      return o.code;
    } catch (const ParseError& ex) {
      err_ << ex.what() << '\n';
      return kExitUsage;
    } catch (const InvalidArgument& ex) {
      err_ << ex.what() << '\n';
      return kExitUsage;
    } catch (const Unsupported& ex) {
      err_ << ex.what() << '\n';
      return kExitUsage;
    } catch (const nlohmann::json::exception& ex) {
      err_ << "parse error: " << ex.what() << '\n';
      return kExitUsage;
    } catch (const std::exception& ex) {
      err_ << "error: " << ex.what() << '\n';
      return kExitCheckFailed;
    }
  }
  err_ << "usage error: no verb selected\n";
  return kExitUsage;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Runner runner(in, out, err);
  return runner.main(argc, argv);
}

}  // namespace tendo::cli
