#pragma once

// Subcommand dispatch for the wlpkit command line. Exit codes: 0 success
// (verdicts live in the output), 1 usage or input error, 2 computation error,
// 3 example or experiment mismatch.

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"

namespace wlpkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitComputation = 2;
inline constexpr int kExitMismatch = 3;

struct Invocation {
  std::string ring;
  std::string ideal;
  std::string gens;
  std::string form;
  std::string format = "text";
  std::size_t samples = kDefaultSamples;
  std::uint64_t seed = kDefaultSeed;
  std::uint64_t bound = kDefaultBound;
  bool exhaustive = false;
  bool shortcut = false;
  int cap = kDefaultCap;

  bool differential = false;
  bool annihilator = false;
  bool with_wlp = false;
  bool allow_positive_char = false;

  std::string kind;
  std::int64_t n = 0;
  std::int64_t d = 0;
  std::int64_t s = -1;
  std::string sequence;
  std::string action;
  std::string name;
  std::size_t trials = 0;
  int e_max = 10;
  int e = 4;
  unsigned threads = 0;
};

namespace detail {

inline Format format_of(const Invocation& inv) { return inv.format == "json" ? Format::json : Format::text; }

inline void emit(std::ostream& out, const std::string& command, const Json& body) {
  out << envelope(command, body).dump(2) << '\n';
}

inline SamplingOptions sampling_of(const Invocation& inv) {
  SamplingOptions o;
  o.num_samples = inv.samples;
  o.seed = inv.seed;
  o.bound = inv.bound;
  o.force_exhaustive = inv.exhaustive;
  return o;
}

inline LefschetzOptions lefschetz_of(const Invocation& inv, const Ring& ring) {
  LefschetzOptions o;
  o.sampling = sampling_of(inv);
  o.use_level_shortcut = inv.shortcut;
  if (!inv.form.empty()) {
    HomogeneousForm L = parse_poly(ring, inv.form);
    if (L.degree() != 1) throw Error(Errc::invalid_argument, "--form must be a linear form");
    o.forms.push_back(LinearForm::given(L));
  }
  return o;
}

inline std::vector<std::int64_t> parse_sequence(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')') ? ' ' : c;
  std::stringstream ss(cleaned);
  std::string item;
  std::size_t pos = 0;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      throw ParseError(pos, "expected an integer");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos) throw ParseError(pos + used, "expected ','");
    pos += item.size() + 1;
  }
  if (out.empty()) throw ParseError(0, "empty sequence");
  return out;
}

inline QuotientAlgebra algebra_of(const Invocation& inv) {
  const Ring ring = parse_ring(inv.ring);
  return QuotientAlgebra(GradedIdeal(ring, parse_form_list(ring, inv.ideal)), inv.cap);
}

// --- subcommands ------------------------------------------------------------

inline int run_hilbert(const Invocation& inv, const std::string& command, std::ostream& out) {
  const QuotientAlgebra A = algebra_of(inv);
  std::optional<ExactSequenceCheck> seq;
  if (!inv.form.empty()) seq = check_exact_sequence(A, parse_poly(A.ring(), inv.form));
  if (format_of(inv) == Format::json) {
    Json body = algebra_json(A);
    if (seq) body["exact_sequence"] = to_json(*seq);
    emit(out, command, body);
    return kExitOk;
  }
  print_algebra(out, A);
  if (command == "socle") {
    out << "minimal generators by degree:";
    const Json gens = generator_degrees(A);
    for (const auto& [deg, k] : gens.items()) out << ' ' << deg << ':' << k.get<std::size_t>();
    out << '\n';
  }
  if (seq) print_exact_sequence(out, *seq);
  return kExitOk;
}

inline int run_lefschetz(const Invocation& inv, bool strong, std::ostream& out) {
  const QuotientAlgebra A = algebra_of(inv);
  const LefschetzOptions o = lefschetz_of(inv, A.ring());
  const LefschetzReport r = strong ? slp_check(A, o) : wlp_check(A, o);
  if (format_of(inv) == Format::json) {
    emit(out, strong ? "slp" : "wlp", to_json(r));
  } else {
    print_report(out, r);
  }
  return kExitOk;
}

inline int run_dual(const Invocation& inv, std::ostream& out) {
  const Ring dual = parse_ring(inv.ring);
  const DualModule M = build_dual(dual, inv.gens, inv.differential ? Pairing::differentiation : Pairing::contraction);
  const QuotientAlgebra A = algebra_from_dual(M, inv.cap);
  std::optional<LefschetzReport> wlp;
  if (inv.with_wlp) wlp = wlp_check(A, lefschetz_of(inv, A.ring()));
  std::vector<std::string> ann;
  if (inv.annihilator) {
    for (const auto& g : A.ideal().generators()) ann.push_back(g.to_string());
  }
  if (format_of(inv) == Format::json) {
    Json body = algebra_json(A);
    body["dual_ring"] = dual->to_string();
    body["pairing"] = inv.differential ? "differentiation" : "contraction";
    body["dual_hilbert"] = to_json(dual_hilbert(M));
    if (inv.annihilator) body["annihilator_generators"] = ann;
    if (wlp) body["wlp"] = to_json(*wlp);
    emit(out, "dual", body);
    return kExitOk;
  }
  out << "pairing: " << (inv.differential ? "differentiation" : "contraction") << '\n';
  out << "dual hilbert: " << dual_hilbert(M).to_string() << '\n';
  print_algebra(out, A);
  if (inv.annihilator) {
    out << "annihilator generators:\n";
    for (const auto& g : ann) out << "  " << g << '\n';
  }
  if (wlp) print_report(out, *wlp);
  return kExitOk;
}

inline int run_bounds(const Invocation& inv, std::ostream& out) {
  if (inv.n < 0 || inv.d < 1) throw Error(Errc::invalid_argument, "bounds need n >= 0 and d >= 1");
  std::int64_t value = 0;
  if (inv.kind == "macaulay") {
    value = macaulay_bound(inv.n, inv.d);
  } else if (inv.kind == "green") {
    value = green_bound(inv.n, inv.d);
  } else {
    if (inv.s < 0) throw Error(Errc::invalid_argument, "gotzmann needs the step s");
    value = gotzmann_growth(inv.n, inv.d, inv.s);
  }
  const BinomialExpansion ex = binomial_expansion(inv.n, inv.d);
  if (format_of(inv) == Format::json) {
    Json terms = Json::array();
    for (const auto& t : ex.terms) terms.push_back(Json{{"top", t.top}, {"bottom", t.bottom}});
    Json body{{"kind", inv.kind}, {"n", inv.n}, {"d", inv.d}, {"value", value}, {"expansion", terms}};
    body["s"] = inv.kind == "gotzmann" ? Json(inv.s) : Json(nullptr);
    emit(out, "bounds", body);
    return kExitOk;
  }
  out << inv.n << " = " << ex.to_string() << '\n';
  out << inv.kind << " bound: " << value << '\n';
  return kExitOk;
}

inline int run_oseq(const Invocation& inv, std::ostream& out) {
  const HilbertSeq h(parse_sequence(inv.sequence));
  Json body{{"sequence", to_json(h)}};
  if (inv.action == "check") {
    body["o_sequence"] = is_o_sequence(h);
    body["differentiable"] = is_differentiable(h);
    body["symmetric"] = is_symmetric(h);
    body["unimodal"] = is_unimodal(h);
    body["first_difference"] = first_difference(h);
  } else {
    body["si_sequence"] = is_si_sequence(h);
    body["symmetric"] = is_symmetric(h);
  }
  if (format_of(inv) == Format::json) {
    emit(out, "oseq", body);
    return kExitOk;
  }
  out << "sequence: " << h.to_string() << '\n';
  for (const auto& [key, v] : body.items()) {
    if (key == "sequence") continue;
    out << key << ": " << (v.is_boolean() ? (v.get<bool>() ? "yes" : "no") : v.dump()) << '\n';
  }
  return kExitOk;
}

inline int run_examples(const Invocation& inv, std::ostream& out) {
  const bool json = format_of(inv) == Format::json;
  if (inv.action == "list") {
    if (json) {
      Json list = Json::array();
      for (const auto& r : catalog()) list.push_back(to_json(r));
      emit(out, "examples", list);
    } else {
      for (const auto& r : catalog()) out << r.name << "  " << r.hilbert.to_string() << "  " << r.description << '\n';
    }
    return kExitOk;
  }
  std::vector<ExampleResult> results;
  if (inv.action == "run") {
    if (inv.name.empty()) throw Error(Errc::invalid_argument, "examples run needs a name");
    results.push_back(run_example(inv.name, sampling_of(inv)));
  } else {
    for (const auto& r : catalog()) results.push_back(run_record(r, sampling_of(inv)));
  }
  bool ok = true;
  Json list = Json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (json) {
      list.push_back(to_json(r));
    } else {
      print_example(out, r);
    }
  }
  if (json) emit(out, "examples", Json{{"all_passed", ok}, {"results", list}});
  return ok ? kExitOk : kExitMismatch;
}

inline int run_experiment(const Invocation& inv, std::ostream& out) {
  ExperimentReport r;
  if (inv.kind == "init-deg2") {
    r = experiment_init_deg2(inv.trials ? inv.trials : 100, inv.e_max, inv.seed, inv.threads);
  } else if (inv.kind == "small-s") {
    r = experiment_small_s(inv.trials ? inv.trials : 50, inv.seed, inv.threads);
  } else if (inv.kind == "socle-bounds") {
    r = experiment_socle_bounds(inv.seed, inv.trials ? inv.trials : 10, inv.threads);
  } else {
    r = probe_open_question(inv.trials ? inv.trials : 10, inv.e, inv.seed, inv.threads);
  }
  if (format_of(inv) == Format::json) {
    emit(out, "experiment", to_json(r));
  } else {
    print_experiment(out, r);
  }
  return r.expectation_met ? kExitOk : kExitMismatch;
}

inline int run_gcd_criterion(const Invocation& inv, std::ostream& out) {
  const Ring ring = parse_ring(inv.ring);
  const GradedIdeal J(ring, parse_form_list(ring, inv.ideal));
  const GcdCriterionResult g = gcd_criterion_check(J, lefschetz_of(inv, ring), inv.allow_positive_char);
  if (format_of(inv) == Format::json) {
    emit(out, "gcd-criterion", to_json(g));
    return kExitOk;
  }
  out << "generator degrees: a = " << g.a << ", b = " << g.b << '\n';
  out << "dim of quotient by J + (L): " << g.quotient_dim << " (min over " << g.num_forms << " forms)\n";
  out << "gcd of degree-b generators: " << g.gcd.to_string() << " (degree " << g.gcd_degree << ")\n";
  out << "criterion consistent: " << (g.consistent ? "yes" : "NO") << '\n';
  return kExitOk;
}

inline bool is_input_error(Errc code) {
  switch (code) {
    case Errc::parse_error:
    case Errc::non_prime_modulus:
    case Errc::not_homogeneous:
    case Errc::unknown_example:
    case Errc::invalid_argument:
    case Errc::not_standard:
      return true;
    default:
      return false;
  }
}

}  // namespace detail

inline int main_dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Invocation inv;
  CLI::App app{"Hilbert functions, socles and Lefschetz properties of graded artinian algebras", "wlpkit"};
  app.require_subcommand(1);

  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", inv.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  auto add_cap = [&](CLI::App* sub) {
    sub->add_option("--cap", inv.cap, "Degree cap for artinian detection")->envname("WLP_CAP")->check(CLI::Range(1, 4096));
  };
  auto add_sampling = [&](CLI::App* sub) {
    sub->add_option("--samples", inv.samples, "Random linear forms to try")->check(CLI::Range(1, 1000));
    sub->add_option("--seed", inv.seed, "Sampling seed")->envname("WLP_SEED");
    sub->add_option("--bound", inv.bound, "Coefficient bound for sampled forms")->check(CLI::Range(1ULL, 1ULL << 62));
    sub->add_flag("--exhaustive", inv.exhaustive, "Enumerate every projective linear form (finite fields)");
  };
  auto add_algebra = [&](CLI::App* sub) {
    sub->add_option("--ring", inv.ring, "Ring, e.g. QQ[x,y,z] or GF(2)[x1,x2,x3]")->required();
    sub->add_option("--ideal", inv.ideal, "Comma-separated homogeneous generators")->required();
    add_cap(sub);
    add_format(sub);
  };

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function and classification of R/I");
  add_algebra(hilbert);
  hilbert->add_option("--form", inv.form, "Also tabulate the exact sequence for multiplication by this form");

  CLI::App* socle = app.add_subcommand("socle", "Socle dimensions and minimal generator degrees of R/I");
  add_algebra(socle);

  CLI::App* wlp = app.add_subcommand("wlp", "Weak Lefschetz check with certificate");
  CLI::App* slp = app.add_subcommand("slp", "Strong Lefschetz check with certificate");
  for (CLI::App* sub : {wlp, slp}) {
    add_algebra(sub);
    add_sampling(sub);
    sub->add_option("--form", inv.form, "Use this linear form instead of sampling");
    sub->add_flag("--shortcut", inv.shortcut, "Use the level-algebra shortcut (WLP only)");
  }

  CLI::App* dual = app.add_subcommand("dual", "Algebra defined by an inverse system");
  dual->add_option("--ring", inv.ring, "Dual ring, e.g. QQ[y1,y2,y3]")->required();
  dual->add_option("--gens", inv.gens, "Comma-separated dual generators")->required();
  dual->add_flag("--differential", inv.differential, "Generators act by differentiation (default: contraction)");
  dual->add_flag("--annihilator", inv.annihilator, "List minimal generators of the annihilator");
  dual->add_flag("--wlp", inv.with_wlp, "Run the weak Lefschetz check");
  dual->add_option("--form", inv.form, "Linear form for --wlp instead of sampling");
  add_sampling(dual);
  add_cap(dual);
  add_format(dual);

  CLI::App* bounds = app.add_subcommand("bounds", "Macaulay, Green and Gotzmann bounds");
  bounds->add_option("kind", inv.kind)->required()->check(CLI::IsMember({"macaulay", "green", "gotzmann"}));
  bounds->add_option("n", inv.n)->required();
  bounds->add_option("d", inv.d)->required();
  bounds->add_option("s", inv.s);
  add_format(bounds);

  CLI::App* oseq = app.add_subcommand("oseq", "O-sequence and SI-sequence tests");
  oseq->add_option("action", inv.action)->required()->check(CLI::IsMember({"check", "si"}));
  oseq->add_option("sequence", inv.sequence, "e.g. \"1,3,6,6,2\"")->required();
  add_format(oseq);

  CLI::App* examples = app.add_subcommand("examples", "Reference example catalog");
  examples->add_option("action", inv.action)->required()->check(CLI::IsMember({"list", "run", "run-all"}));
  examples->add_option("name", inv.name);
  add_sampling(examples);
  add_format(examples);

  CLI::App* experiment = app.add_subcommand("experiment", "Seeded randomized experiments");
  experiment->add_option("kind", inv.kind)->required()->check(CLI::IsMember({"init-deg2", "small-s", "socle-bounds", "probe"}));
  experiment->add_option("--trials", inv.trials, "Trials (socle-bounds: trials per shape)");
  experiment->add_option("--seed", inv.seed, "Base seed; trial i uses seed + i")->envname("WLP_SEED");
  experiment->add_option("--e-max", inv.e_max, "Largest socle degree (init-deg2)")->check(CLI::Range(3, 10));
  experiment->add_option("--e", inv.e, "Socle degree (probe)")->check(CLI::Range(2, 12));
  experiment->add_option("--threads", inv.threads, "Worker threads, 0 for all cores");
  add_format(experiment);

  CLI::App* gcd = app.add_subcommand("gcd-criterion", "Compare the gcd criterion with a direct computation");
  gcd->add_option("--ring", inv.ring, "Ring, e.g. QQ[x,y,z]")->required();
  gcd->add_option("--ideal", inv.ideal, "Three generators: one of degree a, two of degree b")->required();
  gcd->add_flag("--allow-positive-char", inv.allow_positive_char, "Run over GF(p) anyway");
  add_sampling(gcd);
  add_format(gcd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (hilbert->parsed()) return detail::run_hilbert(inv, "hilbert", out);
    if (socle->parsed()) return detail::run_hilbert(inv, "socle", out);
    if (wlp->parsed()) return detail::run_lefschetz(inv, false, out);
    if (slp->parsed()) return detail::run_lefschetz(inv, true, out);
    if (dual->parsed()) return detail::run_dual(inv, out);
    if (bounds->parsed()) return detail::run_bounds(inv, out);
    if (oseq->parsed()) return detail::run_oseq(inv, out);
    if (examples->parsed()) return detail::run_examples(inv, out);
    if (experiment->parsed()) return detail::run_experiment(inv, out);
    if (gcd->parsed()) return detail::run_gcd_criterion(inv, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return detail::is_input_error(e.code()) ? kExitUsage : kExitComputation;
  }
  return kExitUsage;
}

}  // namespace wlpkit::cli
