// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Each check prints the counts it observed.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "hyperres/cli.hpp"
#include "hyperres/lexmachine.hpp"
#include "hyperres/macaulay.hpp"
#include "hyperres/parse.hpp"
#include "hyperres/reduction.hpp"
#include "hyperres/restriction.hpp"
#include "hyperres/toric.hpp"
#include "oracles.hpp"

using namespace hyperres;

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// 1. Macaulay representations, the lower operator and the binomial identity.
Outcome macaulay_suite() {
  const auto start = Clock::now();
  std::size_t failures = 0;
  for (long c = 0; c <= 10000; ++c)
    for (unsigned d = 1; d <= 6; ++d) {
      auto rep = macaulay_rep(c, d);
      if (rep.evaluate() != c) ++failures;
      for (std::size_t i = 1; i < rep.coeffs.size(); ++i)
        if (rep.coeffs[i - 1] <= rep.coeffs[i]) ++failures;
    }
  for (long c = 0; c <= 300; ++c)
    for (unsigned d = 1; d <= 4; ++d) {
      std::size_t greedy = 0;
      bool matches = false;
      for (const auto& s : oracle::all_macaulay_sequences(c, d)) {
        if (!oracle::is_greedy_maximal(s, c)) continue;
        ++greedy;
        auto rep = macaulay_rep(c, d);
        matches = true;
        for (unsigned j = 0; j < d; ++j) matches = matches && rep.coeffs[j] == s[j];
      }
      if (greedy != 1 || !matches) ++failures;
    }
  for (unsigned d = 1; d <= 4; ++d)
    for (long c = 1; c <= 500; ++c)
      if (macaulay_lower(c - 1, d) > macaulay_lower(c, d)) ++failures;
  for (long i = 1; i <= 30; ++i)
    for (long p = 1; p <= 30; ++p) {
      BigInt sum = 0;
      for (long j = 1; j <= i; ++j) sum += binom(i + p - j, static_cast<unsigned long>(i - j + 1));
      if (binom(i + p, static_cast<unsigned long>(i)) - 1 != sum) ++failures;
    }
  const double secs = seconds_since(start);
  std::ostringstream os;
  os << failures << " failures, " << secs << " s (limit 10 s)";
  return {failures == 0 && secs < 10.0, os.str()};
}

// 2. The Macaulay-operator inequality for a hyperplane section count c_H.
Outcome green_inequality() {
  std::size_t failures = 0, cases = 0;
  for (long c = 0; c <= 200; ++c)
    for (long ch = 0; ch <= c; ++ch)
      for (unsigned d = 1; d <= 4; ++d, ++cases)
        if (!lemma_green_inequality(c, ch, d)) ++failures;
  return {failures == 0, std::to_string(cases) + " cases, " + std::to_string(failures) + " failures"};
}

// 3. dim (A/(L + (x_n)))_d = c_<d> for lex-segment ideals L.
Outcome lex_bridge() {
  const auto start = Clock::now();
  std::size_t failures = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(derive_seed(3, t));
    std::uniform_int_distribution<std::size_t> nvars(1, 4);
    const std::size_t n = nvars(rng);
    auto hf = HilbertFunction::random(n, 5, rng);
    auto lex = lex_segment_ideal(make_ring(PrimeField{}, n), hf);
    for (int d = 1; d <= 5; ++d)
      if (BigInt(static_cast<unsigned long>(lex_restricted_dim(lex, d))) !=
          macaulay_lower(BigInt(static_cast<unsigned long>(hf[d])), static_cast<unsigned>(d)))
        ++failures;
  }
  const double secs = seconds_since(start);
  std::ostringstream os;
  os << "100 Hilbert functions, " << failures << " mismatches, " << secs << " s (limit 60 s)";
  return {failures == 0 && secs < 60.0, os.str()};
}

// 4. Green's bound for sampled forms on random algebras.
Outcome green_randomized() {
  const auto start = Clock::now();
  std::size_t violations = 0, checks = 0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    Rng rng(derive_seed(4, t));
    std::uniform_int_distribution<std::size_t> nvars(1, 4);
    auto ring = make_ring(PrimeField{}, nvars(rng));
    GradedQuotient<PrimeField> R(random_homogeneous_ideal(ring, {1, 3, 1, 3}, rng));
    auto l = sample_linear_form(ring->num_vars(), ring->field(), rng);
    for (int d = 1; d <= 4; ++d, ++checks)
      if (!check_green_bound(R, l, d).holds) ++violations;
  }
  const double secs = seconds_since(start);
  std::ostringstream os;
  os << checks << " checks, " << violations << " violations, " << secs << " s (limit 300 s)";
  return {violations == 0 && secs < 300.0, os.str()};
}

// 5. Whenever (Gr,d) holds, Green's bound and every iterated bound hold.
Outcome grd_soundness() {
  struct Instance {
    GradedQuotient<PrimeField> algebra;
    std::vector<LinearForm<PrimeField>> forms;
    int degree;
  };
  std::vector<Instance> corpus;
  PrimeField field;
  for (std::uint64_t t = 0; t < 40; ++t) {
    Rng rng(derive_seed(5, t));
    std::uniform_int_distribution<std::size_t> nvars(2, 3);
    std::uniform_int_distribution<int> degree(1, 3);
    const std::size_t n = nvars(rng);
    const int d = degree(rng);
    auto ring = make_ring(field, n);
    GradedQuotient<PrimeField> R(random_homogeneous_ideal(ring, {1, 2, 2, 3}, rng));
    std::vector<LinearForm<PrimeField>> fs;
    for (std::size_t i = 0; i < n + d - 1; ++i) fs.push_back(sample_linear_form(n, field, rng));
    corpus.push_back({R, fs, d});
    // Special sequences: a repeated form and coordinate forms.
    auto repeated = fs;
    repeated.back() = repeated.front();
    corpus.push_back({R, repeated, d});
    std::vector<LinearForm<PrimeField>> coords;
    for (std::size_t i = 0; i < n + d - 1; ++i) {
      LinearForm<PrimeField> x{std::vector<std::uint32_t>(n, 0)};
      x.coeffs[(n - 1 - i % n)] = 1;
      coords.push_back(x);
    }
    corpus.push_back({R, coords, d});
  }
  // Polynomial ring with eight coordinate forms, r = n + d - 1 = 8.
  auto big = make_ring(field, 4);
  std::vector<LinearForm<PrimeField>> eight;
  for (std::size_t i = 0; i < 8; ++i) {
    LinearForm<PrimeField> x{std::vector<std::uint32_t>(4, 0)};
    x.coeffs[i % 4] = 1;
    eight.push_back(x);
  }
  corpus.push_back({GradedQuotient<PrimeField>(big), eight, 5});

  std::size_t passing = 0, failures = 0;
  for (const auto& inst : corpus) {
    std::span<const LinearForm<PrimeField>> span(inst.forms);
    if (!verify_grd(inst.algebra, span, inst.degree).passed) continue;
    ++passing;
    if (!check_green_bound(inst.algebra, inst.forms.front(), inst.degree).holds) ++failures;
    for (std::size_t p = 1; p <= inst.forms.size(); ++p)
      if (!check_iterated_bound(inst.algebra, span.first(p), inst.degree).holds) ++failures;
  }
  std::ostringstream os;
  os << corpus.size() << " instances, " << passing << " satisfy (Gr,d), " << failures << " bound failures";
  return {failures == 0 && passing > 0, os.str()};
}

GradedQuotient<PrimeField> veronese_example(const ToricPresentation<PrimeField>& v) {
  return GradedQuotient<PrimeField>(ideal_sum(
      v.presentation_ideal, std::span<const Polynomial<PrimeField>>(parse_polynomial_list(v.ring, "Z1, Z3"))));
}

// 6. Characteristic two breaks the squared forms; a large prime does not.
Outcome char_two_regression() {
  const std::size_t trials = 20;
  std::size_t two_grd_fail = 0, two_green_fail = 0, big_hold = 0;
  auto v2 = veronese(PrimeField{2}, 2, 2);
  auto R2 = veronese_example(v2);
  auto vp = veronese(PrimeField{}, 2, 2);
  auto Rp = veronese_example(vp);
  for (std::uint64_t t = 0; t < trials; ++t) {
    Rng rng(derive_seed(6, t));
    std::vector<LinearForm<PrimeField>> fs{sample_structured_form(v2, StructuredVariant::veronese_power, rng)};
    if (!verify_grd(R2, std::span<const LinearForm<PrimeField>>(fs), 1).passed) ++two_grd_fail;
    if (!check_green_bound(R2, fs.front(), 1).holds) ++two_green_fail;
    auto l = sample_structured_form(vp, StructuredVariant::veronese_power, rng);
    bool ok = true;
    for (int d = 1; d <= 3; ++d) ok = ok && check_green_bound(Rp, l, d).holds;
    if (ok) ++big_hold;
  }
  std::ostringstream os;
  os << "GF(2): (Gr,d) failed " << two_grd_fail << "/" << trials << ", bound failed " << two_green_fail << "/"
     << trials << "; GF(65521): bound held " << big_hold << "/" << trials;
  return {two_grd_fail == trials && two_green_fail == trials && big_hold == trials, os.str()};
}

// 7. Structured forms on quotients of toric rings by random binomials.
Outcome structured_bound() {
  PrimeField field;
  std::vector<ToricPresentation<PrimeField>> rings{segre(field, {2, 2}), veronese(field, 2, 3),
                                                   chain_toric(field, {1, 2})};
  std::size_t checks = 0, violations = 0;
  for (std::size_t k = 0; k < rings.size(); ++k) {
    const auto& toric = rings[k];
    const std::size_t m = toric.num_vars();
    auto quadrics = monomials_of_degree(m, 2);
    for (std::uint64_t t = 0; t < 50; ++t) {
      Rng rng(derive_seed(700 + k, t));
      std::uniform_int_distribution<std::size_t> pick(0, quadrics.size() - 1);
      const auto a = pick(rng);
      auto b = pick(rng);
      if (b == a) b = (a + 1) % quadrics.size();
      auto binomial = Polynomial<PrimeField>::monomial(toric.ring, quadrics[a], field.one()) -
                      Polynomial<PrimeField>::monomial(toric.ring, quadrics[b], field.one());
      std::vector<Polynomial<PrimeField>> extra{binomial};
      GradedQuotient<PrimeField> R(
          ideal_sum(toric.presentation_ideal, std::span<const Polynomial<PrimeField>>(extra)));
      auto l = sample_structured_form(toric, toric.natural_variant(), rng);
      for (int d = 1; d <= 3; ++d, ++checks)
        if (!check_green_bound(R, l, d).holds) ++violations;
    }
  }
  std::ostringstream os;
  os << "segre(2,2), veronese(2,3), chain(1,2): " << checks << " checks, " << violations << " violations";
  return {violations == 0, os.str()};
}

// 8. Reductions for the fixed corpus.
Outcome eakin_sathaye() {
  PrimeField field;
  std::ostringstream os;
  bool ok = true;
  const std::size_t seeds = 5;
  SearchOptions ten;
  ten.max_trials = 10;

  auto run = [&](const std::string& name, const ReductionProblem<PrimeField>& problem) {
    if (!criterion_holds(problem.algebra, problem.power, problem.num_elements)) {
      os << name << ": criterion fails (dim " << problem.algebra.hilbert_dim(static_cast<int>(problem.power))
         << "), skipped; ";
      return;
    }
    std::size_t verified = 0, worst = 0;
    for (std::uint64_t s = 0; s < seeds; ++s) {
      auto result = search_reduction(problem, derive_seed(8, s), ten);
      if (result.verified) ++verified;
      worst = std::max(worst, result.trials_used);
    }
    ok = ok && verified == seeds;
    os << name << ": " << verified << "/" << seeds << " within " << worst << " trials; ";
  };

  auto ring = make_ring(field, 3);
  Rng rng(80);
  GradedQuotient<PrimeField> quadric(Ideal<PrimeField>(ring, {random_homogeneous(ring, 2, rng)}));
  run("quadric i=2 p=2", {quadric, 2, 2, ReductionVariant::general, std::nullopt});
  auto s = segre(field, {2, 2});
  run("segre(2,2) i=1 p=4", {s.quotient(), 1, 4, ReductionVariant::segre_product, s});
  auto v = veronese(field, 2, 2);
  run("veronese(2,2) i=1 p=2", {v.quotient(), 1, 2, ReductionVariant::veronese_power, v});

  auto v2 = veronese(PrimeField{2}, 2, 2);
  SearchOptions unchecked;
  unchecked.characteristic_bound = 0;
  auto fail = search_reduction(ReductionProblem<PrimeField>{veronese_example(v2), 1, 1,
                                                            ReductionVariant::veronese_power, v2},
                               8, unchecked);
  ok = ok && !fail.verified && fail.trials_used == 32;
  os << "GF(2) veronese-power: " << (fail.verified ? "verified" : "never verified") << " in " << fail.trials_used
     << " trials";
  return {ok, os.str()};
}

// 9. Kernels vanish under substitution; the Veronese relation is exact.
Outcome kernels() {
  PrimeField field;
  std::vector<ToricPresentation<PrimeField>> all{
      segre(field, {2, 2}),          segre(field, {1, 1}),         segre(field, {2, 3}),
      segre(field, {2, 2, 2}),       veronese(field, 2, 2),        veronese(field, 3, 1),
      veronese(field, 2, 3),         veronese(field, 3, 2),        segre_veronese(field, {2, 2}, {2, 1}),
      chain_toric(field, {2, 2}),    chain_toric(field, {1, 2}),   chain_toric(field, {1, 2, 3}),
      chain_toric(field, {2, 2, 3}), fiber_cone(field, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}),
      fiber_cone(field, {Monomial{2, 0, 1}, Monomial{1, 1, 1}, Monomial{0, 1, 2}, Monomial{1, 0, 2}})};
  std::size_t bad = 0, generators = 0;
  for (const auto& t : all) {
    auto source = make_ring(field, t.source_vars);
    for (const auto& g : t.presentation_ideal.generators()) {
      ++generators;
      if (!oracle::substitute_monomials(g, t.images, source).is_zero()) ++bad;
    }
    if (!kernel_vanishes(t) || t.quotient().hilbert_dim(1) != t.num_vars()) ++bad;
  }
  auto fc = fiber_cone(RationalField{}, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}});
  const auto& gb = fc.presentation_ideal.groebner_basis();
  const bool exact = gb.size() == 1 && gb.front().to_string() == "Z2^2 - Z1*Z3";
  std::ostringstream os;
  os << all.size() << " presentations, " << generators << " kernel generators, " << bad
     << " failures; fiber cone of (x^2,xy,y^2): " << (exact ? gb.front().to_string() : "mismatch");
  return {bad == 0 && exact, os.str()};
}

// 10. Replaying a command gives the same report.
Outcome cli_determinism() {
  using cli::ExperimentConfig;
  std::vector<ExperimentConfig> configs(5);
  configs[0].command = "green-check";
  configs[0].trials = 10;
  configs[1].command = "grd-verify";
  configs[1].vars = {"x", "y", "z"};
  configs[1].random_gens = {2};
  configs[1].random_forms = 3;
  configs[1].trials = 3;
  configs[2].command = "lex-restrict";
  configs[2].trials = 20;
  configs[3].command = "eakin-sathaye";
  configs[3].vars = {"x", "y", "z"};
  configs[3].random_gens = {2};
  configs[3].power = 2;
  configs[3].num_elements = 2;
  configs[3].trials = 3;
  configs[4].command = "toric-demo";
  configs[4].toric = "segre-veronese:2,2/2,1";
  configs[4].trials = 3;
  std::size_t identical = 0;
  for (auto& c : configs) {
    c.seed = 20261016;
    auto a = cli::run_command(c);
    auto b = cli::run_command(c);
    if (cli::without_timing(a.document).dump() == cli::without_timing(b.document).dump() &&
        cli::render_csv(a) == cli::render_csv(b))
      ++identical;
  }
  return {identical == configs.size(),
          std::to_string(identical) + "/" + std::to_string(configs.size()) + " subcommands replay identically"};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"macaulay suite", macaulay_suite},
      {"proof inequality", green_inequality},
      {"lex bridge", lex_bridge},
      {"green bound, randomized", green_randomized},
      {"(Gr,d) soundness", grd_soundness},
      {"char-2 regression", char_two_regression},
      {"structured-form bound", structured_bound},
      {"eakin-sathaye", eakin_sathaye},
      {"kernel correctness", kernels},
      {"cli determinism", cli_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome outcome;
    try {
      outcome = criteria[i].second();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.passed) ++failed;
    std::printf("criterion %2zu %-26s %s  %s\n", i + 1, criteria[i].first.c_str(), outcome.passed ? "PASS" : "FAIL",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
