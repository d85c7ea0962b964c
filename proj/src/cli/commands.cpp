#include <chrono>
#include <stdexcept>

#include "hyperres/cli.hpp"
#include "hyperres/lexmachine.hpp"
#include "hyperres/macaulay.hpp"
#include "hyperres/parse.hpp"
#include "hyperres/random.hpp"
#include "hyperres/reduction.hpp"
#include "hyperres/restriction.hpp"
#include "hyperres/toric.hpp"

namespace hyperres::cli {

using json = nlohmann::ordered_json;

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json header(const ExperimentConfig& c) {
  json doc;
  doc["artifact_version"] = kArtifactVersion;
  doc["command"] = c.command;
  doc["config"] = to_json(c);
  return doc;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& item : split_list(text)) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw std::invalid_argument("expected a number, got '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("expected a comma-separated list of numbers");
  return out;
}

std::vector<std::string> source_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("X" + std::to_string(i + 1));
  return names;
}

template <class F>
ToricPresentation<F> build_toric(const F& field, const ExperimentConfig& c) {
  const auto colon = c.toric.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("toric spec must look like kind:parameters, got '" + c.toric + "'");
  const std::string kind = c.toric.substr(0, colon);
  const std::string args = c.toric.substr(colon + 1);

  if (kind == "segre") return segre(field, parse_sizes(args));
  if (kind == "veronese") {
    auto v = parse_sizes(args);
    if (v.size() != 2) throw std::invalid_argument("veronese spec is veronese:<vars>,<degree>");
    return veronese(field, v[0], static_cast<unsigned>(v[1]));
  }
  if (kind == "segre-veronese") {
    const auto slash = args.find('/');
    if (slash == std::string::npos)
      throw std::invalid_argument("segre-veronese spec is segre-veronese:<sizes>/<degrees>");
    auto sizes = parse_sizes(args.substr(0, slash));
    std::vector<unsigned> degrees;
    for (auto b : parse_sizes(args.substr(slash + 1))) degrees.push_back(static_cast<unsigned>(b));
    return segre_veronese(field, sizes, degrees);
  }
  if (kind == "chain") return chain_toric(field, parse_sizes(args));
  if (kind == "fiber-cone") {
    if (c.vars.empty()) throw std::invalid_argument("fiber-cone spec needs --vars for its generators");
    auto ring = make_ring(field, c.vars.size(), MonomialOrder::grevlex(), c.vars);
    std::vector<Monomial> gens;
    for (const auto& item : split_list(args, ';')) {
      auto p = parse_polynomial(ring, item);
      if (p.size() != 1) throw std::invalid_argument("fiber-cone generator '" + item + "' is not a monomial");
      gens.push_back(p.leading_monomial());
    }
    return fiber_cone(field, gens);
  }
  throw std::invalid_argument("unknown toric kind '" + kind + "'");
}

template <class F>
struct Setting {
  RingPtr<F> ring;
  Ideal<F> ideal;
  std::optional<ToricPresentation<F>> toric;
};

template <class F>
Setting<F> build_setting(const F& field, const ExperimentConfig& c, Rng& rng) {
  std::optional<ToricPresentation<F>> toric;
  RingPtr<F> ring;
  std::vector<Polynomial<F>> gens;
  if (!c.toric.empty()) {
    toric = build_toric(field, c);
    ring = toric->ring;
    for (const auto& g : toric->presentation_ideal.generators()) gens.push_back(g);
  } else if (!c.vars.empty()) {
    ring = make_ring(field, c.vars.size(), MonomialOrder::grevlex(), c.vars);
  } else {
    throw std::invalid_argument("need --vars or --toric to describe the ring");
  }
  if (!c.ideal.empty())
    for (auto& g : parse_polynomial_list(ring, c.ideal)) gens.push_back(std::move(g));
  for (auto degree : c.random_gens) gens.push_back(random_homogeneous(ring, degree, rng));
  Ideal<F> ideal(ring, std::move(gens));
  if (!ideal.is_homogeneous()) throw std::invalid_argument("the ideal must be homogeneous");
  return {ring, std::move(ideal), std::move(toric)};
}

template <class F>
Setting<F> random_setting(const F& field, const ExperimentConfig& c, Rng& rng) {
  if (c.max_vars == 0) throw std::invalid_argument("max_vars must be positive");
  std::uniform_int_distribution<std::size_t> nvars(1, c.max_vars);
  auto ring = make_ring(field, nvars(rng));
  RandomIdealShape shape{1, 3, 1, std::max(1u, c.max_gen_degree)};
  return {ring, random_homogeneous_ideal(ring, shape, rng), std::nullopt};
}

template <class F>
json ideal_json(const Ideal<F>& ideal) {
  json out = json::array();
  for (const auto& g : ideal.generators()) out.push_back(g.to_string());
  return out;
}

template <class F>
std::vector<LinearForm<F>> choose_forms(const Setting<F>& s, const ExperimentConfig& c, std::size_t count,
                                        Rng& rng) {
  std::vector<LinearForm<F>> forms;
  const F& field = s.ring->field();
  if (c.zero_form) {
    for (std::size_t i = 0; i < std::max<std::size_t>(count, 1); ++i)
      forms.push_back({std::vector<typename F::Element>(s.ring->num_vars(), field.zero())});
    return forms;
  }
  if (!c.forms.empty()) {
    for (const auto& p : parse_polynomial_list(s.ring, c.forms)) forms.push_back(LinearForm<F>::from_polynomial(p));
    return forms;
  }
  if (c.structured && !s.toric) throw std::invalid_argument("structured forms need --toric");
  for (std::size_t i = 0; i < count; ++i) {
    if (c.structured) {
      auto variant = c.variant.empty() ? s.toric->natural_variant() : parse_structured_variant(c.variant);
      forms.push_back(sample_structured_form(*s.toric, variant, rng));
    } else {
      forms.push_back(sample_linear_form(s.ring->num_vars(), field, rng));
    }
  }
  return forms;
}

template <class F>
json forms_json(const std::vector<LinearForm<F>>& forms, const RingPtr<F>& ring) {
  json out = json::array();
  for (const auto& l : forms) out.push_back(l.to_polynomial(ring).to_string());
  return out;
}

std::string str(const BigInt& v) { return v.get_str(); }

template <class F>
Report green_check(const F& field, const ExperimentConfig& c) {
  Report report;
  report.document = header(c);
  report.csv_header = {"trial", "degree", "lhs", "rhs", "holds"};
  const std::size_t trials = c.trials.value_or(100);
  const bool fixed = !c.vars.empty() || !c.toric.empty();
  json records = json::array();
  std::size_t checks = 0;
  json failures = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    Rng rng(derive_seed(c.seed, t));
    auto setting = fixed ? build_setting(field, c, rng) : random_setting(field, c, rng);
    GradedQuotient<F> algebra(setting.ideal);
    auto form = choose_forms(setting, c, 1, rng).at(0);
    json rec;
    rec["trial"] = t;
    rec["num_vars"] = setting.ring->num_vars();
    rec["ideal"] = ideal_json(setting.ideal);
    rec["form"] = form.to_polynomial(setting.ring).to_string();
    json rows = json::array();
    bool trial_holds = true;
    for (int d = 1; d <= c.max_degree; ++d) {
      auto check = check_green_bound(algebra, form, d);
      ++checks;
      trial_holds = trial_holds && check.holds;
      rows.push_back({{"degree", d}, {"lhs", check.lhs}, {"rhs", check.rhs}, {"holds", check.holds}});
      report.csv_rows.push_back({std::to_string(t), std::to_string(d), std::to_string(check.lhs),
                                 std::to_string(check.rhs), check.holds ? "true" : "false"});
    }
    rec["checks"] = std::move(rows);
    rec["holds"] = trial_holds;
    rec["elapsed_ms"] = elapsed_ms(start);
    if (!trial_holds) failures.push_back(t);
    records.push_back(std::move(rec));
  }
  report.document["trials"] = std::move(records);
  report.document["summary"] = {{"trials", trials}, {"checks", checks}, {"violations", failures.size()},
                                {"failed_trials", failures}};
  report.exit_status = failures.empty() ? kExitOk : kExitViolation;
  return report;
}

template <class F>
Report grd_verify(const F& field, const ExperimentConfig& c) {
  Report report;
  report.document = header(c);
  report.csv_header = {"trial", "passed", "violations"};
  if (c.forms.empty() && c.random_forms == 0 && !c.zero_form)
    throw std::invalid_argument("grd-verify needs --forms, --random-forms or --zero-form");
  const std::size_t trials = c.trials.value_or(1);
  json records = json::array();
  json failures = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    Rng rng(derive_seed(c.seed, t));
    auto setting = build_setting(field, c, rng);
    GradedQuotient<F> algebra(setting.ideal);
    auto forms = choose_forms(setting, c, c.random_forms, rng);
    auto grd = verify_grd(algebra, std::span<const LinearForm<F>>(forms), c.degree, c.stronger);
    json rec;
    rec["trial"] = t;
    rec["ideal"] = ideal_json(setting.ideal);
    rec["forms"] = forms_json(forms, setting.ring);
    rec["degree"] = c.degree;
    rec["passed"] = grd.passed;
    json violations = json::array();
    for (const auto& v : grd.violations)
      violations.push_back({{"condition", v.condition}, {"word", v.word.str()}, {"detail", v.detail}});
    rec["violations"] = std::move(violations);
    json dims = json::array();
    for (const auto& [key, dim] : grd.ladder_dims)
      dims.push_back({{"word", key.first.str()}, {"degree", key.second}, {"dim", dim}});
    rec["ladder_dims"] = std::move(dims);
    rec["elapsed_ms"] = elapsed_ms(start);
    report.csv_rows.push_back(
        {std::to_string(t), grd.passed ? "true" : "false", std::to_string(grd.violations.size())});
    if (!grd.passed) failures.push_back(t);
    records.push_back(std::move(rec));
  }
  report.document["trials"] = std::move(records);
  report.document["summary"] = {{"trials", trials}, {"failures", failures.size()}, {"failed_trials", failures}};
  report.exit_status = failures.empty() ? kExitOk : kExitViolation;
  return report;
}

template <class F>
Report lex_restrict(const F& field, const ExperimentConfig& c) {
  Report report;
  report.document = header(c);
  report.csv_header = {"trial", "degree", "lhs", "rhs", "holds"};
  const bool fixed = !c.hf.empty();
  const std::size_t trials = fixed ? 1 : c.trials.value_or(100);
  json records = json::array();
  json failures = json::array();
  for (std::size_t t = 0; t < trials; ++t) {
    const auto start = Clock::now();
    Rng rng(derive_seed(c.seed, t));
    std::optional<HilbertFunction> hf;
    if (fixed) {
      std::vector<std::uint64_t> values;
      for (auto v : parse_sizes(c.hf)) values.push_back(v);
      hf.emplace(c.nvars, std::move(values));
    } else {
      std::uniform_int_distribution<std::size_t> nvars(1, std::max<std::size_t>(1, c.max_vars));
      const std::size_t n = nvars(rng);
      hf.emplace(HilbertFunction::random(n, c.horizon, rng));
    }
    auto ring = make_ring(field, hf->num_vars());
    auto lex = lex_segment_ideal(ring, *hf);
    json rec;
    rec["trial"] = t;
    rec["num_vars"] = hf->num_vars();
    rec["hilbert_function"] = hf->values();
    rec["lex_ideal"] = ideal_json(lex);
    bool ok = is_lex_segment(lex, hf->horizon());
    rec["is_lex_segment"] = ok;
    json rows = json::array();
    for (int d = 1; d <= hf->horizon(); ++d) {
      const auto lhs = lex_restricted_dim(lex, d);
      const BigInt rhs = macaulay_lower(BigInt(static_cast<unsigned long>((*hf)[d])), d);
      const bool holds = BigInt(static_cast<unsigned long>(lhs)) == rhs;
      ok = ok && holds;
      rows.push_back({{"degree", d}, {"lhs", lhs}, {"rhs", str(rhs)}, {"holds", holds}});
      report.csv_rows.push_back(
          {std::to_string(t), std::to_string(d), std::to_string(lhs), str(rhs), holds ? "true" : "false"});
    }
    rec["checks"] = std::move(rows);
    rec["holds"] = ok;
    rec["elapsed_ms"] = elapsed_ms(start);
    if (!ok) failures.push_back(t);
    records.push_back(std::move(rec));
  }
  report.document["trials"] = std::move(records);
  report.document["summary"] = {{"trials", trials}, {"mismatches", failures.size()}, {"failed_trials", failures}};
  report.exit_status = failures.empty() ? kExitOk : kExitViolation;
  return report;
}

template <class F>
Report eakin_sathaye(const F& field, const ExperimentConfig& c) {
  Report report;
  report.document = header(c);
  report.csv_header = {"run", "dim", "binom", "trials_used", "verified"};
  const std::size_t runs = c.trials.value_or(1);
  const auto variant = c.variant.empty() ? ReductionVariant::general : parse_reduction_variant(c.variant);
  SearchOptions options;
  options.max_trials = c.max_trials;
  options.exploratory = c.exploratory;
  options.characteristic_bound = c.exploratory ? 0 : c.characteristic_bound;
  json records = json::array();
  json failures = json::array();
  for (std::size_t r = 0; r < runs; ++r) {
    const auto start = Clock::now();
    Rng rng(derive_seed(c.seed, 2 * r));
    auto setting = build_setting(field, c, rng);
    ReductionProblem<F> problem{GradedQuotient<F>(setting.ideal), c.power, c.num_elements, variant, setting.toric};
    const auto dim = problem.algebra.hilbert_dim(static_cast<int>(c.power));
    const BigInt bound = binom(BigInt(c.power + c.num_elements), c.power);
    const bool criterion = criterion_holds(problem.algebra, c.power, c.num_elements);
    auto result = search_reduction(problem, derive_seed(c.seed, 2 * r + 1), options);
    json rec;
    rec["run"] = r;
    rec["ideal"] = ideal_json(setting.ideal);
    rec["variant"] = to_string(variant);
    rec["dim"] = dim;
    rec["binom"] = str(bound);
    rec["criterion"] = criterion;
    rec["forms"] = forms_json(result.forms, setting.ring);
    rec["trials_used"] = result.trials_used;
    rec["verified"] = result.verified;
    rec["elapsed_ms"] = elapsed_ms(start);
    report.csv_rows.push_back({std::to_string(r), std::to_string(dim), str(bound),
                               std::to_string(result.trials_used), result.verified ? "true" : "false"});
    if (!result.verified) failures.push_back(r);
    records.push_back(std::move(rec));
  }
  report.document["runs"] = std::move(records);
  report.document["summary"] = {{"runs", runs}, {"unverified", failures.size()}, {"failed_runs", failures}};
  report.exit_status = failures.empty() ? kExitOk : kExitViolation;
  return report;
}

template <class F>
Report toric_demo(const F& field, const ExperimentConfig& c) {
  Report report;
  report.document = header(c);
  report.csv_header = {"variable", "image"};
  if (c.toric.empty()) throw std::invalid_argument("toric-demo needs --toric");
  const auto start = Clock::now();
  auto toric = build_toric(field, c);
  const auto names = source_names(toric.source_vars);
  json doc;
  doc["kind"] = to_string(toric.kind);
  doc["block_sizes"] = toric.block_sizes;
  doc["block_degrees"] = toric.block_degrees;
  doc["source_vars"] = toric.source_vars;
  json vars = json::array();
  for (std::size_t i = 0; i < toric.num_vars(); ++i) {
    const auto image = toric.images[i].to_string(names);
    vars.push_back({{"name", toric.ring->names()[i]}, {"image", image}});
    report.csv_rows.push_back({toric.ring->names()[i], image});
  }
  doc["variables"] = std::move(vars);
  doc["kernel"] = ideal_json(toric.presentation_ideal);
  const bool vanishes = kernel_vanishes(toric);
  auto quotient = toric.quotient();
  const auto degree_one = quotient.hilbert_dim(1);
  doc["kernel_vanishes"] = vanishes;
  doc["degree_one_dim"] = degree_one;
  doc["hilbert_function"] = quotient.hilbert_function(std::max(3, c.degree));
  json samples = json::array();
  if (toric.kind != ToricKind::fiber_cone) {
    const auto variant = c.variant.empty() ? toric.natural_variant() : parse_structured_variant(c.variant);
    doc["variant"] = to_string(variant);
    const std::size_t count = c.trials.value_or(1);
    for (std::size_t k = 0; k < count; ++k) {
      Rng rng(derive_seed(c.seed, k));
      samples.push_back(sample_structured_form(toric, variant, rng).to_polynomial(toric.ring).to_string());
    }
  }
  doc["structured_samples"] = std::move(samples);
  doc["elapsed_ms"] = elapsed_ms(start);
  report.document["presentation"] = std::move(doc);
  const bool ok = vanishes && degree_one == toric.num_vars();
  report.document["summary"] = {{"ok", ok}};
  report.exit_status = ok ? kExitOk : kExitViolation;
  return report;
}

template <class Body>
Report with_field(const ExperimentConfig& c, Body&& body) {
  return visit_field(FieldSpec::parse(c.field), [&](const auto& field) { return body(field); });
}

}  // namespace

Report cmd_green_check(const ExperimentConfig& config) {
  return with_field(config, [&](const auto& field) { return green_check(field, config); });
}

Report cmd_grd_verify(const ExperimentConfig& config) {
  return with_field(config, [&](const auto& field) { return grd_verify(field, config); });
}

Report cmd_lex_restrict(const ExperimentConfig& config) {
  return with_field(config, [&](const auto& field) { return lex_restrict(field, config); });
}

Report cmd_eakin_sathaye(const ExperimentConfig& config) {
  return with_field(config, [&](const auto& field) { return eakin_sathaye(field, config); });
}

Report cmd_toric_demo(const ExperimentConfig& config) {
  return with_field(config, [&](const auto& field) { return toric_demo(field, config); });
}

Report run_command(const ExperimentConfig& config) {
  if (config.command == "green-check") return cmd_green_check(config);
  if (config.command == "grd-verify") return cmd_grd_verify(config);
  if (config.command == "lex-restrict") return cmd_lex_restrict(config);
  if (config.command == "eakin-sathaye") return cmd_eakin_sathaye(config);
  if (config.command == "toric-demo") return cmd_toric_demo(config);
  throw std::invalid_argument("unknown command '" + config.command + "'");
}

}  // namespace hyperres::cli
