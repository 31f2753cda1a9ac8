#include "wedgecrys_cli/campaigns.hpp"

#include "wedgecrys/random.hpp"

namespace wedgecrys::cli {

json CampaignReport::to_json() const {
  json out{{"schema", kSchemaVersion}, {"campaign", campaign}, {"mode", mode},   {"seed", seed},
           {"trials", trials},         {"cases", cases},       {"failures", failures}, {"passed", ok()}};
  if (!details.empty()) out["details"] = details;
  if (counterexample) out["counterexample"] = *counterexample;
  return out;
}

const std::vector<std::string>& campaign_names() {
  static const std::vector<std::string> names{"rank-lemma", "cauchy-binet", "axioms", "compat", "adjunction"};
  return names;
}

namespace {

CampaignReport start(std::string campaign, std::string mode, std::uint64_t seed = 0, std::size_t trials = 0) {
  CampaignReport rep;
  rep.campaign = std::move(campaign);
  rep.mode = std::move(mode);
  rep.seed = seed;
  rep.trials = trials;
  return rep;
}

void record_failure(CampaignReport& rep, json counterexample) {
  if (rep.failures++ == 0) rep.counterexample = std::move(counterexample);
}

template <CommutativeRing R>
json rank_lemma_case(const Matrix<R>& a, std::size_t d, const RankLemmaCheck& c) {
  return json{{"ring", a.ring().descriptor()}, {"matrix", matrix_to_json(a)}, {"d", d},
              {"lhs", c.lhs},                   {"rhs", c.rhs}};
}

}  // namespace

CampaignReport rank_lemma_exhaustive_f2() {
  auto rep = start("rank-lemma", "exhaustive-f2");
  const FiniteField f2(2, 1);
  std::size_t rank_two = 0;
  for (unsigned bits = 0; bits < 512; ++bits) {
    Matrix<FiniteField> a(f2, 3, 3);
    for (std::size_t k = 0; k < 9; ++k) a(k / 3, k % 3) = f2.from_integer((bits >> k) & 1U);
    const auto c = rank_lemma_check(a, 2);
    ++rep.cases;
    if (c.lhs) ++rank_two;
    if (!c.holds()) record_failure(rep, rank_lemma_case(a, 2, c));
  }
  rep.details = json{{"rank_two", rank_two}};
  return rep;
}

CampaignReport rank_lemma_random(std::uint64_t seed, std::size_t trials) {
  auto rep = start("rank-lemma", "random", seed, trials);
  const FiniteField f5(5, 1);
  const ModulusRing z27(3, 3);
  std::size_t defined = 0, undefined = 0, lhs_true = 0;
  auto run = [&](const auto& a, std::size_t d) {
    const auto c = rank_lemma_check(a, d);
    ++rep.cases;
    if (rank(a).defined())
      ++defined;
    else
      ++undefined;
    if (c.lhs) ++lhs_true;
    if (!c.holds()) record_failure(rep, rank_lemma_case(a, d, c));
  };
  for (std::size_t t = 0; t < trials; ++t) {
    auto gen = trial_engine(seed, t);
    const std::size_t d = 2 + t % 2;
    run(random_structured_matrix(f5, 4, gen), d);
    run(random_structured_matrix(z27, 4, gen), d);
  }
  rep.details = json{{"rank_defined", defined}, {"rank_undefined", undefined}, {"lhs_true", lhs_true}};
  return rep;
}

CampaignReport cauchy_binet(std::uint64_t seed, std::size_t trials) {
  auto rep = start("cauchy-binet", "random", seed, trials);
  const ModulusRing z27(3, 3);
  const FiniteField f9(3, 2);
  auto run = [&](const auto& ring, std::mt19937_64& gen, std::size_t d) {
    const auto a = random_matrix(ring, 4, 4, gen);
    const auto b = random_matrix(ring, 4, 4, gen);
    ++rep.cases;
    if (compound(a * b, d) != compound(a, d) * compound(b, d))
      record_failure(rep, json{{"ring", ring.descriptor()}, {"a", matrix_to_json(a)}, {"b", matrix_to_json(b)}, {"d", d}});
  };
  for (std::size_t t = 0; t < trials; ++t) {
    auto gen = trial_engine(seed, t);
    const std::size_t d = 2 + t % 2;
    run(z27, gen, d);
    run(f9, gen, d);
  }
  return rep;
}

CampaignReport axioms(std::uint64_t seed, std::size_t trials) {
  auto rep = start("axioms", "random", seed, trials);
  for (std::size_t t = 0; t < trials; ++t) {
    auto gen = trial_engine(seed, t);
    const int h = std::uniform_int_distribution<int>(1, 4)(gen);
    const int dim = std::uniform_int_distribution<int>(0, h)(gen);
    const long p = std::uniform_int_distribution<int>(0, 1)(gen) == 0 ? 3 : 5;
    const int a = std::uniform_int_distribution<int>(1, 2)(gen);
    const int m = std::uniform_int_distribution<int>(2, 5)(gen);
    const WittRing ring(p, a, m);
    const auto desc = GroupDescriptor::make(h, dim);
    const auto d = conjugate(make_standard(desc, ring), random_unimodular(ring, static_cast<std::size_t>(h), gen));
    const auto r = verify_axioms(d);
    ++rep.cases;
    if (!r.ok() || dimension(d) != dim) {
      auto c = dieudonne_to_json(d);
      c["source"] = desc.name();
      c["diagnostic"] = r.diagnostic;
      record_failure(rep, std::move(c));
    }
  }
  return rep;
}

CampaignReport compat(std::uint64_t seed, std::size_t trials, bool wrong_shift) {
  auto rep = start("compat", "random", seed, trials);
  rep.details = json::array();
  std::uint64_t sub = 0;
  for (int h = 1; h <= 4; ++h) {
    for (std::size_t r = 1; r <= static_cast<std::size_t>(h); ++r, ++sub) {
      auto gen = trial_engine(seed, 1'000'000 + sub);
      const WittRing ring(3, 1, 4);
      const auto desc = GroupDescriptor::lubin_tate(h);
      const auto d = conjugate(make_standard(desc, ring), random_unimodular(ring, static_cast<std::size_t>(h), gen));
      const auto c = multilinear_compat_check(d, r, trials, seed + sub, wrong_shift);
      rep.cases += c.checks;
      rep.details.push_back({{"source", desc.name()}, {"r", r}, {"checks", c.checks}, {"failures", c.failures}});
      if (c.failures == 0) continue;
      if (rep.failures == 0) {
        auto ce = dieudonne_to_json(d);
        ce["source"] = desc.name();
        ce["r"] = r;
        ce["wrong_shift"] = wrong_shift;
        ce["first_failure"] = c.first_failure;
        rep.counterexample = std::move(ce);
      }
      rep.failures += c.failures;
    }
  }
  return rep;
}

CampaignReport adjunction(std::uint64_t seed, std::size_t trials) {
  auto rep = start("adjunction", "random", seed, trials);
  const GradedRing<FiniteField> ring(FiniteField(5, 1), {1, 1});
  const auto x = ring.variable(0);
  const auto y = ring.variable(1);
  std::size_t round_trips = 0, chart_checks = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    auto gen = trial_engine(seed, t);
    const std::size_t arity = 2 + t % 2;
    std::uniform_int_distribution<int> deg(0, 2), rk(1, 2);
    auto module = [&] {
      FreeGradedModule m;
      const int n = rk(gen);
      for (int i = 0; i < n; ++i) m.generator_degrees.push_back(deg(gen));
      return m;
    };
    std::vector<FreeGradedModule> sources;
    for (std::size_t k = 0; k < arity; ++k) sources.push_back(module());
    const auto target = module();
    const auto tau = random_graded_map(ring, sources, target, gen);

    ++rep.cases;
    std::string failed;
    if (!is_graded_multilinear(tau, 5, seed + t))
      failed = "graded audit";
    else if (!(theta_inverse(theta(tau)) == tau))
      failed = "theta round trip";
    else {
      ++round_trips;
      const auto f = (t % 4 < 2) ? x : ring.mul(x, y);
      const auto c = chart_path_check(tau, f, 3, seed + t);
      chart_checks += c.checks;
      if (!c.ok()) failed = "chart paths at " + ring.format(f);
    }
    if (!failed.empty()) {
      auto ce = graded_map_to_json(tau);
      ce["failure"] = failed;
      record_failure(rep, std::move(ce));
    }
  }
  rep.details = json{{"round_trips", round_trips}, {"chart_checks", chart_checks}};
  return rep;
}

}  // namespace wedgecrys::cli
