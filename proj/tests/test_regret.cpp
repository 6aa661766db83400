#include <doctest.h>

#include <cmath>

#include "netbandit/regret.hpp"
#include "netbandit/sim.hpp"

using namespace netbandit;

TEST_CASE("record_step accounting") {
  BanditEnv env({0.9, 0.5}, DistKind::Bernoulli, 1);
  RelationGraph g = build_graph(2, {});
  auto opt = compute_optimum(env, g, nullptr, Scenario::SSO);
  RegretTrace trace;
  trace.scenario = Scenario::SSO;

  record_step(trace, opt, 0, 0.7);
  CHECK(trace.instant_realized.back() == doctest::Approx(0.2));
  CHECK(trace.instant_pseudo.back() == doctest::Approx(0.0));

  record_step(trace, opt, 1, 0.5);
  CHECK(trace.instant_pseudo.back() == doctest::Approx(0.4));
  CHECK(trace.cum_realized.back() == doctest::Approx(0.2 + 0.4));

  RegretTrace wrong;
  wrong.scenario = Scenario::CSR;
  CHECK_THROWS_AS(record_step(wrong, opt, 0, 0.5), std::logic_error);
}

TEST_CASE("optimal action under point-mass rewards has zero regret") {
  BanditEnv env({0.3, 0.8}, DistKind::PointMass, 1);
  RelationGraph g = build_graph(2, {});
  auto opt = compute_optimum(env, g, nullptr, Scenario::SSO);
  RegretTrace trace;
  trace.scenario = Scenario::SSO;
  record_step(trace, opt, 1, 0.8);
  CHECK(trace.instant_realized.back() == 0.0);
  CHECK(trace.instant_pseudo.back() == 0.0);
}

TEST_CASE("bound calculators at pinned values") {
  CHECK(bound_sso(100, 4, 2) == doctest::Approx(326.2).epsilon(1e-9));
  CHECK(bound_sso(100, 4, 0) == doctest::Approx(15.94 * 20.0));
  CHECK(bound_sso(100, 4, 1) == doctest::Approx(15.94 * 20.0 + 0.74 * 5.0));

  double cso = bound_cso(100, 7, 3);
  CHECK(cso == doctest::Approx(15.94 * std::sqrt(700.0) +
                               0.74 * 3.0 * std::sqrt(100.0 / 7.0)));
  CHECK(49.0 * std::sqrt(700.0) > cso);  // tighter than the naive MOSS bound
  CHECK(bound_cso(100, 1, 1) == doctest::Approx(15.94 * 10.0 + 0.74 * 10.0));

  CHECK(bound_ssr(100, 4) == doctest::Approx(3920.0));
  CHECK(bound_ssr(1, 1) == doctest::Approx(49.0));
  // K^{3/2} scaling
  CHECK(bound_ssr(100, 16) / bound_ssr(100, 4) == doctest::Approx(8.0));

  // symbolic reduction at N = K = 1
  double e = std::exp(1.0);
  long n = 729;
  CHECK(bound_csr(n, 1, 1) ==
        doctest::Approx(1.0 + (std::sqrt(e) + 16.0) * std::pow(n, 2.0 / 3.0) +
                        (1.0 + 4.0 / e) * std::pow(n, 5.0 / 6.0)));
  CHECK_THROWS_AS(bound_csr(10, 4, 5), std::invalid_argument);

  // dominant n^{5/6} growth
  double r = bound_csr(2000000, 10, 4) / bound_csr(1000000, 10, 4);
  CHECK(r == doctest::Approx(std::pow(2.0, 5.0 / 6.0)).epsilon(0.01));
}

TEST_CASE("bound positivity and monotonicity in n") {
  long prev_n = 1;
  double s1 = 0, s2 = 0, s3 = 0, s4 = 0;
  for (long n : {10L, 100L, 1000L, 10000L}) {
    double b1 = bound_sso(n, 10, 3);
    double b2 = bound_cso(n, 20, 3);
    double b3 = bound_ssr(n, 10);
    double b4 = bound_csr(n, 10, 4);
    CHECK(b1 > 0);
    CHECK(b2 > 0);
    CHECK(b3 > 0);
    CHECK(b4 > 0);
    CHECK(b1 > s1);
    CHECK(b2 > s2);
    CHECK(b3 > s3);
    CHECK(b4 > s4);
    s1 = b1;
    s2 = b2;
    s3 = b3;
    s4 = b4;
    prev_n = n;
  }
  (void)prev_n;
}

TEST_CASE("clique count for the bound") {
  RelationGraph path = make_path(4);

  SUBCASE("all gaps zero leaves H empty") {
    CHECK(clique_count_for_bound(path, {0, 0, 0, 0}, 100) == 0);
  }

  SUBCASE("large n keeps all suboptimal arms") {
    // delta0 = e*sqrt(4/1e8) = 5.44e-4 < 0.5
    std::size_t c = clique_count_for_bound(path, {0, 0.5, 0.5, 0.5}, 100000000);
    CHECK(c == clique_count_for_bound(path, {0, 0.5, 0.5, 0.5}, 10000));
  }

  SUBCASE("worked example: sub-path of arms 1,2,3 covered by 2 cliques") {
    // delta0 = e*sqrt(4/1e4) ~ 0.0544 < 0.5
    CHECK(clique_count_for_bound(path, {0, 0.5, 0.5, 0.5}, 10000) == 2);
  }

  CHECK_THROWS_AS(clique_count_for_bound(path, {0, 0}, 100), std::invalid_argument);
}

TEST_CASE("trace prefix sums are exact and nondecreasing") {
  EpisodeSpec spec;
  spec.scenario = Scenario::SSO;
  spec.policy_name = "dfl-sso";
  spec.num_arms = 8;
  spec.graph_spec = "er:0.4";
  spec.graph_seed = 5;
  spec.means = draw_uniform_means(8, 21);
  spec.env_seed = 6;
  spec.tie_seed = 7;
  spec.horizon = 2000;
  auto trace = run_episode(spec);
  double cr = 0, cp = 0;
  for (long t = 0; t < trace.rounds(); ++t) {
    cr += trace.instant_realized[t];
    cp += trace.instant_pseudo[t];
    CHECK(trace.cum_realized[t] == cr);
    CHECK(trace.cum_pseudo[t] == cp);
    if (t > 0) CHECK(trace.cum_pseudo[t] >= trace.cum_pseudo[t - 1]);
  }
}

TEST_CASE("realized regret matches pseudo-regret in expectation") {
  // 120 seeds of the random policy; the mean difference of the cumulative
  // values at n should be within 3 standard errors of zero
  const int seeds = 120;
  const long n = 500;
  std::vector<double> diffs;
  for (int s = 0; s < seeds; ++s) {
    EpisodeSpec spec;
    spec.scenario = Scenario::SSO;
    spec.policy_name = "random";
    spec.num_arms = 6;
    spec.graph_spec = "er:0.5";
    spec.graph_seed = derive_graph_seed(99, s);
    spec.means = draw_uniform_means(6, derive_means_seed(99, 0));
    spec.env_seed = derive_env_seed(99, s);
    spec.tie_seed = derive_tie_seed(99, s, "random");
    spec.horizon = n;
    auto trace = run_episode(spec);
    diffs.push_back(trace.cum_realized.back() - trace.cum_pseudo.back());
  }
  double mean = 0;
  for (double d : diffs) mean += d;
  mean /= seeds;
  double var = 0;
  for (double d : diffs) var += (d - mean) * (d - mean);
  var /= (seeds - 1);
  double se = std::sqrt(var / seeds);
  CHECK(std::abs(mean) <= 3.0 * se + 1e-9);
}

TEST_CASE("empirical regret stays below the theorem bound") {
  // 20 seeds at K=10, n=10^4, ER p=0.5, means i.i.d. U[0,1]
  const long n = 10000;
  for (int s = 0; s < 20; ++s) {
    EpisodeSpec spec;
    spec.scenario = Scenario::SSO;
    spec.policy_name = "dfl-sso";
    spec.num_arms = 10;
    spec.graph_spec = "er:0.5";
    spec.graph_seed = derive_graph_seed(7, s);
    spec.means = draw_uniform_means(10, derive_means_seed(7, s));
    spec.env_seed = derive_env_seed(7, s);
    spec.tie_seed = derive_tie_seed(7, s, "dfl-sso");
    spec.horizon = n;
    auto trace = run_episode(spec);

    RelationGraph g = resolve_graph(spec.graph_spec, 10, spec.graph_seed);
    BanditEnv env(spec.means, spec.dist, spec.env_seed);
    auto opt = compute_optimum(env, g, nullptr, Scenario::SSO);
    double bound = bound_sso(n, 10, clique_count_for_bound(g, opt.gaps, n));
    CHECK(trace.cum_pseudo.back() <= bound);
  }
}
