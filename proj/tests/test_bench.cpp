#include <gtest/gtest.h>

#include <chrono>
#include <cmath>

#include "qgrad/bench.hpp"
#include "qgrad/errors.hpp"

using namespace qgrad;
using namespace qgrad::bench;

namespace {

std::vector<std::string> as_strings(const auto& labels) { return {labels.begin(), labels.end()}; }

std::vector<double> column(const CsvTable& t, std::size_t c) {
  std::vector<double> out;
  for (const CsvRow& row : t.rows) out.push_back(row.values[c]);
  return out;
}

}  // namespace

TEST(LemmaLr, SchemaAndLabels) {
  const ExperimentResult r = experiment_lemma_lr("himmelblau", 30, Vector{0.0, 0.0});
  EXPECT_EQ(r.table.labels, as_strings(kLemmaLrLabels));
  EXPECT_EQ(r.table.labels.size() + 1, 4u);
  EXPECT_EQ(r.table.rows.size(), 31u);
  EXPECT_TRUE(r.table.rectangular());
  EXPECT_EQ(emit_csv(r.table).substr(0, emit_csv(r.table).find('\n')),
            "Iterations,fSFHasLRrawgradientmethod,naiveNAGwithfSFHasLR,enhancedNAGwithQGandfSFHasLR");
}

TEST(LemmaLr, BoothGradientColumnMatchesClosedForm) {
  // From (0, 0) the error (-1, -3) splits into -2*sqrt(2) along (1, 1)/sqrt(2)
  // (eigenvalue 18) and sqrt(2) along (1, -1)/sqrt(2) (eigenvalue 2); each
  // step multiplies them by (1 - 18 lr) and (1 - 2 lr).
  const ExperimentResult r = experiment_lemma_lr("booth", 30);
  const double lr = 1.0 / (18.0 + 1e-8);
  const std::vector<double> gd = column(r.table, 0);
  for (int t = 0; t <= 30; ++t) {
    const double fast = -2.0 * std::sqrt(2.0) * std::pow(1.0 - 18.0 * lr, t);
    const double slow = std::sqrt(2.0) * std::pow(1.0 - 2.0 * lr, t);
    const double expected = 0.5 * (18.0 * fast * fast + 2.0 * slow * slow);
    EXPECT_NEAR(gd[static_cast<std::size_t>(t)], expected, 1e-12 * (1.0 + expected)) << "t=" << t;
  }
  // 2 (8/9)^60: thirty steps are not enough to reach 1e-3.
  EXPECT_NEAR(gd.back(), 2.0 * std::pow(8.0 / 9.0, 60), 1e-9);
  EXPECT_GT(gd.back(), 1e-3);
}

TEST(LemmaLr, BoothColumnsConverge) {
  const ExperimentResult r = experiment_lemma_lr("booth", 150);
  for (std::size_t c = 0; c < 3; ++c) {
    const std::vector<double> col = column(r.table, c);
    EXPECT_NEAR(col.front(), 74.0, 1e-12);
    EXPECT_LE(col.back(), 1e-3) << r.table.labels[c];
  }
}

TEST(LemmaLr, ConstantFromKnownOptimum) {
  for (const char* id : {"booth", "beale", "himmelblau", "rosenbrock:4", "quadratic-counterexample"}) {
    const auto f = functions::make_function(id);
    const auto opt = f->known_optima().front();
    const ExperimentResult r = experiment_lemma_lr(id, 30, opt.point);
    ASSERT_EQ(r.table.rows.size(), 31u);
    for (const CsvRow& row : r.table.rows)
      for (double x : row.values) EXPECT_NEAR(x, opt.value, 1e-12) << id;
  }
}

TEST(LemmaLr, MaximizeColumnIsNegatedObjective) {
  const ExperimentResult r = experiment_lemma_lr("quadratic-counterexample", 40, Vector{-1.0, -1.5});
  for (std::size_t c = 0; c < 3; ++c) {
    const std::vector<double> col = column(r.table, c);
    EXPECT_DOUBLE_EQ(col.front(), 1.25);
    EXPECT_LT(col.back(), col.front());
    EXPECT_GE(col.back(), 0.0);
  }
}

TEST(LemmaLr, UnknownFunction) {
  EXPECT_THROW(experiment_lemma_lr("nosuch", 30), UnknownFunction);
}

TEST(AdamQg, SchemaAndLabels) {
  const ExperimentResult r = experiment_adam_qg(2, 30);
  EXPECT_EQ(r.table.labels, as_strings(kAdamQgLabels));
  EXPECT_EQ(r.table.rows.size(), 31u);
  for (const CsvRow& row : r.table.rows)
    for (double x : row.values) EXPECT_TRUE(std::isfinite(x) || std::isnan(x));
  EXPECT_EQ(emit_csv(r.table).substr(0, 34), "Iterations,Adam,AdamOldQG,AdamNewQ");
}

TEST(AdamQg, NaiveAdamDescendsOverLongHorizon) {
  const ExperimentResult r = experiment_adam_qg(2, 300);
  const std::vector<double> adam = column(r.table, 0);
  EXPECT_NEAR(adam.front(), 24.2, 1e-12);
  EXPECT_LT(adam.back(), adam.front());
}

TEST(AdamQg, TwentyVariablesRunQuickly) {
  const auto start = std::chrono::steady_clock::now();
  const ExperimentResult r = experiment_adam_qg(20, 300);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_EQ(r.table.rows.size(), 301u);
  EXPECT_LT(seconds, 10.0);
}

TEST(AdamQg, InvalidDimension) {
  EXPECT_THROW(experiment_adam_qg(1, 30), InvalidDimension);
}

TEST(AdamQg, EtaSweepCoversDefaults) {
  const auto sweep = adam_qg_eta_sweep(2, 10);
  ASSERT_EQ(sweep.size(), 3u);
  EXPECT_EQ(sweep[0].first, 1.0);
  EXPECT_EQ(sweep[1].first, 1.5);
  EXPECT_EQ(sweep[2].first, 2.0);
  // The naive Adam column does not depend on eta.
  EXPECT_TRUE(column(sweep[0].second.table, 0) == column(sweep[2].second.table, 0));
}

TEST(RunExperiment, DivergedRunsArePaddedWithNaN) {
  ExperimentSpec spec;
  spec.function_id = "rosenbrock:2";
  spec.x0 = Vector{-1.2, 1.0};
  spec.iterations = 20;
  OptimizerConfig wild;
  wild.method = optimizers::Method::Adam;
  wild.stepsize = 10.0;
  wild.divergence_bound = 5.0;
  OptimizerConfig tame;
  tame.method = optimizers::Method::Adam;
  spec.methods = {{"wild", wild}, {"tame", tame}};

  const ExperimentResult r = run_experiment(spec);
  EXPECT_TRUE(r.any_diverged());
  EXPECT_EQ(r.outcomes[0].status, RunStatus::Diverged);
  EXPECT_EQ(r.outcomes[1].status, RunStatus::MaxIterations);
  ASSERT_EQ(r.table.rows.size(), 21u);
  EXPECT_TRUE(std::isnan(r.table.rows.back().values[0]));
  EXPECT_TRUE(std::isfinite(r.table.rows.back().values[1]));
  EXPECT_FALSE(std::isnan(r.table.rows.front().values[0]));
  EXPECT_NE(emit_csv(r.table).find(",nan,"), std::string::npos);
}

TEST(RunExperiment, ConvergedRunsHoldTheirLastValue) {
  ExperimentSpec spec;
  spec.function_id = "booth";
  spec.x0 = Vector{1.0, 3.0};
  spec.iterations = 5;
  spec.methods = {{"gd", OptimizerConfig{.method = optimizers::Method::GdSpectral}}};
  const ExperimentResult r = run_experiment(spec);
  EXPECT_EQ(r.outcomes[0].status, RunStatus::Converged);
  for (const CsvRow& row : r.table.rows) EXPECT_EQ(row.values[0], 0.0);
}

TEST(RunExperiment, RejectsBadSpecs) {
  ExperimentSpec spec;
  spec.function_id = "booth";
  spec.x0 = Vector{0.0, 0.0};
  spec.iterations = 5;
  spec.methods = {{"a", {}}, {"a", {}}};
  EXPECT_THROW(run_experiment(spec), InvalidConfig);
  spec.methods = {{"a", {}}};
  spec.iterations = 0;
  EXPECT_THROW(run_experiment(spec), InvalidConfig);
  spec.iterations = 5;
  spec.x0 = Vector{0.0, 0.0, 0.0};
  EXPECT_THROW(run_experiment(spec), DimensionError);
}

TEST(RunExperiment, RerunsAreByteIdentical) {
  EXPECT_EQ(emit_csv(experiment_adam_qg(5, 60).table), emit_csv(experiment_adam_qg(5, 60).table));
  EXPECT_EQ(emit_csv(experiment_lemma_lr("beale", 30).table), emit_csv(experiment_lemma_lr("beale", 30).table));
}

TEST(DefaultX0, Conventions) {
  EXPECT_EQ(default_x0(*functions::booth()), (Vector{0.0, 0.0}));
  EXPECT_EQ(default_x0(*functions::himmelblau()), (Vector{0.0, 0.0}));
  EXPECT_EQ(default_x0(*functions::beale()), (Vector{1.0, 1.0}));
  EXPECT_EQ(default_x0(*functions::rosenbrock(4)), (Vector{-1.2, 1.0, 1.0, 1.0}));
}
