#include <cmath>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "huygens/errors.hpp"
#include "huygens/experiment.hpp"

namespace huygens {
namespace {

TEST(Config, FlatText) {
  const ExperimentConfig c = parse_config(R"(
# comment line
experiment = dalembert-check
a = 1.5   # trailing comment
profile = triangle
profile.half_width = 0.6
quadrature.resolution = 24
output.format = json
seed = 9
tol = 1e-9
)");
  EXPECT_EQ(c.experiment, "dalembert-check");
  EXPECT_EQ(c.parameters.at("a"), 1.5);
  ASSERT_TRUE(c.profile.has_value());
  EXPECT_EQ(c.profile->name, "triangle");
  EXPECT_EQ(c.profile->params.at("half_width"), 0.6);
  EXPECT_EQ(c.quadrature.resolution, 24);
  EXPECT_EQ(c.output.format, "json");
  EXPECT_EQ(c.seed, 9u);
  EXPECT_EQ(c.tol, 1e-9);
}

TEST(Config, JsonText) {
  const ExperimentConfig c = parse_config(R"({
    "experiment": "kirchhoff-case2",
    "parameters": {"R": 2.8, "tau": 0.5},
    "profile": {"name": "gaussian", "center": -1.5, "width": 0.3},
    "grid": {"cells": 2000, "cfl": 0.4},
    "seed": 3
  })");
  EXPECT_EQ(c.experiment, "kirchhoff-case2");
  EXPECT_EQ(c.parameters.at("R"), 2.8);
  ASSERT_TRUE(c.profile.has_value());
  EXPECT_EQ(c.profile->params.at("width"), 0.3);
  EXPECT_EQ(c.grid.cells, 2000);
  EXPECT_EQ(c.grid.cfl, 0.4);
  EXPECT_EQ(c.seed, 3u);
}

TEST(Config, CanonicalJsonRoundTrip) {
  ExperimentConfig c;
  c.experiment = "generalized-profile";
  c.parameters = {{"R", 2.0}, {"t1", 3.0}, {"tau", 0.1 + 0.2}};
  c.profile = ProfileSpec{"gaussian", {{"center", -1.5}, {"width", 0.3}}};
  c.quadrature.resolution = 32;
  c.seed = 42;
  c.tol = 1e-8;
  const ExperimentConfig back = parse_config(config_to_json(c));
  EXPECT_EQ(back.experiment, c.experiment);
  EXPECT_EQ(back.parameters, c.parameters);
  ASSERT_TRUE(back.profile.has_value());
  EXPECT_EQ(back.profile->name, "gaussian");
  EXPECT_EQ(back.profile->params, c.profile->params);
  EXPECT_EQ(back.quadrature.resolution, 32);
  EXPECT_EQ(back.seed, 42u);
  EXPECT_EQ(back.tol, 1e-8);
  EXPECT_EQ(config_to_json(back), config_to_json(c));
}

TEST(Config, LaterSettingsOverride) {
  ExperimentConfig c = parse_config("experiment = kirchhoff-case1\nR = 2\n");
  apply_setting(c, "R", "2.2");
  EXPECT_EQ(c.parameters.at("R"), 2.2);
}

TEST(Config, BadInput) {
  EXPECT_THROW(parse_config("R 2"), ParameterError);
  EXPECT_THROW(parse_config("R = two"), ParameterError);
  EXPECT_THROW(parse_config("seed = -1"), ParameterError);
  EXPECT_THROW(parse_config("{ not json"), ParameterError);
  EXPECT_THROW(load_config("/nonexistent/config.cfg"), ParameterError);
}

TEST(Catalog, ListsEveryExperimentOnce) {
  std::set<std::string> names;
  for (const ExperimentInfo& e : experiment_catalog()) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_FALSE(e.summary.empty());
  }
  for (const char* n : {"dalembert-check", "eight-term", "kirchhoff-case1", "kirchhoff-case2",
                        "branch-continuity", "surface-vs-ring", "generalized-profile",
                        "oracle-compare", "convergence"}) {
    EXPECT_TRUE(names.count(n)) << n;
  }
}

ExperimentConfig named(const std::string& name) {
  ExperimentConfig c;
  c.experiment = name;
  return c;
}

TEST(Run, KirchhoffCaseIDefault) {
  const ExperimentReport r = run_experiment(named("kirchhoff-case1"));
  ASSERT_FALSE(r.rows.empty());
  EXPECT_NEAR(r.rows.front().computed, 0.4987475, 5e-8);
  EXPECT_EQ(r.rows.front().case_tag, "CaseI");
  EXPECT_EQ(r.rows.size(), 201u);
  EXPECT_TRUE(r.pass());
}

TEST(Run, KirchhoffCaseIIDefault) {
  const ExperimentReport r = run_experiment(named("kirchhoff-case2"));
  EXPECT_NEAR(r.rows.front().computed, std::sin(0.7) / 2.8, 1e-12);
  EXPECT_EQ(r.rows.front().case_tag, "CaseII");
  EXPECT_NEAR(r.rows.front().gamma, 0.3, 1e-15);
  EXPECT_TRUE(r.pass());
}

TEST(Run, DeterministicForFixedSeed) {
  ExperimentConfig c = named("kirchhoff-case2");
  c.parameters["samples"] = 20;
  c.seed = 5;
  EXPECT_EQ(report_to_csv(run_experiment(c)), report_to_csv(run_experiment(c)));
  ExperimentConfig d = c;
  d.seed = 6;
  EXPECT_NE(report_to_csv(run_experiment(c)), report_to_csv(run_experiment(d)));
}

TEST(Run, EightTerm) { EXPECT_TRUE(run_experiment(named("eight-term")).pass()); }

TEST(Run, DalembertCheck) { EXPECT_TRUE(run_experiment(named("dalembert-check")).pass()); }

TEST(Run, OracleCompareCaseII) {
  const ExperimentReport r = run_experiment(named("oracle-compare"));
  bool saw_radial = false;
  for (const ReportRow& row : r.rows) {
    if (row.quantity == "ring_vs_radial_fdtd") {
      saw_radial = true;
      EXPECT_EQ(row.case_tag, "CaseII");
      EXPECT_LT(row.rel_err, 1e-3);
    }
  }
  EXPECT_TRUE(saw_radial);
  EXPECT_TRUE(r.pass());
}

TEST(Run, ConvergenceIsMonotone) {
  const ExperimentReport r = run_experiment(named("convergence"));
  ASSERT_EQ(r.rows.size(), 6u);
  for (std::size_t i = 1; i < r.rows.size(); ++i) {
    EXPECT_LE(r.rows[i].abs_err, std::max(r.rows[i - 1].abs_err, 1e-12));
  }
  EXPECT_LE(r.rows.back().abs_err, 1e-12);
  EXPECT_TRUE(r.pass());
}

TEST(Run, TightToleranceFailsHonestly) {
  ExperimentConfig c = named("oracle-compare");
  c.tol = 0.0;
  EXPECT_FALSE(run_experiment(c).pass());
}

TEST(Run, InvalidInput) {
  ExperimentConfig geometry = named("kirchhoff-case1");
  geometry.parameters["tau"] = 2.5;
  EXPECT_THROW(run_experiment(geometry), DomainError);

  ExperimentConfig wrong_case = named("kirchhoff-case1");
  wrong_case.parameters["R"] = 2.8;
  EXPECT_THROW(run_experiment(wrong_case), ParameterError);

  EXPECT_THROW(run_experiment(named("no-such-experiment")), ParameterError);
}

}  // namespace
}  // namespace huygens
