// Copyright 2026 The foldkappa Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "foldkappa/verify.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace foldkappa {
namespace {

Topology fq(int n) { return Topology::build(Kind::folded, n); }
Topology q(int n) { return Topology::build(Kind::hypercube, n); }

std::vector<Report> collect(Suite suite, const VerifyOptions& options, VerifySummary* summary) {
  std::vector<Report> out;
  *summary = run_verify(suite, options, [&](const Report& r) { out.push_back(r); });
  return out;
}

nlohmann::json without_timing(const Report& r) {
  nlohmann::json j = r.to_json();
  j.erase("elapsed_ms");
  return j;
}

TEST(VerifyParseTest, Names) {
  EXPECT_EQ(parse_suite("lemmas"), Suite::lemmas);
  EXPECT_EQ(parse_suite("all"), Suite::all);
  EXPECT_FALSE(parse_suite("everything").has_value());
  EXPECT_EQ(parse_theta_mode("star"), ThetaMode::star);
  EXPECT_FALSE(parse_theta_mode("upper").has_value());
  EXPECT_EQ(parse_ckappa_mode("upper"), CkappaMode::upper);
  EXPECT_FALSE(parse_ckappa_mode("star").has_value());
}

TEST(ThetaReportTest, ExactHypercubeMatchesClosedForm) {
  const Report r = theta_report(q(4), 3, ThetaMode::exact);
  EXPECT_EQ(r.claim_id, "theta/kind=q/n=4/g=3");
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.computed["value"], 7);
  EXPECT_EQ(r.computed["exhaustive"], true);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(ThetaReportTest, FoldedFourIsFinding) {
  EXPECT_EQ(theta_report(fq(4), 2, ThetaMode::exact).verdict, Verdict::finding);
}

TEST(ThetaReportTest, FoldedSixMatchesF) {
  for (int g = 1; g <= 4; ++g) {
    EXPECT_EQ(theta_report(fq(6), g, ThetaMode::exact).verdict, Verdict::pass) << "g=" << g;
  }
}

TEST(ThetaReportTest, StarAndFormulaModes) {
  const Report star = theta_report(fq(8), 3, ThetaMode::star);
  EXPECT_EQ(star.verdict, Verdict::upper_bound_only);
  EXPECT_EQ(star.computed["value"], 22);
  const Report formula = theta_report(fq(8), 3, ThetaMode::formula);
  EXPECT_EQ(formula.verdict, Verdict::finding);
  EXPECT_EQ(formula.computed["value"], 22);
}

TEST(ThetaReportTest, BudgetGivesUpperBoundOnly) {
  SearchBudget tiny;
  tiny.max_nodes = 10;
  EXPECT_EQ(theta_report(fq(8), 4, ThetaMode::exact, tiny).verdict, Verdict::upper_bound_only);
}

TEST(ThetaReportTest, OutOfDomain) {
  EXPECT_THROW(theta_report(fq(5), 0, ThetaMode::exact), std::out_of_range);
  EXPECT_THROW(theta_report(fq(5), 8, ThetaMode::star), std::out_of_range);
}

TEST(CkappaReportTest, UpperModeFolded) {
  const Report r = ckappa_report(fq(8), 3, CkappaMode::upper);
  EXPECT_EQ(r.verdict, Verdict::upper_bound_only);
  EXPECT_EQ(r.computed["value"], 22);
  EXPECT_EQ(r.parameters["components"], 4);
  EXPECT_TRUE(r.witness.has_value());
}

TEST(CkappaReportTest, ExactHypercubeClosedForm) {
  const Report r = ckappa_report(q(4), 2, CkappaMode::exact);
  EXPECT_EQ(r.verdict, Verdict::pass);
  EXPECT_EQ(r.computed["value"], 6);
}

TEST(CkappaReportTest, SmallFoldedIsFinding) {
  const Report r = ckappa_report(fq(4), 1, CkappaMode::exact);
  EXPECT_EQ(r.verdict, Verdict::finding);
  EXPECT_EQ(r.computed["value"], 5);
}

TEST(CkappaReportTest, Preconditions) {
  EXPECT_THROW(ckappa_report(fq(5), 0, CkappaMode::exact), std::out_of_range);
  EXPECT_THROW(ckappa_report(q(5), 1, CkappaMode::upper), std::invalid_argument);
}

TEST(VerifySuiteTest, StructureHasNoFailures) {
  VerifyOptions options;
  options.n_first = 2;
  options.n_last = 16;
  VerifySummary summary;
  const std::vector<Report> reports = collect(Suite::structure, options, &summary);
  EXPECT_FALSE(reports.empty());
  EXPECT_EQ(summary.failures(), 0u);
  for (const Report& r : reports) EXPECT_NE(r.verdict, Verdict::fail) << r.claim_id;
}

TEST(VerifySuiteTest, LemmasHoldForSixAndSeven) {
  VerifyOptions options;
  options.n_first = 6;
  options.n_last = 7;
  options.samples = 20000;
  VerifySummary summary;
  const std::vector<Report> reports = collect(Suite::lemmas, options, &summary);
  EXPECT_FALSE(reports.empty());
  for (const Report& r : reports) EXPECT_EQ(r.verdict, Verdict::pass) << r.claim_id;
}

TEST(VerifySuiteTest, SummaryCountsEveryReport) {
  VerifyOptions options;
  options.n_first = 3;
  options.n_last = 6;
  VerifySummary summary;
  const std::vector<Report> reports = collect(Suite::structure, options, &summary);
  std::uint64_t total = 0;
  for (const auto& [verdict, count] : summary.counts) total += count;
  EXPECT_EQ(total, reports.size());
}

TEST(VerifySuiteTest, OutputIsIndependentOfWorkerCount) {
  VerifyOptions one;
  one.n_first = 6;
  one.n_last = 6;
  one.samples = 5000;
  VerifyOptions many = one;
  many.budget.workers = 8;
  VerifySummary s1;
  VerifySummary s2;
  const std::vector<Report> a = collect(Suite::lemmas, one, &s1);
  const std::vector<Report> b = collect(Suite::lemmas, many, &s2);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(without_timing(a[i]), without_timing(b[i])) << a[i].claim_id;
  }
}

}  // namespace
}  // namespace foldkappa
