// Copyright 2026 The qsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "golden.hpp"
#include "qsym/serialize.hpp"

using namespace qsym;
using qsym::testing::entry;

TEST(Serialize, ScalarsRoundTrip) {
  for (const char* text : {"0", "1", "-3", "q", "q^-1/2", "q^1/4"}) {
    const auto x = entry(text);
    EXPECT_EQ(scalar_from_json<QScalar>(scalar_to_json(x)), x) << text;
  }
  const QScalar mixed = entry("q^1/4") - entry("q^-3/4") * QScalar(Rational(2, 3));
  EXPECT_EQ(scalar_from_json<QScalar>(scalar_to_json(mixed)), mixed);
  for (double x : {0.0, 1.0, -2.5, 0.1, 1.0 / 3.0, 1e-300})
    EXPECT_EQ(scalar_from_json<double>(json::parse(scalar_to_json(x).dump())), x);
}

TEST(Serialize, FormatNames) {
  EXPECT_EQ(parse_format("json"), Format::Json);
  EXPECT_EQ(parse_format("csv"), Format::Csv);
  EXPECT_EQ(parse_format("pretty"), Format::Pretty);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Serialize, OperatorShapeAndRoundTrip) {
  const auto w = q_transposition(1, 2, ExactBackend{});
  const auto j = to_json(w);
  EXPECT_EQ(j.at("rows"), 4);
  EXPECT_EQ(j.at("cols"), 4);
  ASSERT_EQ(j.at("entries").size(), 4U);
  EXPECT_EQ(j.at("entries")[0].at("row"), 0);
  EXPECT_EQ(j.at("entries")[0].at("col"), 0);
  EXPECT_EQ(j.at("entries")[0].at("value"), "1/1*s^0");
  EXPECT_EQ(j.at("entries")[1].at("value"), "1/1*s^-2");
  const auto back = operator_from_json<QScalar>(j);
  EXPECT_EQ(back, w);
  EXPECT_EQ(to_json(back).dump(), j.dump());

  const auto p = projector(3, NumericBackend(2.0));
  const auto pj = to_json(p);
  const auto reparsed = json::parse(pj.dump());
  EXPECT_EQ(operator_from_json<double>(reparsed), p);
  EXPECT_EQ(to_json(operator_from_json<double>(reparsed)).dump(), pj.dump());
}

TEST(Serialize, StateRoundTrip) {
  const auto d = q_dicke(3, 1, ExactBackend{});
  const auto j = to_json(d);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(j.at("m"), 1);
  EXPECT_EQ(j.at("amplitudes").size(), 8U);
  EXPECT_TRUE(j.contains("norm_sq"));
  const auto back = state_from_json<QScalar>(j);
  EXPECT_EQ(back.amplitudes, d.amplitudes);
  EXPECT_EQ(back.norm_sq, d.norm_sq);
  EXPECT_EQ(to_json(back).dump(), j.dump());

  const auto dn = q_dicke(4, 2, NumericBackend(0.5));
  const auto jn = json::parse(to_json(dn).dump());
  EXPECT_EQ(state_from_json<double>(jn).amplitudes, dn.amplitudes);
}

TEST(Serialize, MetricRoundTrip) {
  const auto m = metric_matrix(3, ExactBackend{});
  const auto j = to_json(m);
  EXPECT_EQ(j.at("n"), 3);
  EXPECT_EQ(metric_from_json<QScalar>(j).diagonal, m.diagonal);
  EXPECT_EQ(to_json(metric_from_json<QScalar>(j)).dump(), j.dump());
}

TEST(Serialize, PermutationAndDiagram) {
  const Permutation s({2, 3, 1});
  EXPECT_EQ(permutation_from_json(to_json(s)), s);
  const auto d = crossing_counts(reduced_word(Permutation::reversal(3)), 3);
  const auto j = to_json(d);
  EXPECT_EQ(j.at("m_counts"), json({-2, 0, 2}));
  EXPECT_EQ(diagram_from_json(j, 3).m_counts, d.m_counts);
  auto bad = j;
  bad["m_counts"] = json({0, 0, 0});
  EXPECT_THROW(diagram_from_json(bad, 3), std::invalid_argument);
}

TEST(Serialize, ReportsRoundTrip) {
  const auto r = run_suite("hecke", 3, NumericBackend(2.0));
  const auto j = to_json(r);
  ASSERT_TRUE(j.is_array());
  ASSERT_FALSE(j.empty());
  const auto first = j[0];
  std::vector<std::string> keys;
  for (auto it = first.begin(); it != first.end(); ++it) keys.push_back(it.key());
  ASSERT_GE(keys.size(), 5U);
  EXPECT_EQ(std::vector<std::string>(keys.begin(), keys.begin() + 5),
            (std::vector<std::string>{"identity_name", "backend", "q_values", "max_residual", "pass"}));
  const auto back = report_from_json(json::parse(j.dump()));
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Serialize, SectorReportRoundTrip) {
  const auto s = casimir_sectors(4, 2.0);
  const auto j = to_json(s);
  EXPECT_EQ(j.at("n"), 4);
  EXPECT_EQ(j.at("q"), 2.0);
  ASSERT_EQ(j.at("sectors").size(), 3U);
  const auto& top = j.at("sectors")[0];
  EXPECT_EQ(top.at("two_j"), 4);
  EXPECT_EQ(top.at("multiplicity"), 1);
  EXPECT_EQ(top.at("dimension_check"), 5);
  const auto back = sectors_from_json(json::parse(j.dump()));
  EXPECT_EQ(to_json(back).dump(), j.dump());
}

TEST(Serialize, Deterministic) {
  const auto a = to_json(projector(4, ExactBackend{})).dump();
  const auto b = to_json(projector(4, ExactBackend{})).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(to_csv(q_transposition(1, 2, ExactBackend{})), to_csv(q_transposition(1, 2, ExactBackend{})));
}

TEST(Serialize, TextFormatsMentionEntries) {
  const auto w = q_transposition(1, 2, ExactBackend{});
  const auto csv = to_csv(w);
  EXPECT_NE(csv.find("1/1*s^-2"), std::string::npos);
  const auto pretty = to_pretty(w);
  EXPECT_NE(pretty.find("q^(-1/2)"), std::string::npos);
  EXPECT_FALSE(to_pretty(casimir_sectors(2, 1.0)).empty());
  EXPECT_EQ(spin_label(3), "3/2");
  EXPECT_EQ(spin_label(4), "2");
}
