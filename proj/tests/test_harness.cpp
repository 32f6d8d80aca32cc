// Copyright 2026 The wehrlkit Authors
// SPDX-License-Identifier: Apache-2.0

#include <iterator>

#include <gtest/gtest.h>

#include "wehrl/error.hpp"
#include "wehrl/harness.hpp"

using namespace wehrl;

TEST(Families, Construction) {
  const auto coh = make_family(parse_family("coherent", {1, 2, 3}));
  ASSERT_EQ(coh.size(), 3u);
  for (const auto& s : coh) EXPECT_TRUE(s.coherent);
  const auto fock = make_family(parse_family("fock", {}));
  EXPECT_EQ(fock.size(), 5u);
  const auto pert = make_family(parse_family("perturbed", {}));
  EXPECT_EQ(pert.size(), std::size(kPerturbations));
  const auto gin = make_family(parse_family("ginibre:2", {4, 5}));
  ASSERT_EQ(gin.size(), 2u);
  EXPECT_FALSE(gin[0].pure.has_value());
  EXPECT_THROW(parse_family("squeezed", {1}), Error);
  EXPECT_THROW(parse_family("ginibre", {1}), Error);
  EXPECT_GE(default_families().size(), 4u);
}

TEST(Config, ParsesAndRejects) {
  const auto c = parse_config(R"({"families":["fock",{"name":"ginibre","rank":2}],
                                  "phis":["wehrl","power:2"],"taus":[0.2],"seeds":[3,4]})");
  ASSERT_EQ(c.families.size(), 2u);
  EXPECT_EQ(c.families[1].rank, 2);
  EXPECT_EQ(c.phis.size(), 2u);
  EXPECT_EQ(c.seeds.size(), 2u);
  EXPECT_THROW(parse_config(R"({"families":["fock"],"bogus":1})"), Error);
  EXPECT_THROW(parse_config("[1,2]"), Error);
  EXPECT_THROW(parse_config(R"({"families":["nope"]})"), Error);
  EXPECT_THROW(load_config("/nonexistent.json"), Error);
  const auto d = parse_config(R"({"families":["fock"]})");
  EXPECT_EQ(d.phis, std::vector<std::string>{"wehrl"});
}

TEST(Sweep, ShapeAndDeterminism) {
  const auto c = parse_config(R"({"families":["fock",{"name":"ginibre","rank":2}],
                                  "phis":["wehrl","power:2"],"taus":[0.2],"seeds":[1,2]})");
  const auto rows = sweep_constants(c);
  EXPECT_EQ(rows.size(), 6u);
  for (const auto& r : rows) EXPECT_EQ(r.violations, 0) << r.family << " " << r.quantity;
  const auto csv = sweep_to_csv(rows);
  EXPECT_EQ(csv.rfind("family,quantity,states,min_ratio,max_ratio,violations", 0), 0u);
  EXPECT_EQ(csv, sweep_to_csv(sweep_constants(c)));
  EXPECT_FALSE(sweep_to_json(rows).empty());
}

TEST(Verify, GeneralizedRejectsLinear) {
  const std::vector<FamilySpec> fams{parse_family("fock", {})};
  EXPECT_THROW(verify_generalized(fams, ConvexSymbol::linear()), Error);
  EXPECT_TRUE(verify_generalized(fams, ConvexSymbol::power(2)).ok());
}

TEST(Verify, WehrlOnFock) {
  const auto run = verify_wehrl({parse_family("fock", {})});
  EXPECT_TRUE(run.ok());
  EXPECT_EQ(run.summary.states, 5);
  EXPECT_NO_THROW(run.assert_ok());
  EXPECT_NE(run.to_json().find("\"theorem\""), std::string::npos);
}

TEST(Verify, StabTauAndFaberKrahnOnFirstFock) {
  const auto f = FockVector::basis(1, 4);
  const auto s = verify_stabtau(f, std::exp(-1.0) * 0.5);
  EXPECT_TRUE(s.ok);
  EXPECT_LE(s.lhs, s.reference);
  const auto fk = verify_faber_krahn(f, 0.1);
  EXPECT_TRUE(fk.ok);
  EXPECT_LE(fk.lhs, fk.base + 1e-8);
  EXPECT_THROW(verify_faber_krahn(f, 0.5), Error);
}

TEST(Verify, PureStateRunsOnFock) {
  const std::vector<FamilySpec> fams{parse_family("fock", {})};
  const auto ls = verify_logsob(fams);
  EXPECT_TRUE(ls.ok());
  EXPECT_EQ(ls.summary.states, 5);
  const auto fk = verify_faber_krahn_run(fams, {0.1, 0.3, 0.95});
  EXPECT_TRUE(fk.ok());
  // levels at or above T are skipped: T(e_n) = n^n e^{-n} / n!
  EXPECT_EQ(fk.summary.states, 5 + 2 + 1);
  ASSERT_FALSE(fk.results.empty());
  EXPECT_EQ(fk.results.front().label, make_family(fams[0]).front().label);
}
