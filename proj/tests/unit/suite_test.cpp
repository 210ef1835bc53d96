#include "secm/suite.hpp"

#include <gtest/gtest.h>

#include <set>

#include "secm/errors.hpp"

using namespace secm;

TEST(Suite, Names) {
  EXPECT_EQ(parse_suite("paper"), Suite::paper);
  EXPECT_EQ(parse_suite("quick"), Suite::quick);
  EXPECT_THROW(parse_suite("all"), InputError);
}

TEST(Suite, QuickSuitePasses) {
  const auto reports = run_suite(Suite::quick);
  ASSERT_FALSE(reports.empty());
  std::set<std::string> ids;
  for (const VerificationReport& r : reports) {
    EXPECT_TRUE(r.pass) << r.check_id << ": " << r.detail;
    EXPECT_TRUE(ids.insert(r.check_id).second) << "duplicate id " << r.check_id;
    if (r.expected) {
      EXPECT_LE(std::abs(r.computed - *r.expected), r.tolerance) << r.check_id;
    }
  }
}

TEST(Suite, QuickIsASubsetOfFull) {
  std::set<std::string> full;
  for (const VerificationReport& r : run_suite(Suite::paper)) full.insert(r.check_id);
  for (const VerificationReport& r : run_suite(Suite::quick)) EXPECT_TRUE(full.count(r.check_id)) << r.check_id;
}

TEST(Reports, MetricLookup) {
  VerificationReport r = numeric_report("x", 1.0, 1.0 + 1e-9, 1e-8, Provenance::paper);
  EXPECT_TRUE(r.pass);
  r.metrics = {{"a", 2.0}};
  EXPECT_DOUBLE_EQ(r.metric("a"), 2.0);
  EXPECT_THROW(r.metric("b"), std::out_of_range);
  EXPECT_FALSE(property_report("p", 1e-3, 1e-4, Provenance::derived).pass);
  EXPECT_EQ(to_string(Provenance::trivial), "trivial");
}
