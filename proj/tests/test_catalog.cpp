#include <gtest/gtest.h>

#include "grossone/catalog.hpp"
#include "grossone/error.hpp"
#include "grossone/syntax.hpp"

using namespace grossone;

TEST(Catalog, Listing) {
  const auto& entries = list_entries();
  ASSERT_EQ(entries.size(), 19u);
  EXPECT_EQ(entries.front().id, "naturals");
  EXPECT_EQ(render(entries.front().gross_count), "G1");
  EXPECT_EQ(entries.front().cantor_label, CantorLabel::Countable);
  EXPECT_EQ(entries.back().id, "tuples");
  EXPECT_EQ(entries.back().count_text, "G1^m");

  const auto& ps = find_entry("powerset-naturals");
  EXPECT_EQ(render(ps.gross_count), "2^G1");
  EXPECT_EQ(ps.cantor_label, CantorLabel::Continuum);
}

TEST(Catalog, TableOrderAndCounts) {
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"naturals", "G1"},
      {"naturals-minus-5", "G1 - 5"},
      {"evens", "0.5*G1"},
      {"integers", "2*G1 + 1"},
      {"integers-nonzero", "2*G1"},
      {"squares", "floor(sqrt(G1))"},
      {"pairs", "G1^2"},
      {"rationals-q1", "4*G1^2 + 2*G1"},
      {"rationals-q2", "2*G1^2 + 1"},
      {"powerset-naturals", "2^G1"},
      {"powerset-evens", "2^(0.5*G1)"},
      {"powerset-integers", "2^(2*G1+1)"},
      {"powerset-q1", "2^(4*G1^2+2*G1)"},
      {"powerset-q2", "2^(2*G1^2+1)"},
      {"binary-unit", "2^G1"},
      {"binary-unit-closed", "2^G1+1"},
      {"decimal-unit-open", "10^G1-1"},
      {"decimal-zero-two", "2*10^G1"},
  };
  const auto& entries = list_entries();
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(entries[i].id, expected[i].first);
    EXPECT_EQ(render(entries[i].gross_count), expected[i].second) << entries[i].id;
    EXPECT_EQ(entries[i].cantor_label, i < 9 ? CantorLabel::Countable : CantorLabel::Continuum) << entries[i].id;
  }
}

TEST(Catalog, GrossCount) {
  EXPECT_EQ(render(gross_count("integers")), "2*G1 + 1");
  EXPECT_EQ(render(gross_count("tuples", Arity::finite(2))), "G1^2");
  EXPECT_EQ(render(gross_count("tuples", Arity::finite(5))), "G1^5");
  EXPECT_EQ(render(gross_count("tuples", Arity::grossone_token())), "G1^G1");
  EXPECT_EQ(render(gross_count("odds")), "0.5*G1");
  EXPECT_THROW(gross_count("reals"), UnknownEntry);
  EXPECT_THROW(gross_count("tuples"), InvalidArgument);
  EXPECT_THROW(gross_count("tuples", Arity::finite(1)), InvalidArgument);
  EXPECT_THROW(gross_count("naturals", Arity::finite(2)), InvalidArgument);
}

TEST(Oracle, FrozenValues) {
  EXPECT_EQ(finite_count_oracle("rationals-q1", 5), 110);
  EXPECT_EQ(finite_count_oracle("integers", 4), 9);
  EXPECT_EQ(finite_count_oracle("binary-unit-closed", 3), 9);
  EXPECT_EQ(finite_count_oracle("evens", 10), 5);
  EXPECT_EQ(finite_count_oracle("odds", 10), 5);
  EXPECT_EQ(finite_count_oracle("squares", 10), 3);
  EXPECT_EQ(finite_count_oracle("naturals-minus-5", 120), 115);
  EXPECT_EQ(finite_count_oracle("rationals-q2", 3), 19);
  EXPECT_EQ(finite_count_oracle("powerset-q1", 2), 1 << 20);
  EXPECT_EQ(finite_count_oracle("decimal-zero-two", 2), 200);
  EXPECT_EQ(finite_count_oracle("decimal-unit-open", 1), 9);
  EXPECT_EQ(finite_count_oracle("tuples", 4, Arity::finite(3)), 64);
}

TEST(Oracle, CheckEntryExamples) {
  EXPECT_TRUE(check_entry("evens", 10));
  EXPECT_TRUE(check_entry("squares", 10));
  EXPECT_TRUE(check_entry("naturals-minus-5", 120));
}

TEST(Oracle, Applicability) {
  try {
    finite_count_oracle("evens", 7);
    FAIL() << "expected InapplicableN";
  } catch (const InapplicableN& e) {
    EXPECT_EQ(e.diagnostic(), "InapplicableN: evens oracle requires even n");
  }
  EXPECT_THROW(finite_count_oracle("odds", 7), InapplicableN);
  EXPECT_THROW(finite_count_oracle("naturals-minus-5", 113), InapplicableN);
  EXPECT_THROW(finite_count_oracle("powerset-naturals", 21), InapplicableN);
  EXPECT_THROW(finite_count_oracle("powerset-integers", 10), InapplicableN);
  EXPECT_THROW(finite_count_oracle("decimal-unit-open", 7), InapplicableN);
  EXPECT_THROW(finite_count_oracle("tuples", 1001, Arity::finite(2)), InapplicableN);
  EXPECT_THROW(finite_count_oracle("tuples", 3, Arity::grossone_token()), NoOracle);
  EXPECT_THROW(finite_count_oracle("naturals", 0), InvalidArgument);
  EXPECT_THROW(finite_count_oracle("nope", 3), UnknownEntry);
}

TEST(Oracle, BackendsAgree) {
  for (const auto& p : default_sweep()) {
    if (p.id.rfind("powerset", 0) == 0 && p.n > 12) continue;
    EXPECT_EQ(finite_count_oracle(p.id, p.n, p.m, kernels::Backend::Serial),
              finite_count_oracle(p.id, p.n, p.m, kernels::Backend::Parallel))
        << p.id << " n=" << p.n;
  }
}

TEST(Oracle, FullSweep) {
  std::size_t checked = 0;
  for (const auto& p : default_sweep()) {
    EXPECT_TRUE(check_entry(p.id, p.n, p.m)) << p.id << " n=" << p.n;
    ++checked;
  }
  EXPECT_GT(checked, 300u);
}

TEST(Properties, CantorLabelMatchesCount) {
  for (const auto& e : list_entries()) EXPECT_EQ(label_for(e.gross_count), e.cantor_label) << e.id;
  EXPECT_EQ(label_for(gross_count("tuples", Arity::finite(7))), CantorLabel::Countable);
}

TEST(Properties, Discrimination) {
  const Expr one = Expr::atom(GrossNumber(1));
  for (const auto& e : list_entries()) {
    const Expr more = simplify(e.gross_count + one);
    EXPECT_NE(more, e.gross_count) << e.id;
    EXPECT_EQ(dominance_compare(more, e.gross_count), Dominance::Greater) << e.id;
  }
}
