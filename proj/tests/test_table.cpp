#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <random>

#include "doctest.h"
#include "impmine/table.hpp"
#include "test_util.hpp"

using namespace impmine;
using testutil::bits_of;
using testutil::make_table;

// data/table1.txt column order: t a1 a2 b1 b2 s  (0-based 0..5)

TEST_CASE("parse: the 9x6 example table") {
  BinaryTable t = make_table(testutil::kTable1);
  CHECK(t.n_rows() == 9);
  CHECK(t.n_cols() == 6);
  // row 5 (1-based) reads 111110
  CHECK(t.row(4) == bits_of(6, {0, 1, 2, 3, 4}));
  REQUIRE(t.attr_names().has_value());
  CHECK(t.attr_names()->at(0) == "t");
  CHECK(t.attr_names()->at(5) == "s");
}

TEST_CASE("parse: minimal and malformed inputs") {
  BinaryTable one = make_table("0 1\n");
  CHECK(one.n_rows() == 1);
  CHECK(one.n_cols() == 2);

  CHECK_THROWS_AS(make_table(""), ParseError);
  CHECK_THROWS_AS(make_table("# only a header\n\n"), ParseError);

  try {
    make_table("0 2 1\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.token() == 2);
  }

  CHECK_THROWS_AS(make_table("0 1\n0 1 1\n"), ParseError);   // ragged
  CHECK_THROWS_AS(make_table("1\n"), ParseError);            // one column
  CHECK_THROWS_AS(make_table("# a b c\n0 1\n"), ParseError); // name mismatch

  BinaryTable commas = make_table("0,1,1\n1,0,1\n");
  CHECK(commas.n_cols() == 3);
  CHECK(commas.bit(1, 0));

  // later # lines are plain comments, blank lines are skipped
  BinaryTable noisy = make_table("\n# x y\n0 1\n# trailing comment\n\n1 1\n");
  CHECK(noisy.n_rows() == 2);
  CHECK(noisy.attr_names()->at(1) == "y");
}

TEST_CASE("parse: file round trip") {
  std::ifstream in(testutil::data_file("table1.txt"));
  REQUIRE(in.good());
  BinaryTable t = parse_table(in);
  CHECK(t.n_rows() == 9);
  CHECK(t.row(4) == bits_of(6, {0, 1, 2, 3, 4}));
}

TEST_CASE("support_of_attrs") {
  BinaryTable t = make_table(testutil::kTable1);
  // {a2,b2} is supported by objects 3,5,8,9
  CHECK(t.support_of_attrs(bits_of(6, {2, 4})) == bits_of(9, {2, 4, 7, 8}));
  // empty set: every object
  CHECK(t.support_of_attrs(Bitset(6)) == Bitset(9, true));
  // {t}: objects 2,5,7,8,9
  std::vector<int> y{0};
  CHECK(t.support_of_attrs(y) == bits_of(9, {1, 4, 6, 7, 8}));
  std::vector<int> bad{6};
  CHECK_THROWS_AS(t.support_of_attrs(bad), std::out_of_range);
}

TEST_CASE("support_of_rows") {
  BinaryTable t = make_table(testutil::kTable1);
  // objects {6,7} share b1,b2
  std::vector<int> z{5, 6};
  CHECK(t.support_of_rows(z) == bits_of(6, {3, 4}));
  CHECK(t.support_of_rows(Bitset(9)) == Bitset(6, true));
  // all objects share nothing
  CHECK(t.support_of_rows(Bitset(9, true)) == Bitset(6));
  std::vector<int> bad{9};
  CHECK_THROWS_AS(t.support_of_rows(bad), std::out_of_range);
}

TEST_CASE("closure") {
  BinaryTable t = make_table(testutil::kTable1);
  CHECK(t.closure(bits_of(6, {0})) == bits_of(6, {0, 3, 4}));  // {t,b1,b2}
  CHECK(t.closure(Bitset(6, true)) == Bitset(6, true));
  // {a1,b2} closes to {t,a1,a2,b1,b2}
  CHECK(t.closure(bits_of(6, {1, 4})) == bits_of(6, {0, 1, 2, 3, 4}));
}

TEST_CASE("reduce: liver table drops column 6 and merges 8 into 7") {
  std::ifstream in(testutil::data_file("liver.txt"));
  REQUIRE(in.good());
  BinaryTable t = parse_table(in);
  auto [red, log] = t.reduced();
  CHECK(red.n_cols() == 20);
  CHECK(red.n_rows() == 10);
  CHECK(log.removed_full_columns == std::vector<int>{5});
  REQUIRE(log.merged_duplicates.size() == 1);
  CHECK(log.merged_duplicates[0] == std::pair<int, int>{7, 6});
  CHECK(log.forward[5] == ReductionLog::kRemovedAllOnes);
  CHECK(log.forward[7] == ReductionLog::kMerged);
  CHECK(log.representative(7) == 6);
  CHECK(log.forward[0] == 0);
  CHECK(log.forward[21] == 19);
  CHECK(log.back[19] == 21);
}

TEST_CASE("reduce: identity on the 9x6 example") {
  BinaryTable t = make_table(testutil::kTable1);
  auto [red, log] = t.reduced();
  CHECK(log.empty());
  CHECK(red.n_cols() == 6);
  for (int c = 0; c < 6; ++c) {
    CHECK(log.forward[c] == c);
    CHECK(log.back[c] == c);
    CHECK(red.column(c) == t.column(c));
  }
}

TEST_CASE("reduce: table with only all-ones columns cannot be reduced") {
  BinaryTable t = make_table("1 1\n1 1\n");
  CHECK_THROWS_AS(t.reduced(), std::invalid_argument);
}

TEST_CASE("target status") {
  std::ifstream in(testutil::data_file("liver.txt"));
  BinaryTable liver = parse_table(in);
  // on the unreduced table, column 6 is all ones
  auto st = liver.target_status(5);
  CHECK(st.kind == TargetStatusKind::kReducible);
  CHECK(st.reason == ReducibleReason::kAllOnes);

  BinaryTable dup = make_table("1 1 0\n0 0 1\n1 1 1\n");
  auto st2 = dup.target_status(1);
  CHECK(st2.kind == TargetStatusKind::kReducible);
  CHECK(st2.reason == ReducibleReason::kDuplicate);
  CHECK(st2.related_columns == std::vector<int>{0});

  BinaryTable t1 = make_table(testutil::kTable1);
  CHECK(t1.target_status(0).usable());

  BinaryTable zero = make_table("1 0\n1 0\n");
  CHECK(zero.target_status(1).kind == TargetStatusKind::kEmptyExtent);

  // column 0 = column 1 AND column 2, strictly below both
  BinaryTable inter = make_table("1 1 1\n0 1 0\n0 0 1\n");
  auto st3 = inter.target_status(0);
  CHECK(st3.kind == TargetStatusKind::kReducible);
  CHECK(st3.reason == ReducibleReason::kIntersection);
  CHECK(st3.related_columns == std::vector<int>{1, 2});

  CHECK_THROWS_AS(t1.target_status(6), std::out_of_range);
}

TEST_CASE("target status: intersection criterion agrees with subset brute force") {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 150; ++trial) {
    BinaryTable t = testutil::random_table(rng, 8, 7);
    for (int target = 0; target < t.n_cols(); ++target) {
      const Bitset& ext = t.column(target);
      if (ext.none() || ext.all()) continue;
      bool dup = false;
      for (int z = 0; z < t.n_cols(); ++z)
        if (z != target && t.column(z) == ext) dup = true;
      if (dup) continue;

      // brute force: some nonempty subset of other columns intersects to ext
      bool found = false;
      const int n = t.n_cols();
      for (std::uint32_t mask = 1; mask < (1u << n) && !found; ++mask) {
        if (mask & (1u << target)) continue;
        Bitset acc(t.n_rows(), true);
        for (int z = 0; z < n; ++z)
          if (mask & (1u << z)) acc &= t.column(z);
        found = acc == ext;
      }
      const auto st = t.target_status(target);
      const bool reported = st.kind == TargetStatusKind::kReducible &&
                            st.reason == ReducibleReason::kIntersection;
      REQUIRE(reported == found);
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("negate_column") {
  BinaryTable t = make_table(testutil::kTable1);
  BinaryTable neg = t.negate_column(0);
  // complement of {2,5,7,8,9} is {1,3,4,6}
  CHECK(neg.column(0) == bits_of(9, {0, 2, 3, 5}));
  // involution restores the original
  BinaryTable back = neg.negate_column(0);
  for (int c = 0; c < 6; ++c) CHECK(back.column(c) == t.column(c));
  for (int r = 0; r < 9; ++r) CHECK(back.row(r) == t.row(r));

  BinaryTable one = make_table("0 1\n");
  BinaryTable flipped = one.negate_column(0);
  CHECK(flipped.bit(0, 0));
  CHECK(flipped.bit(0, 1));

  CHECK_THROWS_AS(t.negate_column(-1), std::out_of_range);
}

TEST_CASE("rows and columns encode the same relation") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    BinaryTable t = testutil::random_table(rng, 12, 10);
    for (int r = 0; r < t.n_rows(); ++r)
      for (int c = 0; c < t.n_cols(); ++c)
        REQUIRE(t.row(r).test(c) == t.column(c).test(r));
  }
}

TEST_CASE("property: Galois connection") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int samples = 0;
  while (samples < 400) {
    BinaryTable t = testutil::random_table(rng, 10, 9);
    for (int rep = 0; rep < 4; ++rep, ++samples) {
      Bitset y(t.n_cols()), z(t.n_rows());
      for (int c = 0; c < t.n_cols(); ++c)
        if (unit(rng) < 0.3) y.set(c);
      for (int r = 0; r < t.n_rows(); ++r)
        if (unit(rng) < 0.3) z.set(r);
      const bool lhs = z.is_subset_of(t.support_of_attrs(y));
      const bool rhs = y.is_subset_of(t.support_of_rows(z));
      REQUIRE(lhs == rhs);
    }
  }
}

TEST_CASE("property: closure is increasing, monotone, idempotent") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 120; ++trial) {
    BinaryTable t = testutil::random_table(rng, 10, 9);
    Bitset y(t.n_cols()), y2(t.n_cols());
    for (int c = 0; c < t.n_cols(); ++c) {
      if (unit(rng) < 0.3) y.set(c);
      if (unit(rng) < 0.5) y2.set(c);
    }
    y2 |= y;  // ensure y subset of y2
    const Bitset cy = t.closure(y);
    REQUIRE(y.is_subset_of(cy));
    REQUIRE(cy.is_subset_of(t.closure(y2)));
    REQUIRE(t.closure(cy) == cy);
  }
}

TEST_CASE("property: reduction is idempotent and index maps round-trip") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 80; ++trial) {
    BinaryTable t = testutil::random_table(rng, 8, 8, 0.2, 0.9);
    ReductionLog log;
    BinaryTable red = t;
    try {
      std::tie(red, log) = t.reduced();
    } catch (const std::invalid_argument&) {
      continue;  // everything reduced away
    }
    auto [red2, log2] = red.reduced();
    REQUIRE(log2.empty());
    for (std::size_t j = 0; j < log.back.size(); ++j)
      REQUIRE(log.forward[log.back[j]] == static_cast<int>(j));
    for (int c = 0; c < t.n_cols(); ++c)
      if (log.forward[c] >= 0) REQUIRE(log.back[log.forward[c]] == c);
    // merged pairs really are identical columns of the original
    for (const auto& [col, rep] : log.merged_duplicates)
      REQUIRE(t.column(col) == t.column(rep));
  }
}
