#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "jury/csv.hpp"

using namespace jury;

TEST(Csv, WritesHeaderAndShortestNumbers) {
  CsvTable t{{"n", "exact", "value"}, {}};
  t.add_row({3.0, std::string("3/2"), 1.5});
  t.add_row({5.0, std::string("15/8"), 0.1});
  EXPECT_EQ(to_csv(t), "n,exact,value\n3,3/2,1.5\n5,15/8,0.1\n");
}

TEST(Csv, RejectsRaggedRows) {
  CsvTable t{{"a", "b"}, {}};
  EXPECT_THROW(t.add_row({1.0}), domain_error);
}

TEST(Csv, RoundTripsRandomDoublesBitForBit) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CsvTable t{{"x", "y", "label"}, {}};
  for (int i = 0; i < 2000; ++i)
    t.add_row({u(rng) * std::pow(10.0, i % 40 - 20), 1.0 / (i + 1), std::string("row") + std::to_string(i % 3) + "/x"});
  t.add_row({0.0, -0.0, std::string("edge")});
  t.add_row({5e-324, 1.7976931348623157e308, std::string("limits")});
  const auto parsed = parse_csv(to_csv(t));
  ASSERT_EQ(parsed.header, t.header);
  ASSERT_EQ(parsed.rows.size(), t.rows.size());
  for (std::size_t r = 0; r < t.rows.size(); ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      if (const auto* d = std::get_if<double>(&t.rows[r][c])) {
        const double back = std::get<double>(parsed.rows[r][c]);
        EXPECT_EQ(std::signbit(*d), std::signbit(back));
        EXPECT_EQ(*d, back);
      } else {
        EXPECT_EQ(std::get<std::string>(parsed.rows[r][c]), std::get<std::string>(t.rows[r][c]));
      }
    }
}
