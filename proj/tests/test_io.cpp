#include <gtest/gtest.h>

#include <sstream>

#include "trisqueeze/io.hpp"

using namespace trisqueeze;

TEST(Io, FormatRoundTrips) {
  for (double v : {0.1, -0.8646647167633873, 1e-300, 12345.678901234567}) {
    EXPECT_EQ(std::stod(io::format_double(v)), v);
  }
  EXPECT_EQ(io::format_double(0.5), "0.5");
  EXPECT_EQ(io::format_double(2.0), "2");
}

TEST(Io, CsvLayout) {
  std::ostringstream os;
  io::CsvWriter csv(os);
  csv.header({"a", "b"});
  csv.row({1.0, 0.25});
  EXPECT_EQ(os.str(), "a,b\n1,0.25\n");
}

TEST(Io, CoefficientKeys) {
  const auto doc = io::to_json(bogoliubov_coeffs(Params::symmetric(0.3)));
  for (const char* mode : {"mode1", "mode2", "mode3"}) {
    ASSERT_TRUE(doc.contains(mode));
    for (const char* key : {"f1", "f2", "g1", "g2", "h1", "h2"}) EXPECT_TRUE(doc[mode].contains(key));
  }
}

TEST(Io, MomentKeysAndUndefinedRatios) {
  const auto doc = io::to_json(moment_table(Coeffs::identity(), InputState::number(1, 0, 0)));
  EXPECT_DOUBLE_EQ(doc["mean_n"][0].get<double>(), 1.0);
  EXPECT_DOUBLE_EQ(doc["g2"][0].get<double>(), -1.0);
  EXPECT_TRUE(doc["g2"][1].is_null());
  EXPECT_TRUE(doc["v_jk"]["12"].is_null());
}

TEST(Io, GridCsvOrder) {
  QuasiprobGrid g{GridSpec{0, 1, 2, -1, 1, 3}, Ordering::Symmetric, Eigen::MatrixXd::Zero(2, 3)};
  g.values(1, 2) = 0.5;
  std::ostringstream os;
  io::write_csv(os, g);
  EXPECT_EQ(os.str(), "x,y,w\n0,-1,0\n0,0,0\n0,1,0\n1,-1,0\n1,0,0\n1,1,0.5\n");
  const auto doc = io::to_json(g);
  EXPECT_EQ(doc["values"].size(), 6u);
  EXPECT_DOUBLE_EQ(doc["values"][5].get<double>(), 0.5);
}
