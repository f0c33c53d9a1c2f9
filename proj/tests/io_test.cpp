#include "fplab/table_io.hpp"

#include <cmath>
#include <complex>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>

#include <gtest/gtest.h>

#include "fplab/errors.hpp"
#include "fplab/phase.hpp"
#include "fplab/polynomial.hpp"
#include "fplab/table.hpp"

namespace fplab {
namespace {

std::string temp_path(const std::string& name) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::path(testing::TempDir()) / "fplab-io";
  fs::create_directories(dir);
  return (dir / name).string();
}

TableFunction sample_table() {
  TableFunction f(3, 2);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    const double t = static_cast<double>(i);
    f[i] = std::complex<double>(std::sin(t) - 0.5, t / 7.0);
  }
  return f;
}

TEST(TableText, RoundTripsExactly) {
  const std::string path = temp_path("table.txt");
  const TableFunction f = sample_table();
  write_table_text(path, f);
  const TableFunction back = read_table_text(path, 3, 2);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(back[i], f[i]);
  }
}

TEST(TableText, AcceptsCommentsBlanksAndRealOnlyRows) {
  const std::string path = temp_path("sparse.txt");
  std::ofstream out(path);
  out << "# header comment\n";
  out << "1.5\n-0.25 0.5\n0\n\n";  // blank line skipped
  out << "0 # trailing comment\n0\n0\n0\n0\n0\n";
  out.close();
  const TableFunction f = read_table_text(path, 3, 2);
  EXPECT_EQ(f[0], std::complex<double>(1.5, 0.0));
  EXPECT_EQ(f[1], std::complex<double>(-0.25, 0.5));
  EXPECT_EQ(f[2], std::complex<double>(0.0, 0.0));
}

TEST(TableText, RejectsWrongLengthAndMissingFile) {
  const std::string path = temp_path("short.txt");
  std::ofstream(path) << "1\n2\n3\n";
  EXPECT_THROW(read_table_text(path, 3, 2), ContractError);
  EXPECT_THROW(read_table_text(temp_path("absent.txt"), 3, 2), ContractError);
}

TEST(TableBinary, RoundTripsBitExactly) {
  const std::string path = temp_path("table.bin");
  const TableFunction f = sample_table();
  write_table_binary(path, f);
  const TableFunction back = read_table_binary(path, 3, 2);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(back[i], f[i]);
  }
}

TEST(TableBinary, RejectsShortAndOversizedFiles) {
  const std::string path = temp_path("trunc.bin");
  const TableFunction f = sample_table();
  write_table_binary(path, f);
  {
    std::filesystem::resize_file(path, 16);
    EXPECT_THROW(read_table_binary(path, 3, 2), ContractError);
  }
  write_table_binary(path, f);
  {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    out << 'x';
  }
  EXPECT_THROW(read_table_binary(path, 3, 2), ContractError);
}

TEST(LoadFunction, DispatchesOnTheSpec) {
  const Polynomial pi = parse_polynomial("x1*x2", 3, 2);
  const TableFunction phased = load_function("poly:x1*x2", 3, 2);
  const TableFunction direct = phase_table(pi);
  for (std::uint64_t i = 0; i < direct.size(); ++i) {
    EXPECT_NEAR(std::abs(phased[i] - direct[i]), 0.0, 1e-15);
  }

  const TableFunction f = sample_table();
  const std::string bin = temp_path("disp.bin");
  const std::string txt = temp_path("disp.txt");
  write_table_binary(bin, f);
  write_table_text(txt, f);
  const TableFunction from_bin = load_function(bin, 3, 2);
  const TableFunction from_txt = load_function(txt, 3, 2);
  for (std::uint64_t i = 0; i < f.size(); ++i) {
    EXPECT_EQ(from_bin[i], f[i]);
    EXPECT_EQ(from_txt[i], f[i]);
  }
}

TEST(LoadIndicator, LevelSetSpec) {
  const TableFunction a =
      load_function("indicator:poly:x1^2+x2^2:in:0", 5, 2);
  std::uint64_t support = 0;
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    support += a[i].real() > 0.5 ? 1 : 0;
  }
  EXPECT_EQ(support, 9u);

  // Residues reduce mod p, so -1 means 4.
  const TableFunction b = load_indicator("poly:x1^2+x2^2:in:-1,1", 5, 2);
  EXPECT_EQ(b[encode_point(5, {1, 0})], std::complex<double>(1.0, 0.0));
  EXPECT_EQ(b[encode_point(5, {0, 0})], std::complex<double>(0.0, 0.0));
  EXPECT_EQ(b[encode_point(5, {2, 0})], std::complex<double>(1.0, 0.0));
}

TEST(LoadIndicator, IndexListSpec) {
  const std::string path = temp_path("set.txt");
  std::ofstream(path) << "0\n3 # corner\n\n7\n";
  const TableFunction a = load_indicator(path, 3, 2);
  for (std::uint64_t i = 0; i < a.size(); ++i) {
    const bool in_set = i == 0 || i == 3 || i == 7;
    EXPECT_EQ(a[i].real(), in_set ? 1.0 : 0.0);
  }
  std::ofstream(path) << "9\n";
  EXPECT_THROW(load_indicator(path, 3, 2), ContractError);
}

TEST(LoadIndicator, RejectsMalformedSpecs) {
  EXPECT_THROW(load_indicator("poly:x1:in:", 3, 2), ContractError);
  EXPECT_THROW(load_indicator("poly:x1", 3, 2), ContractError);
  EXPECT_THROW(load_indicator("poly:x1:in:abc", 3, 2), ContractError);
}

}  // namespace
}  // namespace fplab
