#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nichols/report.hpp"

namespace testing {

using namespace nichols;

inline FamilyParams params(std::string name, std::string letter, int theta, int k, int64_t N) {
  FamilyParams p;
  p.name = std::move(name);
  p.letter = std::move(letter);
  p.theta = theta;
  p.k = k;
  p.N = N;
  return p;
}

inline FamilyParams cartan(const std::string& letter, int theta, int64_t N) { return params("cartan", letter, theta, 0, N); }

inline Analysis run(const FamilyParams& p) { return analyze(family_input(p), AnalysisOptions{}); }

inline std::complex<double> numeric(const RootOfUnity& z) {
  const double angle = 2.0 * 3.14159265358979323846 * double(z.numerator()) / double(z.order());
  return std::polar(1.0, angle);
}

// Deterministic generators for property tests.
struct Gen {
  std::mt19937_64 rng;
  explicit Gen(uint64_t seed) : rng(seed) {}

  int64_t range(int64_t lo, int64_t hi) { return std::uniform_int_distribution<int64_t>(lo, hi)(rng); }

  RootOfUnity root(int64_t max_order) {
    const int64_t m = range(1, max_order);
    return make_root(range(0, m - 1), m);
  }

  RootVec vec(size_t n, int64_t lo, int64_t hi) {
    RootVec v(n);
    for (auto& x : v) x = range(lo, hi);
    return v;
  }

  IntMat int_matrix(size_t rows, size_t cols, int64_t bound) {
    IntMat m(rows, cols, Integer(0));
    for (size_t i = 0; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) m(i, j) = Integer(static_cast<long>(range(-bound, bound)));
    return m;
  }
};

// Every table row at one N each, ranks at most 5.
inline std::vector<FamilyParams> table_rows(int64_t N) {
  std::vector<FamilyParams> rows;
  for (int t = 1; t <= 5; ++t) rows.push_back(cartan("A", t, N));
  for (int t = 2; t <= 5; ++t) rows.push_back(cartan("B", t, N));
  for (int t = 3; t <= 5; ++t) rows.push_back(cartan("C", t, N));
  for (int t = 4; t <= 5; ++t) rows.push_back(cartan("D", t, N));
  rows.push_back(cartan("F", 4, N));
  rows.push_back(cartan("G", 2, N));
  for (int t = 2; t <= 5; ++t)
    for (int k = 1; k <= (t + 1) / 2; ++k) rows.push_back(params("superA", "", t, k, N));
  for (int t = 2; t <= 5; ++t)
    for (int k = 1; k < t; ++k) rows.push_back(params("superB", "", t, k, N));
  for (int t = 3; t <= 5; ++t)
    for (int k = 2; k < t; ++k) rows.push_back(params("superD", "", t, k, N));
  for (const char* name : {"D21", "superF4", "superG3", "wk4", "br2"}) rows.push_back(params(name, "", 0, 0, N));
  return rows;
}

// Drops rows whose N is outside the table's range.
inline std::vector<FamilyParams> admissible(const std::vector<FamilyParams>& rows) {
  std::vector<FamilyParams> out;
  for (const auto& p : rows) {
    try {
      family(p);
      out.push_back(p);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::UnsupportedParameters) throw;
    }
  }
  return out;
}

}  // namespace testing
