// Prints the fraction of cofinite draws in the generator model across p for
// a fixed M, sharing one seed so the curve is coupled across p.

#include <iomanip>
#include <iostream>
#include <vector>

#include "nsg/random.hpp"

int main(int argc, char** argv) {
  const nsg::i64 M = argc > 1 ? std::stoll(argv[1]) : 200;
  const nsg::i64 trials = argc > 2 ? std::stoll(argv[2]) : 500;
  std::vector<double> grid;
  for (int i = 0; i < 20; ++i) grid.push_back(10.0 / static_cast<double>(M) * i / 19.0);

  std::cout << "p,M*p,p_cofinite,mean_e,mean_g\n";
  for (const auto& row : nsg::random::threshold_scan(M, grid, trials, 2024)) {
    std::cout << std::setprecision(6) << row.p << "," << row.p * static_cast<double>(M) << ","
              << row.stats.p_cofinite << "," << row.stats.mean_e << "," << row.stats.mean_g << "\n";
  }
  return 0;
}
