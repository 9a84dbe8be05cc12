// Walks through the standard computations on the McNugget semigroup and on
// <7,10,12>: Frobenius number, factorizations, length sets, delta sets and
// the maximum-length sequence.

#include <iostream>
#include <vector>

#include "nsg/nsg.hpp"

namespace {

void print(const std::vector<nsg::i64>& v) {
  std::cout << "[";
  for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? ", " : " ") << v[i];
  std::cout << " ]\n";
}

}  // namespace

int main() {
  const nsg::NumericalSemigroup mcn{6, 9, 20};
  std::cout << "F" << nsg::to_string(mcn) << " = " << mcn.frobenius() << "\n";

  for (nsg::i64 n : {50, 60}) {
    std::cout << "Z(" << n << "):\n";
    for (const auto& f : nsg::factorizations(mcn, n)) {
      std::cout << "  ";
      print(f.exponents);
    }
  }
  for (nsg::i64 n : {60, 150}) {
    std::cout << "L(" << n << ") = ";
    print(nsg::length_set(mcn, n).lengths);
  }
  std::cout << "Delta(60) = ";
  print(nsg::delta_element(mcn, 60));
  std::cout << "Delta(S) = ";
  print(nsg::delta_semigroup(mcn));

  const nsg::NumericalSemigroup s{7, 10, 12};
  const nsg::LengthExtremes extremes(s);
  std::vector<nsg::i64> maxima;
  for (nsg::i64 n = 1; n <= 60; ++n)
    if (s.contains(n)) maxima.push_back(extremes.max_length(n));
  std::cout << "max lengths of " << nsg::to_string(s) << " up to 60 = ";
  print(maxima);
  return 0;
}
