#include <oscgauss/rules.hpp>

#include <cstdio>

int main() {
  const auto rule = oscgauss::gauss_oscillatory(2, oscgauss::Real(3));
  std::printf("%s\n", oscgauss::to_string(rule.nodes[1], 12).c_str());
  return rule.nodes.size() == 2 ? 0 : 1;
}
