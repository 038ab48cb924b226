#include <iostream>

#include "ugg/acceptance.hpp"

int main() {
  bool all = true;
  for (const auto& r : ugg::acceptance::run_all()) {
    std::cout << ugg::acceptance::format(r) << '\n';
    all = all && r.pass;
  }
  std::cout << (all ? "all criteria passed" : "some criteria FAILED") << '\n';
  return all ? 0 : 1;
}
