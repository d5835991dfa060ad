#include <iostream>

#include "allot/rules.hpp"

int main() {
  const std::vector<allot::Rat> peaks{allot::rat(1, 3), 0};
  const allot::Allotment x = allot::ced(allot::make_economy(peaks, 1));
  std::cout << allot::to_string(x[0]) << ", " << allot::to_string(x[1]) << '\n';
  return x[0] == allot::rat(2, 3) ? 0 : 1;
}
