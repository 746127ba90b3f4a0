#pragma once

#include <map>
#include <string>

namespace dioph {

// One verified quantity: the bound it is held to, the measured value, and
// whether it passed.
struct BoundReport {
  std::string quantity;
  double bound = 0.0;
  double measured = 0.0;
  bool pass = false;
  std::string note;
  std::map<std::string, double> details;
};

}  // namespace dioph
