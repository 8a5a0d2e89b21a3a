#pragma once

#include <string>
#include <vector>

namespace abwave {

// Screen intensity profile; rho = |psi|^2.
struct Pattern {
  std::vector<double> xs;
  std::vector<double> intensity;
  std::string scenario;
  std::string model;
};

}  // namespace abwave
