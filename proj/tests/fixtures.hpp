#pragma once

#include <string>
#include <vector>

#include "kmt/gcm.hpp"

namespace fixtures {

inline kmt::Gcm make(std::vector<std::vector<int>> rows) { return kmt::Gcm::validate(rows); }

inline kmt::Gcm a1() { return make({{2}}); }
inline kmt::Gcm a2() { return make({{2, -1}, {-1, 2}}); }
/// Short simple root first: vertex 1 short, vertex 2 long.
inline kmt::Gcm b2() { return make({{2, -2}, {-1, 2}}); }
inline kmt::Gcm g2() { return make({{2, -3}, {-1, 2}}); }
inline kmt::Gcm a1xa1() { return make({{2, 0}, {0, 2}}); }
inline kmt::Gcm a3() { return make({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}); }
inline kmt::Gcm d4_star() {
  return make({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
}
inline kmt::Gcm affine_a1() { return make({{2, -2}, {-2, 2}}); }
inline kmt::Gcm affine_a2() { return make({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}}); }
inline kmt::Gcm indefinite3() { return make({{2, -1, -1}, {-1, 2, -2}, {-1, -1, 2}}); }
inline kmt::Gcm not_two_spherical() { return make({{2, -2}, {-3, 2}}); }

struct Named {
  std::string name;
  kmt::Gcm gcm;
};

/// Systems on which Sigma must be built and fully certified.
inline std::vector<Named> sigma_catalogue() {
  return {{"A2", a2()},         {"B2", b2()},
          {"G2", g2()},         {"A3", a3()},
          {"D4", d4_star()},    {"affine A2", affine_a2()},
          {"indefinite", indefinite3()}};
}

}  // namespace fixtures
