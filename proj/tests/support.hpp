#pragma once

#include <memory>
#include <string>
#include <vector>

#include "daha/daha.hpp"
#include "daha/root_data.hpp"
#include "daha/weyl.hpp"

namespace testsupport {

inline daha::RootDatumPtr datum(const std::string& name) { return daha::build_root_datum(daha::preset_cartan(name)); }

inline daha::AffineWeylGroupPtr group(const std::string& name) {
  return std::make_shared<const daha::AffineWeylGroup>(datum(name));
}

inline daha::DahaPtr algebra(const std::string& name) { return std::make_shared<const daha::Daha>(group(name)); }

/// omega_1..omega_n, delta, omega_0 and a few mixed weights.
inline std::vector<daha::AffineWeight> spanning_weights(const daha::RootDatum& rd) {
  std::vector<daha::AffineWeight> out = rd.weight_basis();
  out.push_back(rd.simple_root(0));
  out.push_back(-rd.omega(1) + rd.omega0());
  return out;
}

}  // namespace testsupport
