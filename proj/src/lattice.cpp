#include "daha/lattice.hpp"

namespace daha {

std::string IVec::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + "]";
}

}  // namespace daha
