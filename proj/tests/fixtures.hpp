#pragma once

#include <string>

#include "ncpq/quiver.hpp"

namespace fx {

inline ncpq::Quiver a2() { return ncpq::parse_quiver("vertices 2\narrow 1 2\n"); }
inline ncpq::Quiver a3() { return ncpq::parse_quiver("vertices 3\narrow 1 2\narrow 2 3\n"); }
inline ncpq::Quiver a4() { return ncpq::parse_quiver("vertices 4\narrow 1 2\narrow 2 3\narrow 3 4\n"); }
inline ncpq::Quiver d4() { return ncpq::parse_quiver("vertices 4\narrow 1 2\narrow 1 3\narrow 1 4\n"); }
inline ncpq::Quiver kronecker() { return ncpq::parse_quiver("vertices 2\narrow 1 2\narrow 1 2\n"); }
inline ncpq::Quiver triangle2() {
  return ncpq::parse_quiver("vertices 3\narrow 1 2\narrow 1 2\narrow 2 3\narrow 2 3\narrow 1 3\narrow 1 3\n");
}

inline ncpq::DimVector v(std::initializer_list<std::int64_t> xs) { return ncpq::DimVector(std::vector<std::int64_t>(xs)); }

inline std::string data_dir() { return NCPQ_DATA_DIR; }

}  // namespace fx
