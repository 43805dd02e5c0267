#pragma once

#include <string>

#include "agkit/magma.hpp"

namespace agkit::fixtures {

inline std::string path(const std::string& name) {
  return std::string(AGKIT_FIXTURE_DIR) + "/" + name;
}

inline Magma load(const std::string& name) {
  return read_magma_file(path(name));
}

inline Magma lad_example() { return load("lad-example.tbl"); }
inline Magma lad_test_example() { return load("lad-test-example.tbl"); }
inline Magma ld_not_lad() { return load("ld-not-lad.tbl"); }
inline Magma rad_example() { return load("rad-example.tbl"); }
inline Magma rad_test_example() { return load("rad-test-example.tbl"); }
inline Magma rd_not_rad() { return load("rd-not-rad.tbl"); }

}  // namespace agkit::fixtures
