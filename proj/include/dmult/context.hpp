#pragma once

#include <memory>

#include "dmult/geometry_report.hpp"

namespace dmult {

// Everything computed for one root system, owned together so that the
// engines' references stay valid.
struct TypeContext {
  explicit TypeContext(const CartanType& type)
      : roots(RootSystem::build(type)), group(roots), dem(group), mac(group), geo(dem, mac) {}
  TypeContext(const TypeContext&) = delete;
  TypeContext& operator=(const TypeContext&) = delete;

  RootSystem roots;
  AffineWeylGroup group;
  DemazureEngine dem;
  MacdonaldEngine mac;
  GeometryEngine geo;
};

inline std::unique_ptr<TypeContext> make_context(const CartanType& type) {
  return std::make_unique<TypeContext>(type);
}

}  // namespace dmult
