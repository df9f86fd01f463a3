#include "core/units.hpp"

#include "core/types.hpp"

namespace eulerspin {

UnitSystem UnitSystem::parse(const std::string& name) {
  if (name == "natural") return natural();
  if (name == "mev-fm" || name == "mev_fm") return mev_fm();
  if (name == "cgs") return cgs();
  throw InvalidArgument("unknown unit mode '" + name +
                        "' (expected natural, mev-fm, or cgs)");
}

}  // namespace eulerspin
