#pragma once

#include <string>
#include <vector>

#include "hsp/homspace.hpp"

namespace hsp {

std::vector<std::string> catalog_names();
// Accepts the aliases "wang_ziller" and "su3".  Throws std::out_of_range
// for an unknown name.
HomSpaceData catalog_entry(const std::string& name);

}  // namespace hsp
