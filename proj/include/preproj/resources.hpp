#pragma once

#include <map>
#include <string>

namespace preproj {

/// Map files compiled into the library, keyed by file name.
const std::map<std::string, std::string>& embedded_maps();

}  // namespace preproj
