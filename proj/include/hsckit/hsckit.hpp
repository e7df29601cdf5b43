#pragma once

#include "hsckit/error.hpp"
#include "hsckit/rootsys.hpp"
#include "hsckit/cspace.hpp"
#include "hsckit/curvature.hpp"
#include "hsckit/sphere.hpp"
#include "hsckit/extremize.hpp"
#include "hsckit/geography.hpp"
#include "hsckit/io.hpp"

namespace hsckit {

inline constexpr const char* kVersion = "0.1.0";

} // namespace hsckit
