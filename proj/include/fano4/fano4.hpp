#pragma once

#include "fano4/catalog.hpp"
#include "fano4/classify.hpp"
#include "fano4/cones.hpp"
#include "fano4/errors.hpp"
#include "fano4/export.hpp"
#include "fano4/golden.hpp"
#include "fano4/hodge.hpp"
#include "fano4/intersect.hpp"
#include "fano4/linalg.hpp"
#include "fano4/rational.hpp"
#include "fano4/record.hpp"
#include "fano4/verify.hpp"

namespace fano4 {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace fano4
