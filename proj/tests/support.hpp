#pragma once

#include "parb/sampling.hpp"

namespace parb::testing {
using namespace parb::sampling;
}  // namespace parb::testing
