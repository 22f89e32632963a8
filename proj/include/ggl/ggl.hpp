#pragma once

#include "ggl/arith.hpp"
#include "ggl/bounds.hpp"
#include "ggl/constants.hpp"
#include "ggl/expsum.hpp"
#include "ggl/goldbach.hpp"
#include "ggl/parity.hpp"
#include "ggl/prime_cache.hpp"
#include "ggl/prng.hpp"
#include "ggl/spectrum.hpp"
