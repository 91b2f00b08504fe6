#pragma once

#include "snum/exponent.hpp"
#include "snum/random.hpp"
#include "snum/spaces.hpp"
#include "snum/ascent.hpp"
#include "snum/operators.hpp"
#include "snum/matrix_io.hpp"
#include "snum/entropy.hpp"
#include "snum/widths.hpp"
#include "snum/spectral.hpp"
