#pragma once

// Umbrella header for the whole library.

#include "loplab/bignat.hpp"
#include "loplab/bits.hpp"
#include "loplab/circuit.hpp"
#include "loplab/counting.hpp"
#include "loplab/errors.hpp"
#include "loplab/generators.hpp"
#include "loplab/lop.hpp"
#include "loplab/oracle.hpp"
#include "loplab/rank.hpp"
#include "loplab/rational.hpp"
#include "loplab/symalt.hpp"
