#pragma once

#include "nsg/arith.hpp"
#include "nsg/delta.hpp"
#include "nsg/elasticity.hpp"
#include "nsg/error.hpp"
#include "nsg/factorizations.hpp"
#include "nsg/integer.hpp"
#include "nsg/lengths.hpp"
#include "nsg/norms.hpp"
#include "nsg/quasi.hpp"
#include "nsg/random.hpp"
#include "nsg/rational.hpp"
#include "nsg/semigroup.hpp"
#include "nsg/statistics.hpp"
