#pragma once

// Umbrella header.

#include "fvset/constructions.hpp"
#include "fvset/core.hpp"
#include "fvset/exact.hpp"
#include "fvset/gtheorem.hpp"
#include "fvset/sets.hpp"
#include "fvset/striplab.hpp"
#include "fvset/version.hpp"
