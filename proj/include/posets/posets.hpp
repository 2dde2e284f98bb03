#pragma once

// Umbrella header for the core library. File formats and Hasse export live
// in posets/io.hpp, which additionally needs nlohmann/json.

#include "posets/arrangement.hpp"
#include "posets/errors.hpp"
#include "posets/homology.hpp"
#include "posets/linalg.hpp"
#include "posets/monomial.hpp"
#include "posets/order.hpp"
#include "posets/poset.hpp"
