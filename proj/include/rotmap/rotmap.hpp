#pragma once

// Umbrella header: exact construction and verification of the chiral,
// orientable-reflexible and non-orientable-reflexible rotary maps on the
// graphs C_n[mK_1].

#include "rotmap/cdc.hpp"
#include "rotmap/constructions.hpp"
#include "rotmap/errors.hpp"
#include "rotmap/group.hpp"
#include "rotmap/indexing.hpp"
#include "rotmap/lexgraph.hpp"
#include "rotmap/mapcore.hpp"
#include "rotmap/permutation.hpp"
#include "rotmap/report.hpp"
#include "rotmap/verify.hpp"
#include "rotmap/wreath.hpp"
