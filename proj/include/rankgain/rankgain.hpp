// Licensed under the Apache License, Version 2.0, see LICENSE for details.
// SPDX-License-Identifier: Apache-2.0

#ifndef RANKGAIN_RANKGAIN_HPP
#define RANKGAIN_RANKGAIN_HPP

#include "rankgain/coverings.hpp"
#include "rankgain/cubic_galois.hpp"
#include "rankgain/elliptic/family.hpp"
#include "rankgain/elliptic/weierstrass.hpp"
#include "rankgain/newton_planner.hpp"
#include "rankgain/qseries.hpp"
#include "rankgain/scan.hpp"

#endif  // RANKGAIN_RANKGAIN_HPP
