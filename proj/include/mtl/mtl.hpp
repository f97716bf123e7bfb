#pragma once

#include "mtl/bigint.hpp"
#include "mtl/distribution_csv.hpp"
#include "mtl/moments.hpp"
#include "mtl/skewdet.hpp"
#include "mtl/symchar.hpp"
#include "mtl/zeta.hpp"
#include "mtl/zeta_moments.hpp"
