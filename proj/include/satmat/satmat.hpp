#pragma once

#include "satmat/classification.hpp"
#include "satmat/constructions.hpp"
#include "satmat/containment.hpp"
#include "satmat/exact_search.hpp"
#include "satmat/geometry.hpp"
#include "satmat/io.hpp"
#include "satmat/matrix.hpp"
#include "satmat/saturation.hpp"
#include "satmat/shape.hpp"
#include "satmat/sweep.hpp"
