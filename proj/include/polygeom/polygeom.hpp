#pragma once

#include "polygeom/apolarity.hpp"
#include "polygeom/coincidence.hpp"
#include "polygeom/derivative_bound.hpp"
#include "polygeom/error.hpp"
#include "polygeom/matching.hpp"
#include "polygeom/poly.hpp"
#include "polygeom/random.hpp"
#include "polygeom/regions.hpp"
#include "polygeom/rootfind.hpp"
