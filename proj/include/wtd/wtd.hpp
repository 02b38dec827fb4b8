#pragma once

#include "wtd/algebra_type.hpp"
#include "wtd/complex.hpp"
#include "wtd/construct.hpp"
#include "wtd/domination.hpp"
#include "wtd/error.hpp"
#include "wtd/graph.hpp"
#include "wtd/ideal.hpp"
#include "wtd/prng.hpp"
#include "wtd/report.hpp"
#include "wtd/tree_enum.hpp"
#include "wtd/unmixed.hpp"
#include "wtd/vertex_set.hpp"
