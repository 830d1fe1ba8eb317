#pragma once

#include "feynman/counting.hpp"
#include "feynman/cycle_oracle.hpp"
#include "feynman/error.hpp"
#include "feynman/euler.hpp"
#include "feynman/generate.hpp"
#include "feynman/geometry.hpp"
#include "feynman/graph.hpp"
#include "feynman/graph_json.hpp"
#include "feynman/identities.hpp"
#include "feynman/lie_dims.hpp"
#include "feynman/matrices.hpp"
#include "feynman/numeric.hpp"
#include "feynman/series.hpp"
