#pragma once

#include "ltdom/constructive.hpp"
#include "ltdom/domination.hpp"
#include "ltdom/enumerate.hpp"
#include "ltdom/errors.hpp"
#include "ltdom/families.hpp"
#include "ltdom/graph.hpp"
#include "ltdom/graph6.hpp"
#include "ltdom/scan.hpp"
#include "ltdom/solvers.hpp"
#include "ltdom/vertex_set.hpp"
