#pragma once

#include "checked.hpp"
#include "constructors.hpp"
#include "contfrac.hpp"
#include "counting.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "graph_io.hpp"
#include "omega.hpp"
#include "sieve.hpp"
#include "tree_calculus.hpp"
#include "tree_enum.hpp"
