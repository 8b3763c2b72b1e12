#pragma once

#include "eqav/relation.hpp"
#include "eqav/avoidance.hpp"
#include "eqav/digraph.hpp"
#include "eqav/factor_graph.hpp"
#include "eqav/colored.hpp"
#include "eqav/oracle.hpp"
#include "eqav/decide.hpp"
