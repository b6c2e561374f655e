#pragma once

#include "chipfire/engine.hpp"
#include "chipfire/error.hpp"
#include "chipfire/graph.hpp"
#include "chipfire/integer.hpp"
#include "chipfire/invariants.hpp"
#include "chipfire/lattice.hpp"
#include "chipfire/linalg.hpp"
#include "chipfire/sandpile.hpp"
