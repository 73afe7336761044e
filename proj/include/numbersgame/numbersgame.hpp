// Umbrella header.
#pragma once

#include "numbersgame/catalog.hpp"
#include "numbersgame/classify.hpp"
#include "numbersgame/coxeter.hpp"
#include "numbersgame/engine.hpp"
#include "numbersgame/errors.hpp"
#include "numbersgame/graph.hpp"
#include "numbersgame/json_io.hpp"
#include "numbersgame/poset.hpp"
#include "numbersgame/scalar.hpp"
#include "numbersgame/spectral.hpp"
