#pragma once

#include "swarmcomm/grid.hpp"
#include "swarmcomm/configuration.hpp"
#include "swarmcomm/engine.hpp"
#include "swarmcomm/alg_shift1x.hpp"
#include "swarmcomm/alg_shift2x.hpp"
#include "swarmcomm/loco.hpp"
#include "swarmcomm/codec.hpp"
#include "swarmcomm/analysis.hpp"
#include "swarmcomm/io.hpp"
