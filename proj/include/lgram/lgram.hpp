#pragma once

// Umbrella header: the whole library except the CLI driver.

#include "lgram/ca.hpp"
#include "lgram/core.hpp"
#include "lgram/json_io.hpp"
#include "lgram/lsystem.hpp"
#include "lgram/model_check.hpp"
#include "lgram/sac.hpp"
#include "lgram/tree.hpp"
#include "lgram/tree_model.hpp"
