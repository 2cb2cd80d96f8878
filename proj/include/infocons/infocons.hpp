#pragma once

#include "infocons/audit.hpp"
#include "infocons/dynamics.hpp"
#include "infocons/entropy.hpp"
#include "infocons/errors.hpp"
#include "infocons/nelder_mead.hpp"
#include "infocons/numeric.hpp"
#include "infocons/report.hpp"
#include "infocons/scenario_file.hpp"
#include "infocons/scenarios.hpp"
#include "infocons/search.hpp"
#include "infocons/state.hpp"
#include "infocons/sweep.hpp"
