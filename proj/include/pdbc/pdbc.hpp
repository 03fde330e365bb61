#pragma once

// Umbrella header: 1D bond-based peridynamics with boundary treatments.

#include "pdbc/analysis.hpp"
#include "pdbc/assembly.hpp"
#include "pdbc/banded_system.hpp"
#include "pdbc/errors.hpp"
#include "pdbc/format.hpp"
#include "pdbc/linalg.hpp"
#include "pdbc/method.hpp"
#include "pdbc/problem.hpp"
#include "pdbc/stencils.hpp"
#include "pdbc/studies.hpp"
