#pragma once

// Umbrella header for the library. The command-line layer lives in
// qsl/cli.hpp and is not pulled in here, since it drags in the option
// parser.

#include "qsl/board.hpp"
#include "qsl/errors.hpp"
#include "qsl/report.hpp"
#include "qsl/solver.hpp"
#include "qsl/symmetry.hpp"
#include "qsl/theorem.hpp"
