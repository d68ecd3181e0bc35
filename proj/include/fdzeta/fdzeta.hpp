#pragma once

// Umbrella header: closed-form Fermi-Dirac integrals F_{k/2}(eta) in Riemann
// and Hurwitz zeta functions, the auxiliary exponential model behind them,
// and the independent quadrature/series references used to validate them.

#include "fdzeta/errors.hpp"
#include "fdzeta/fd_core.hpp"
#include "fdzeta/model.hpp"
#include "fdzeta/oracle.hpp"
#include "fdzeta/report.hpp"
#include "fdzeta/special_functions.hpp"
