#pragma once

// Umbrella header.

#include "heunc/connection.hpp"
#include "heunc/continuation.hpp"
#include "heunc/errors.hpp"
#include "heunc/extrapolate.hpp"
#include "heunc/local.hpp"
#include "heunc/ode.hpp"
#include "heunc/oracle.hpp"
#include "heunc/parallel.hpp"
#include "heunc/params.hpp"
#include "heunc/quadrature.hpp"
#include "heunc/scalar.hpp"
#include "heunc/series.hpp"
#include "heunc/specfun.hpp"
