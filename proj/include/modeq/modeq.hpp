#pragma once

#include "modeq/arith.hpp"
#include "modeq/bpoly.hpp"
#include "modeq/cache.hpp"
#include "modeq/equation.hpp"
#include "modeq/exact.hpp"
#include "modeq/io.hpp"
#include "modeq/lambda_ode.hpp"
#include "modeq/partitions.hpp"
#include "modeq/qseries.hpp"
#include "modeq/report.hpp"
