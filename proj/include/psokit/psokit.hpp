#pragma once

// Umbrella header: the whole library.

#include "psokit/bounds.hpp"
#include "psokit/config.hpp"
#include "psokit/counter.hpp"
#include "psokit/engine.hpp"
#include "psokit/errors.hpp"
#include "psokit/grid.hpp"
#include "psokit/hosts.hpp"
#include "psokit/metrics.hpp"
#include "psokit/objective.hpp"
#include "psokit/oracle.hpp"
#include "psokit/report.hpp"
#include "psokit/rng.hpp"
#include "psokit/swarm.hpp"
#include "psokit/trigger.hpp"
#include "psokit/update.hpp"
#include "psokit/variant.hpp"
