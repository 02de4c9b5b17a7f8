#pragma once

#include "approxsym/annealing.hpp"
#include "approxsym/centrality.hpp"
#include "approxsym/energy.hpp"
#include "approxsym/errors.hpp"
#include "approxsym/experiment.hpp"
#include "approxsym/generators.hpp"
#include "approxsym/graph.hpp"
#include "approxsym/guidance.hpp"
#include "approxsym/oracle.hpp"
#include "approxsym/permutation.hpp"
#include "approxsym/records.hpp"
#include "approxsym/report.hpp"
#include "approxsym/rng.hpp"
#include "approxsym/stats.hpp"
