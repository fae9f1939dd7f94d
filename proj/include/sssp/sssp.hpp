#pragma once

#include "sssp/bench.hpp"
#include "sssp/dataparallel.hpp"
#include "sssp/generate.hpp"
#include "sssp/graph.hpp"
#include "sssp/oracle.hpp"
#include "sssp/partition.hpp"
#include "sssp/partitioned.hpp"
#include "sssp/result.hpp"
#include "sssp/serial.hpp"
#include "sssp/weight.hpp"
