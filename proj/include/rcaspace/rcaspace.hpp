#ifndef RCASPACE_RCASPACE_HPP
#define RCASPACE_RCASPACE_HPP

#include "rcaspace/error.hpp"
#include "rcaspace/index_kind.hpp"
#include "rcaspace/ingest.hpp"
#include "rcaspace/labels.hpp"
#include "rcaspace/matrix.hpp"
#include "rcaspace/netexport.hpp"
#include "rcaspace/pipeline.hpp"
#include "rcaspace/production_table.hpp"
#include "rcaspace/proximity.hpp"
#include "rcaspace/rca.hpp"
#include "rcaspace/stats.hpp"

#endif
