#pragma once

#include "simpdisc/error.hpp"
#include "simpdisc/delta.hpp"
#include "simpdisc/sset.hpp"
#include "simpdisc/maps.hpp"
#include "simpdisc/fincat.hpp"
#include "simpdisc/lifting.hpp"
#include "simpdisc/linalg.hpp"
#include "simpdisc/causal.hpp"
#include "simpdisc/psr.hpp"
#include "simpdisc/homology.hpp"
#include "simpdisc/io.hpp"
