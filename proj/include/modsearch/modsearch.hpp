#pragma once

#include "bench.hpp"
#include "csv.hpp"
#include "dataset.hpp"
#include "errors.hpp"
#include "rng.hpp"
#include "search.hpp"
#include "stats.hpp"
#include "svg.hpp"
#include "verify.hpp"
