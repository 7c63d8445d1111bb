#pragma once

#include "gdkit/blocks.hpp"
#include "gdkit/cache_file.hpp"
#include "gdkit/core_arith.hpp"
#include "gdkit/count.hpp"
#include "gdkit/counting.hpp"
#include "gdkit/error.hpp"
#include "gdkit/memo.hpp"
#include "gdkit/modular.hpp"
#include "gdkit/oracle.hpp"
#include "gdkit/order.hpp"
#include "gdkit/reduction.hpp"
#include "gdkit/report.hpp"
#include "gdkit/sampler.hpp"
#include "gdkit/verify.hpp"
