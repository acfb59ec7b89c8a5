#pragma once

#include "lcskpp/common.hpp"
#include "lcskpp/events.hpp"
#include "lcskpp/harness.hpp"
#include "lcskpp/match_pairs.hpp"
#include "lcskpp/oracle.hpp"
#include "lcskpp/prefix_max.hpp"
#include "lcskpp/simmodel.hpp"
#include "lcskpp/sweep.hpp"
