#pragma once
// Umbrella include; each header also stands alone.

#include "rotkit/bounds.hpp"
#include "rotkit/census.hpp"
#include "rotkit/distinguisher.hpp"
#include "rotkit/errors.hpp"
#include "rotkit/format.hpp"
#include "rotkit/oracle.hpp"
#include "rotkit/prng.hpp"
#include "rotkit/quarter_round.hpp"
#include "rotkit/rational.hpp"
#include "rotkit/serialize.hpp"
#include "rotkit/state.hpp"
#include "rotkit/stats.hpp"
#include "rotkit/tables.hpp"
#include "rotkit/words.hpp"
