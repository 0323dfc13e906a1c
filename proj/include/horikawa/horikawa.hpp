#pragma once

#include "horikawa/blowdown.hpp"
#include "horikawa/checked.hpp"
#include "horikawa/cover.hpp"
#include "horikawa/errors.hpp"
#include "horikawa/hj.hpp"
#include "horikawa/lattice.hpp"
#include "horikawa/pipeline.hpp"
