#pragma once

#include "dikin/barrier.hpp"
#include "dikin/config.hpp"
#include "dikin/domain.hpp"
#include "dikin/errors.hpp"
#include "dikin/geometry.hpp"
#include "dikin/harness.hpp"
#include "dikin/learners.hpp"
#include "dikin/losses.hpp"
#include "dikin/rng.hpp"
#include "dikin/verify.hpp"
