#pragma once

#include "heron/errors.hpp"
#include "heron/exact.hpp"
#include "heron/gaussian.hpp"
#include "heron/quaternion.hpp"
#include "heron/simplex.hpp"
#include "heron/pose.hpp"
#include "heron/canonical.hpp"
#include "heron/embedding.hpp"
#include "heron/exhaustive.hpp"
#include "heron/io.hpp"
