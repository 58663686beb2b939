#pragma once

#include "tempowalk/bench.hpp"
#include "tempowalk/core.hpp"
#include "tempowalk/criteria.hpp"
#include "tempowalk/engine.hpp"
#include "tempowalk/io.hpp"
#include "tempowalk/oracle.hpp"
#include "tempowalk/transform.hpp"
