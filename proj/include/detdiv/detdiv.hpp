#pragma once

#include "detdiv/error.hpp"
#include "detdiv/ideal.hpp"
#include "detdiv/invariants.hpp"
#include "detdiv/matrix.hpp"
#include "detdiv/oracle.hpp"
#include "detdiv/realizability.hpp"
#include "detdiv/ring.hpp"
#include "detdiv/smith.hpp"
