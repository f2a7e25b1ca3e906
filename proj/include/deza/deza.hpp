#pragma once

#include "deza/automorphism.hpp"
#include "deza/classify.hpp"
#include "deza/connectivity.hpp"
#include "deza/core.hpp"
#include "deza/delta.hpp"
#include "deza/families.hpp"
#include "deza/graph6.hpp"
#include "deza/parallel.hpp"
#include "deza/path_families.hpp"
