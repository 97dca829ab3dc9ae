#pragma once

#include "fuzzy/linalg.hpp"
#include "fuzzy/spin.hpp"
#include "fuzzy/calculus.hpp"
#include "fuzzy/bundles.hpp"
#include "fuzzy/chern.hpp"
#include "fuzzy/sphere_oracle.hpp"
