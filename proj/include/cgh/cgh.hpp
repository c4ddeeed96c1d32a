#pragma once

#include "cgh/bounds.hpp"
#include "cgh/constructions.hpp"
#include "cgh/core.hpp"
#include "cgh/io.hpp"
#include "cgh/patterns.hpp"
#include "cgh/random.hpp"
#include "cgh/rational.hpp"
#include "cgh/search.hpp"
#include "cgh/verify.hpp"
#include "cgh/version.hpp"
