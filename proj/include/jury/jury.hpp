#pragma once

#include "jury/bisection.hpp"
#include "jury/correlation.hpp"
#include "jury/csv.hpp"
#include "jury/dynamics.hpp"
#include "jury/errors.hpp"
#include "jury/learning_profiles.hpp"
#include "jury/rational.hpp"
#include "jury/scenarios.hpp"
#include "jury/tables.hpp"
#include "jury/tradeoff.hpp"
#include "jury/vote_math.hpp"
