#pragma once

#include "semt/bounds.hpp"
#include "semt/constructions.hpp"
#include "semt/error.hpp"
#include "semt/graph.hpp"
#include "semt/io.hpp"
#include "semt/labeling.hpp"
#include "semt/rational.hpp"
#include "semt/search.hpp"
#include "semt/sweep.hpp"
