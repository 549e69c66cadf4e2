#pragma once

#include "ordsearch/graph.hpp"
#include "ordsearch/ordinal.hpp"
#include "ordsearch/predicates.hpp"
#include "ordsearch/search.hpp"
#include "ordsearch/verdict.hpp"
#include "ordsearch/witness.hpp"
