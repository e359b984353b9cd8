#pragma once

#include "chibound/bounded_coloring.hpp"
#include "chibound/campaign.hpp"
#include "chibound/clique.hpp"
#include "chibound/cograph.hpp"
#include "chibound/coloring.hpp"
#include "chibound/decomposition.hpp"
#include "chibound/formats.hpp"
#include "chibound/generators.hpp"
#include "chibound/graph.hpp"
#include "chibound/matching.hpp"
#include "chibound/patterns.hpp"
#include "chibound/records.hpp"
#include "chibound/vertex_set.hpp"
