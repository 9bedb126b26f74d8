#pragma once

#include "mstrep/contract.hpp"
#include "mstrep/generators.hpp"
#include "mstrep/graph.hpp"
#include "mstrep/kruskal.hpp"
#include "mstrep/oracle.hpp"
#include "mstrep/pipeline.hpp"
#include "mstrep/replacement.hpp"
#include "mstrep/static_union.hpp"
#include "mstrep/tree_index.hpp"
