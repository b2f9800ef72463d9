#pragma once

#include "cyclat/cycle_structure.hpp"
#include "cyclat/edge_vector.hpp"
#include "cyclat/generator.hpp"
#include "cyclat/lattice_basis.hpp"
#include "cyclat/linear_hull.hpp"
#include "cyclat/multigraph.hpp"
#include "cyclat/oracle.hpp"
#include "cyclat/serialization.hpp"
#include "cyclat/topo_extension.hpp"
#include "cyclat/types.hpp"
