#pragma once

#include "branchlab/branching.hpp"
#include "branchlab/chevalley.hpp"
#include "branchlab/errors.hpp"
#include "branchlab/generator.hpp"
#include "branchlab/hwmodule.hpp"
#include "branchlab/ideal.hpp"
#include "branchlab/io.hpp"
#include "branchlab/linalg.hpp"
#include "branchlab/mstruct.hpp"
#include "branchlab/psembed.hpp"
#include "branchlab/realform.hpp"
#include "branchlab/rootsys.hpp"
#include "branchlab/scalar.hpp"
