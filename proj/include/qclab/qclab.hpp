#pragma once

// Umbrella header.

#include "qclab/error.hpp"
#include "qclab/word.hpp"
#include "qclab/occurrences.hpp"
#include "qclab/enumerate.hpp"
#include "qclab/families.hpp"
#include "qclab/rational.hpp"
#include "qclab/group_vector.hpp"
#include "qclab/representation.hpp"
#include "qclab/matrix_tools.hpp"
#include "qclab/norming.hpp"
#include "qclab/convexity.hpp"
#include "qclab/parallel.hpp"
#include "qclab/brooks.hpp"
#include "qclab/cocycle.hpp"
#include "qclab/diagonal.hpp"
#include "qclab/coboundary_fit.hpp"
#include "qclab/analysis/growth.hpp"
#include "qclab/analysis/greedy.hpp"
#include "qclab/analysis/vanishing.hpp"
#include "qclab/analysis/independence.hpp"
#include "qclab/analysis/uc_test.hpp"
#include "qclab/io.hpp"
#include "qclab/config.hpp"
#include "qclab/report.hpp"
