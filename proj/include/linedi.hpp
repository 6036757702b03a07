#pragma once

#include "linedi/bigint.hpp"
#include "linedi/digraph.hpp"
#include "linedi/digraph_io.hpp"
#include "linedi/error.hpp"
#include "linedi/exactla.hpp"
#include "linedi/families.hpp"
#include "linedi/isomorphism.hpp"
#include "linedi/metrics.hpp"
#include "linedi/oeis.hpp"
#include "linedi/report_io.hpp"
#include "linedi/sequences.hpp"
