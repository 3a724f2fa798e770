#pragma once

#include "obk/braid.hpp"
#include "obk/cobordism.hpp"
#include "obk/embedded.hpp"
#include "obk/error.hpp"
#include "obk/integer_matrix.hpp"
#include "obk/mapclass.hpp"
#include "obk/openbook.hpp"
#include "obk/patching.hpp"
#include "obk/plumbgraph.hpp"
#include "obk/polynomial.hpp"
#include "obk/suites.hpp"
#include "obk/surface.hpp"
#include "obk/text_format.hpp"
