#pragma once

#include "starcore/error.hpp"
#include "starcore/rational.hpp"
#include "starcore/gaussian_rational.hpp"
#include "starcore/matrix.hpp"
#include "starcore/matrix_json.hpp"
#include "starcore/geninv.hpp"
#include "starcore/theorem_lab.hpp"
#include "starcore/generators.hpp"
#include "starcore/report_json.hpp"
#include "starcore/suite.hpp"
