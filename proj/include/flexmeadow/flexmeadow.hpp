#pragma once

#include "check.hpp"
#include "cli.hpp"
#include "ext_num.hpp"
#include "field_elem.hpp"
#include "law.hpp"
#include "literals.hpp"
#include "models.hpp"
#include "neutrix.hpp"
#include "pseries.hpp"
#include "rational.hpp"
#include "term.hpp"
