#pragma once

#include "kcube/error.hpp"
#include "kcube/cube.hpp"
#include "kcube/text.hpp"
#include "kcube/bijection.hpp"
#include "kcube/bitset.hpp"
#include "kcube/families.hpp"
#include "kcube/verify.hpp"
#include "kcube/report.hpp"
