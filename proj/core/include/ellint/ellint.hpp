#pragma once

#include "ellint/amplitude_series.hpp"
#include "ellint/auxiliary.hpp"
#include "ellint/carlson_gustafson.hpp"
#include "ellint/enclosure.hpp"
#include "ellint/errors.hpp"
#include "ellint/evaluate.hpp"
#include "ellint/hypergeometric.hpp"
#include "ellint/modulus_series.hpp"
#include "ellint/point.hpp"
#include "ellint/reference.hpp"
