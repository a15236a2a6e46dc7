#pragma once

#include "fermidec/adc.hpp"
#include "fermidec/dephasing.hpp"
#include "fermidec/io.hpp"
#include "fermidec/measures.hpp"
#include "fermidec/quadrature.hpp"
#include "fermidec/sampling.hpp"
#include "fermidec/series.hpp"
#include "fermidec/states.hpp"
#include "fermidec/version.hpp"
