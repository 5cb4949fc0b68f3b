#pragma once

#include "diskmetrics/types.hpp"
#include "diskmetrics/geom_core.hpp"
#include "diskmetrics/hyperbolic.hpp"
#include "diskmetrics/vam.hpp"
#include "diskmetrics/distortion.hpp"
#include "diskmetrics/oracle.hpp"
#include "diskmetrics/parallel.hpp"
