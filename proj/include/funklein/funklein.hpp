#pragma once

#include "funklein/curvature.hpp"
#include "funklein/disc.hpp"
#include "funklein/finsler.hpp"
#include "funklein/geodesics.hpp"
#include "funklein/geometry.hpp"
#include "funklein/klein.hpp"
#include "funklein/models.hpp"
#include "funklein/sampling.hpp"
#include "funklein/zermelo.hpp"
