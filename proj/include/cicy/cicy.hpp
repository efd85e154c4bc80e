#pragma once

#include "cicy/classify.hpp"
#include "cicy/cohomology.hpp"
#include "cicy/core_model.hpp"
#include "cicy/errors.hpp"
#include "cicy/fixtures.hpp"
#include "cicy/grr.hpp"
#include "cicy/hilbert.hpp"
#include "cicy/interchange.hpp"
#include "cicy/number.hpp"
#include "cicy/resolutions.hpp"
