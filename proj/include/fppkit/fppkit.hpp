#pragma once

// Umbrella header.

#include "fppkit/classes.hpp"
#include "fppkit/exclusions.hpp"
#include "fppkit/fiber.hpp"
#include "fppkit/hj.hpp"
#include "fppkit/independence.hpp"
#include "fppkit/intersection.hpp"
#include "fppkit/model_io.hpp"
#include "fppkit/numeric.hpp"
#include "fppkit/proof.hpp"
#include "fppkit/report.hpp"
#include "fppkit/singularity.hpp"
#include "fppkit/surface.hpp"
#include "fppkit/torsion.hpp"
