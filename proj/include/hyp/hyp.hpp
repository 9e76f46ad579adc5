#pragma once

#include "hyp/errors.hpp"
#include "hyp/complex_core.hpp"
#include "hyp/domain.hpp"
#include "hyp/report.hpp"
#include "hyp/sampling.hpp"
#include "hyp/quadrature.hpp"
#include "hyp/metrics.hpp"
#include "hyp/paths.hpp"
#include "hyp/mesh.hpp"
#include "hyp/picard.hpp"
#include "hyp/schlicht.hpp"
#include "hyp/kobayashi.hpp"
#include "hyp/verifiers.hpp"
#include "hyp/figure.hpp"
#include "hyp/config.hpp"
#include "hyp/commands.hpp"
