#pragma once

// Umbrella header for the riskchain library.

#include "riskchain/allocation.hpp"
#include "riskchain/chart.hpp"
#include "riskchain/diagnostics.hpp"
#include "riskchain/errors.hpp"
#include "riskchain/io.hpp"
#include "riskchain/lexer.hpp"
#include "riskchain/metrics.hpp"
#include "riskchain/report_builders.hpp"
#include "riskchain/riskmodel.hpp"
#include "riskchain/skillsets.hpp"
#include "riskchain/text.hpp"
#include "riskchain/token_profile.hpp"
