#pragma once

#include "sympbf/analysis.hpp"
#include "sympbf/coefficients.hpp"
#include "sympbf/errors.hpp"
#include "sympbf/factor.hpp"
#include "sympbf/io.hpp"
#include "sympbf/models.hpp"
#include "sympbf/multilinear.hpp"
#include "sympbf/oracle.hpp"
#include "sympbf/rational.hpp"
#include "sympbf/stirling.hpp"
#include "sympbf/transform.hpp"
