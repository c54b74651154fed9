#pragma once

#include "conclusion.hpp"
#include "cov_inference.hpp"
#include "dag.hpp"
#include "error.hpp"
#include "events.hpp"
#include "expansion.hpp"
#include "model.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "scm.hpp"
#include "signs.hpp"
#include "sufficient_cause.hpp"
