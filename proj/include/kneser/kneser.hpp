#pragma once

// Umbrella header.

#include "kneser/admissible.hpp"
#include "kneser/canonical.hpp"
#include "kneser/catalog.hpp"
#include "kneser/enumerate.hpp"
#include "kneser/error.hpp"
#include "kneser/evaluation.hpp"
#include "kneser/graph.hpp"
#include "kneser/graph6.hpp"
#include "kneser/json_io.hpp"
#include "kneser/modular.hpp"
#include "kneser/pclass.hpp"
#include "kneser/psum.hpp"
#include "kneser/reconstruction.hpp"
#include "kneser/tree_invariants.hpp"
#include "kneser/tree_lambda.hpp"
