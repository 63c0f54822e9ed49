#pragma once

// Umbrella header: exact constructions, generation certificates and
// completion search for the symplectic Lie algebra sp_2n.

#include "spgen/bracket_word.hpp"
#include "spgen/closure.hpp"
#include "spgen/completion.hpp"
#include "spgen/constructions.hpp"
#include "spgen/cyclo.hpp"
#include "spgen/matrix.hpp"
#include "spgen/poly.hpp"
#include "spgen/rational.hpp"
#include "spgen/rng.hpp"
#include "spgen/span.hpp"
#include "spgen/sp_context.hpp"
