#pragma once

// Umbrella header.

#include "conformance.hpp"
#include "cyclotomic.hpp"
#include "expr.hpp"
#include "isoclass.hpp"
#include "lattice.hpp"
#include "matrix.hpp"
#include "pbw.hpp"
#include "relations.hpp"
#include "repmod.hpp"
#include "structure.hpp"
#include "torus.hpp"
#include "word_rewrite.hpp"
