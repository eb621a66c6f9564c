#pragma once

#include "dres/error.hpp"
#include "dres/format.hpp"
#include "dres/galois.hpp"
#include "dres/gcd.hpp"
#include "dres/hermite.hpp"
#include "dres/linalg.hpp"
#include "dres/parser.hpp"
#include "dres/poly.hpp"
#include "dres/ratfun.hpp"
#include "dres/rational.hpp"
#include "dres/reduction.hpp"
#include "dres/residues.hpp"
#include "dres/resultant.hpp"
#include "dres/roots.hpp"
#include "dres/shiftset.hpp"
#include "dres/summability.hpp"
#include "dres/testkit.hpp"
