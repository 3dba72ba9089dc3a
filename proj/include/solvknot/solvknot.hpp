#pragma once

// Everything: exact linear algebra, G6 and its automorphisms, Nil and the
// groups Gamma(e, eta), knot-group invariants, expressions and reports.

#include "solvknot/rational.hpp"
#include "solvknot/matrix.hpp"
#include "solvknot/lattice.hpp"
#include "solvknot/poly.hpp"
#include "solvknot/affine.hpp"
#include "solvknot/finite_group.hpp"
#include "solvknot/abelian.hpp"
#include "solvknot/subgroup.hpp"
#include "solvknot/g6.hpp"
#include "solvknot/g6_aut.hpp"
#include "solvknot/nil.hpp"
#include "solvknot/gamma_aut.hpp"
#include "solvknot/knot.hpp"
#include "solvknot/expr.hpp"
#include "solvknot/report.hpp"
#include "solvknot/query.hpp"
