#ifndef JSOB_JSOB_HPP
#define JSOB_JSOB_HPP

#include "jsob/errors.hpp"
#include "jsob/rational.hpp"
#include "jsob/poly.hpp"
#include "jsob/ratfunc.hpp"
#include "jsob/transforms.hpp"
#include "jsob/matrix.hpp"
#include "jsob/operator.hpp"
#include "jsob/jacobi.hpp"
#include "jsob/sobolev.hpp"
#include "jsob/construct.hpp"
#include "jsob/rank.hpp"
#include "jsob/diffop.hpp"
#include "jsob/io.hpp"

#endif  // JSOB_JSOB_HPP
