#ifndef FIBFQ_FIBFQ_HPP
#define FIBFQ_FIBFQ_HPP

#include "fibfq/error.hpp"
#include "fibfq/factorize.hpp"
#include "fibfq/fibcore.hpp"
#include "fibfq/field.hpp"
#include "fibfq/integer.hpp"
#include "fibfq/parse.hpp"
#include "fibfq/poly.hpp"
#include "fibfq/quotient.hpp"
#include "fibfq/rankperiod.hpp"

#endif  // FIBFQ_FIBFQ_HPP
