#pragma once

#include "wlpkit/error.hpp"
#include "wlpkit/field.hpp"
#include "wlpkit/linalg.hpp"
#include "wlpkit/polyring.hpp"
#include "wlpkit/poly_gcd.hpp"
#include "wlpkit/macaulay.hpp"
#include "wlpkit/quotient.hpp"
#include "wlpkit/lefschetz.hpp"
#include "wlpkit/inverse_system.hpp"
#include "wlpkit/parse.hpp"
#include "wlpkit/corpus.hpp"
