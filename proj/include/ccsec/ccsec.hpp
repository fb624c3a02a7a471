#pragma once

#include "ccsec/binomial.hpp"
#include "ccsec/charclass.hpp"
#include "ccsec/chow.hpp"
#include "ccsec/conjecture.hpp"
#include "ccsec/conjecture_forms.hpp"
#include "ccsec/hilbert.hpp"
#include "ccsec/poly.hpp"
#include "ccsec/rational.hpp"
#include "ccsec/secant.hpp"
#include "ccsec/series.hpp"
#include "ccsec/verify.hpp"
