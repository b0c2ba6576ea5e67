#pragma once

// Convenience umbrella: pulls in the whole workbench.

#include "qfw/capitulation.hpp"
#include "qfw/claims.hpp"
#include "qfw/classgroup.hpp"
#include "qfw/cyclotomic.hpp"
#include "qfw/element.hpp"
#include "qfw/errors.hpp"
#include "qfw/field.hpp"
#include "qfw/ideal.hpp"
#include "qfw/matrix.hpp"
#include "qfw/numeric.hpp"
#include "qfw/principal.hpp"
#include "qfw/splitting.hpp"
#include "qfw/witness.hpp"
