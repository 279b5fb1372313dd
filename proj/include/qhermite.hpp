#pragma once

// Umbrella header: the whole toolkit.

#include "qhermite/errors.hpp"
#include "qhermite/families.hpp"
#include "qhermite/identities.hpp"
#include "qhermite/matchoracle.hpp"
#include "qhermite/momentengine.hpp"
#include "qhermite/mpoly.hpp"
#include "qhermite/qfield.hpp"
#include "qhermite/serialize.hpp"
#include "qhermite/xsfrac.hpp"
