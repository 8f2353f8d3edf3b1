#pragma once

#include "qmaya/chain.hpp"
#include "qmaya/coset.hpp"
#include "qmaya/degree.hpp"
#include "qmaya/errors.hpp"
#include "qmaya/flag_shape.hpp"
#include "qmaya/maya.hpp"
#include "qmaya/oracle.hpp"
#include "qmaya/permutation.hpp"
#include "qmaya/record.hpp"
