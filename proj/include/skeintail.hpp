#pragma once

#include "skeintail/acceptance.hpp"
#include "skeintail/cable.hpp"
#include "skeintail/colored_jones.hpp"
#include "skeintail/corpus.hpp"
#include "skeintail/diagram.hpp"
#include "skeintail/jones_wenzl.hpp"
#include "skeintail/morse.hpp"
#include "skeintail/oracle.hpp"
#include "skeintail/report.hpp"
#include "skeintail/states.hpp"
#include "skeintail/tail.hpp"
#include "skeintail/temperley_lieb.hpp"
#include "skeintail/transfer.hpp"
