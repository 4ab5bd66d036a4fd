#pragma once

#include "qpbw/catalog.hpp"
#include "qpbw/element.hpp"
#include "qpbw/error.hpp"
#include "qpbw/io.hpp"
#include "qpbw/lattice.hpp"
#include "qpbw/laurent.hpp"
#include "qpbw/parse.hpp"
#include "qpbw/presentation.hpp"
#include "qpbw/ratfunc.hpp"
#include "qpbw/rewrite.hpp"
#include "qpbw/smash.hpp"
#include "qpbw/span.hpp"
#include "qpbw/twist.hpp"
#include "qpbw/verify.hpp"
