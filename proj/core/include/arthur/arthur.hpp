#pragma once

#include "arthur/archimedean.hpp"
#include "arthur/eisenstein.hpp"
#include "arthur/error.hpp"
#include "arthur/half_int.hpp"
#include "arthur/jacquet.hpp"
#include "arthur/jordan.hpp"
#include "arthur/labels.hpp"
#include "arthur/lcontext.hpp"
#include "arthur/lfactors.hpp"
#include "arthur/packets.hpp"
#include "arthur/rational.hpp"
#include "arthur/sign.hpp"
#include "arthur/target.hpp"
#include "arthur/transfer.hpp"
