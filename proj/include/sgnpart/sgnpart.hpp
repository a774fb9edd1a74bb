#pragma once

// Umbrella header: signed partitions of {±1,...,±n}, their growth-string
// enumeration, type-A/type-B Stirling numbers of the second kind with the
// falling-factorial identities, and the balls-into-urns bijection.

#include "sgnpart/bigint.hpp"
#include "sgnpart/bijection.hpp"
#include "sgnpart/enumerate.hpp"
#include "sgnpart/error.hpp"
#include "sgnpart/partition.hpp"
#include "sgnpart/polynomial.hpp"
#include "sgnpart/stirling.hpp"
#include "sgnpart/text_io.hpp"
