// Umbrella header.

#ifndef MDPB_MDPB_HPP
#define MDPB_MDPB_HPP

#include "mdpb/approx.hpp"
#include "mdpb/axioms.hpp"
#include "mdpb/exact.hpp"
#include "mdpb/fixtures.hpp"
#include "mdpb/generator.hpp"
#include "mdpb/io.hpp"
#include "mdpb/model.hpp"
#include "mdpb/reductions.hpp"

#endif  // MDPB_MDPB_HPP
