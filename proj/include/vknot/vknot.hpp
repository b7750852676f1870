#ifndef VKNOT_VKNOT_HPP
#define VKNOT_VKNOT_HPP

#include "vknot/certificate.hpp"
#include "vknot/diagram.hpp"
#include "vknot/families.hpp"
#include "vknot/gauss_code.hpp"
#include "vknot/invariants.hpp"
#include "vknot/moves.hpp"
#include "vknot/poly.hpp"
#include "vknot/search.hpp"

#endif  // VKNOT_VKNOT_HPP
