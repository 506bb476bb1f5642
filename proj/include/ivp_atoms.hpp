#pragma once

#include "ivp_atoms/integer.hpp"
#include "ivp_atoms/poly.hpp"
#include "ivp_atoms/irreducibility.hpp"
#include "ivp_atoms/standard_form.hpp"
#include "ivp_atoms/essential.hpp"
#include "ivp_atoms/criteria.hpp"
#include "ivp_atoms/oracle.hpp"
#include "ivp_atoms/parser.hpp"
#include "ivp_atoms/report.hpp"
