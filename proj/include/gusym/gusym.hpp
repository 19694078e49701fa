#pragma once

#include "gusym/types.hpp"
#include "gusym/linalg.hpp"
#include "gusym/spin.hpp"
#include "gusym/ensemble.hpp"
#include "gusym/discrimination.hpp"
#include "gusym/closed_form.hpp"
#include "gusym/oracle.hpp"
#include "gusym/majorana.hpp"
#include "gusym/symmetric_group.hpp"
#include "gusym/simulate.hpp"
#include "gusym/io.hpp"
