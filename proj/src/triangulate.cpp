#include "exo/arith.hpp"
