#include "scrollreg/ring.hpp"

namespace scrollreg {}
