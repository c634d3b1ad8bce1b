#include "scrollreg/monomial.hpp"

// Monomial is header-only; this translation unit anchors the target.
namespace scrollreg {}
