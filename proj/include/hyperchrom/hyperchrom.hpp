#ifndef HYPERCHROM_HYPERCHROM_HPP
#define HYPERCHROM_HYPERCHROM_HPP

#include "hyperchrom/canonical.hpp"
#include "hyperchrom/characterize.hpp"
#include "hyperchrom/core.hpp"
#include "hyperchrom/extremal.hpp"
#include "hyperchrom/generators.hpp"
#include "hyperchrom/hypergraph.hpp"
#include "hyperchrom/io.hpp"
#include "hyperchrom/matching.hpp"
#include "hyperchrom/oracle.hpp"
#include "hyperchrom/ordering.hpp"
#include "hyperchrom/pipeline.hpp"
#include "hyperchrom/rational.hpp"
#include "hyperchrom/verify.hpp"

#endif  // HYPERCHROM_HYPERCHROM_HPP
