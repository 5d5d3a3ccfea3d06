#pragma once

#include "sirev/cascade.hpp"
#include "sirev/catalog.hpp"
#include "sirev/config.hpp"
#include "sirev/report.hpp"

namespace sirev {

// Exact identity suite over random rational root sets, one check per n.
Report run_identities(int n_max, int sets, std::uint64_t seed);

// ODE scan, defining systems, bracket conservation, algebraic relation,
// functional independence and a short drift integration, honoring the
// config's suite selection.  Non-simple F skips the integral checks with a
// reason.
Report run_model_suite(const RunConfig& rc);

// Exact and numeric degree-reduction checks on the standard degree-(n-1)
// lower system.
Report run_cascade_suite(int upper_n, std::uint64_t seed, CascadeReport* table = nullptr);

// Validity report of one catalog example as a Report.
Report run_catalog_suite(CatalogId id, const CatalogParams& params = {}, int grid_n = 10001,
                         CatalogBuild* out_build = nullptr);

}  // namespace sirev
