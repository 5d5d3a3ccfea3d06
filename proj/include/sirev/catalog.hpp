#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sirev/geometry.hpp"
#include "sirev/integrals.hpp"
#include "sirev/model.hpp"

namespace sirev {

// The globally defined examples, plus the no-go family.  The H2 cubic cases
// (single root, degree-3 integrals) and their higher-degree extensions are
// separate entries because their parameter constraints differ.
enum class CatalogId {
    KOENIGS3,    // n=1 even, the quadratic-integral metric on H^2
    H2_EVEN,     // even 2n, F = (a-1) * simple, on H^2
    R2_EVEN,     // even 2n, two bracketing roots, on R^2
    CUBIC_PP,    // odd n=1 families on H^2, eps/sign cases
    CUBIC_PM,
    CUBIC_MP,
    CUBIC_MM,
    ODD_H2_PP,   // odd 2n+1 extensions of the cubic cases
    ODD_H2_PM,
    ODD_H2_MP,
    ODD_H2_MM,
    R2_ODD,      // odd 2n+1, two bracketing roots, on R^2
    NOGO,        // F = (a^2 + a0^2)^r: never globally defined
};

std::string to_string(CatalogId id);
std::optional<CatalogId> catalog_id_from_string(const std::string& name);

struct CatalogEntry {
    CatalogId id;
    std::string name;
    std::string description;
};

const std::vector<CatalogEntry>& catalog_list();

// Per-example parameters; NaN / empty fields fall back to the example's
// default set.  Which fields are read depends on the id.
struct CatalogParams {
    int n = 0;                   // total degree of F where adjustable
    double a1 = std::nan("");    // primary root
    double a2 = std::nan("");    // second bracketing root (R2 families)
    std::vector<double> roots;   // additional simple roots
    std::vector<double> xi;      // their amplitudes
    double c = std::nan("");     // H2_EVEN leading amplitude
    double xi1 = std::nan(""), xi2 = std::nan("");  // R2 families
    double nu = std::nan("");    // odd families
};

CatalogParams catalog_defaults(CatalogId id);

struct ValidityCheck {
    std::string name;
    bool pass = false;
    double value = 0.0;
    std::string detail;
};

struct CatalogBuild {
    CatalogId id;
    std::string manifold;  // "H2", "R2" or "NONE"
    ModelSpec model;
    std::optional<IntegralSystem> system;  // absent for non-simple F (NOGO)
    Chart chart;                           // intermediate chart (u or theta)

    // Conformal data in the chart coordinate w: t(w) and the factor
    // multiplying the reference metric of the claimed manifold.
    std::function<double(double)> t_of_w;
    std::function<double(double)> factor_of_w;
    Interval w_grid;              // window used for grid checks
    Interval w_limit;             // hard chart limits the windows may approach
    bool factor_negative = false; // family with sign-definite negative Omega

    std::vector<ValidityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Builds the example, verifying its parameter constraint (throws
// ConstraintViolated with the failing inequality) and running the grid
// checks: monotone coordinate change, conformal factor bounded away from
// zero, curvature bounded (or, for NOGO, provably blowing up), curvature
// nonconstancy, and boundedness of the integral coefficients toward the
// conformal boundary.
CatalogBuild build_catalog(CatalogId id, const CatalogParams& params = {}, int grid_n = 10001);

// Inverts t = t(w) over the build's monotone window (bisection) and
// evaluates the conformal factor there.  Throws InversionFailure when t is
// not attained.
double invert_t(const CatalogBuild& b, double t);
double conformal_factor(const CatalogBuild& b, double t);

}  // namespace sirev
