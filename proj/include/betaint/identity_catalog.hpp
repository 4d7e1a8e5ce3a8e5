#pragma once

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "betaint/mellin_barnes.hpp"
#include "betaint/quadrature.hpp"

namespace betaint {

// Stable tags for the verified identities. The string forms (EQ_0_1, ...)
// are the CLI contract and never change.
enum class IdentityId {
    EQ_0_1,
    EQ_0_2,
    EQ_0_3,
    EQ_0_4,
    EQ_0_5,
    EQ_0_6,
    EQ_2_1,
    EQ_2_2,
    EQ_2_3,
    EQ_2_4,
    EQ_2_5,
    EQ_4_1,
    EQ_4_2,
    EQ_4_3,
    EQ_4_3_DIAG,
    EQ_4_4,
};

// Named real parameter vector. Ordered map so reports print deterministically.
using ParamMap = std::map<std::string, double>;

// One identity: a numeric left-hand side (integral or bilateral sum), a
// closed-form right-hand side (gamma ratios, hypergeometric sums, or a
// contour integral), and the parameter domain both are valid on.
struct IdentityCase {
    IdentityId id;
    const char* name;
    const char* description;
    std::vector<std::string> param_names;
    std::function<bool(const ParamMap&)> domain_check;
    std::function<QuadResult(const ParamMap&, double tol)> lhs;
    std::function<double(const ParamMap&)> rhs;
};

struct VerificationReport {
    std::string id;
    ParamMap params;
    double lhs_value = 0.0;
    double rhs_value = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    double lhs_error_estimate = 0.0;
    double runtime_seconds = 0.0;
    std::string note; // failure reason when a side could not be evaluated
};

const std::vector<IdentityCase>& identity_catalog();
const IdentityCase& identity_case(IdentityId id);
const char* identity_name(IdentityId id);
IdentityId identity_from_name(const std::string& name); // throws domain_error

// Closed-form right-hand side. For EQ_2_3/EQ_2_4/EQ_2_5/EQ_4_4 this is a
// gamma prefactor times a contour integral; for EQ_4_3 an auxiliary
// one-dimensional integral (verified integral-vs-integral).
double closed_form(IdentityId id, const ParamMap& params);

// Numeric left-hand side with an error estimate.
QuadResult lhs_numeric(IdentityId id, const ParamMap& params, double tol);

// EQ_0_5 left-hand side with an explicit principal-value offset alpha; used
// to check that the settled value does not depend on the window endpoints.
QuadResult askey_pv_lhs(const ParamMap& params, double alpha, double tol);

// The contour-integral factor of the right-hand side, for ids whose closed
// form contains one (EQ_2_3, EQ_2_4, EQ_2_5, EQ_4_4); throws domain_error
// otherwise. Exposed so the residue-expansion cross-check can reuse the
// exact same integrand.
MBSpec rhs_mb_spec(IdentityId id, const ParamMap& params);

// Evaluate both sides and compare. Never throws: out-of-domain parameters and
// evaluation failures come back as passed = false with a note.
VerificationReport verify(IdentityId id, const ParamMap& params, double tol);

// Relative change of the closed form under swapping two named parameters the
// identity is symmetric in (EQ_2_2: any two of a..e; EQ_2_4: any two of
// b,p,q,u,v). Swapping anything else is a domain_error.
double symmetry_probe(IdentityId id, const std::string& first,
                      const std::string& second, const ParamMap& params);

// Draw an in-domain parameter point. Deterministic for a given engine state.
ParamMap sample_params(IdentityId id, std::mt19937_64& rng);

} // namespace betaint
