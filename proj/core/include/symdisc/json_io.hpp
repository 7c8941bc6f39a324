#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "symdisc/closed_form.hpp"
#include "symdisc/montecarlo.hpp"
#include "symdisc/nearest.hpp"
#include "symdisc/polynomial.hpp"
#include "symdisc/strata.hpp"
#include "symdisc/symmetric_matrix.hpp"

namespace symdisc {

// Serialization conventions:
//  - exact scalars:   {"q": "p/r", "sqrt2_exp": a, "sqrtpi_exp": b}
//  - polynomials:     arrays of fraction strings, lowest degree first
//  - matrices:        {"n": n, "rows": [[...], ...]} (or a bare rows array
//                     on input); loading enforces symmetry within 1e-12
//  - set partitions:  arrays of 1-based index arrays, e.g. [[1,2],[3]]
//  - reports:         {"experiment", "params", "estimate", "std_error",
//                     "n_samples", "seed", "extras"} plus "per_trial" when
//                     the experiment tracks per-trial values
// All loaders throw ParseError on malformed input.

nlohmann::json to_json(const ClosedFormScalar& s);
ClosedFormScalar closed_form_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatPolynomial& p);
RatPolynomial rat_polynomial_from_json(const nlohmann::json& j);
nlohmann::json to_json(const IntPolynomial& p);

nlohmann::json to_json(const SymmetricMatrix& m);
SymmetricMatrix matrix_from_json(const nlohmann::json& j,
                                 double sym_tol = 1e-12);

/// Plain-text matrix format: dimension on the first line, then the n rows.
std::string matrix_to_text(const SymmetricMatrix& m);
SymmetricMatrix matrix_from_text(const std::string& text,
                                 double sym_tol = 1e-12);

/// Accepts either format: JSON (object or bare rows array) when the first
/// non-space character is '{' or '[', the plain-text layout otherwise.
SymmetricMatrix matrix_from_string(const std::string& text,
                                   double sym_tol = 1e-12);

nlohmann::json to_json(const SetPartition& p);
SetPartition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MultiplicityVector& w);
MultiplicityVector multiplicity_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CriticalPoint& cp);

nlohmann::json to_json(const MonteCarloReport& r);
MonteCarloReport report_from_json(const nlohmann::json& j);

}  // namespace symdisc
