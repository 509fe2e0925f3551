#pragma once

#include <string>

#include "stiefelmw/bigraded.hpp"
#include "stiefelmw/stiefel_basis.hpp"

namespace stiefelmw {

/// Path B: the additive cohomology of V_k(A^n) rebuilt from the split
/// Thom-Gysin short exact sequences of the frame-bundle tower, without any
/// reference to the closed-form subset description.
///
/// Recursion on the frame count m, with c = n - m + 1 the index of the
/// fiber A^c \ 0 over V_{m-1}:
///   H(V_0) = {MW@(0,0)},  H(V_1) = {MW@(0,0), MW@(2n-1,n)}
///   c odd : H(V_m) = H(V_{m-1}) + H(V_{m-1}) shifted by (2c-1, c)
///   c even: H(V_m) = H(V_{m-2})
///                  + Coker_eta(H(V_{m-2})) shifted by (2c+1, c+1)
///                  + Ker_eta(H(V_{m-2}))   shifted by (2c-1, c)
///                  + H(V_{m-2})            shifted by (4c, 2c+1)
/// The shifts are the degrees of the new generators beta_{c-1}, alpha_c,
/// alpha_{c-1} and beta_{c,c-1}.
FormalSum inductive_cohomology(StiefelIndex idx);

/// Euler class of the sphere bundle V_{k+1}(A^n) -> V_k(A^n), evaluated on
/// the base named by idx. Nonzero exactly when n-k is even, in which case
/// it is eta * beta_{n-k} in bidegree (2(n-k), n-k). For k = 1 the class is
/// n_eps * eta * beta_{n-1}, which vanishes exactly for n even -- the same
/// parity of n-k, so one rule covers every k >= 1.
struct EulerClass {
    bool zero = true;
    int beta_index = 0;  // m in eta*beta_{m}; meaningful only when !zero
    Bidegree degree;     // (2m, m); meaningful only when !zero
};

EulerClass euler_class(StiefelIndex idx);

std::string to_string(const EulerClass& e);  // "eta*beta_{4}" or "0"

}  // namespace stiefelmw
