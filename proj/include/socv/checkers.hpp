#ifndef SOCV_CHECKERS_HPP
#define SOCV_CHECKERS_HPP

#include <vector>

#include "socv/functions.hpp"
#include "socv/linalg.hpp"
#include "socv/outcome.hpp"

namespace socv {

// Every checker turns one inequality (or implication, or instance-level
// equivalence) into margins: minimum eigenvalues of gap matrices or scalar
// gaps. PASS/FAIL compares margins against eps_rel * max(1, scale of the
// gaps involved); SKIP is reserved for documented degeneracies (domain
// violations during evaluation, iff-boundary exclusion bands).

// "prop25.subadd": f(A) + f(B) - f(A+B) >= 0.
CheckOutcome check_subadditivity(const ScalarFunction& f, const HermitianMatrix& a,
                                 const HermitianMatrix& b, double eps_rel = kEpsRel);

// "thm5new": for negative definite A, B and g in the SOC class on the
// negative axis, the grid-sampled condition
//   A (lambda - B)^-1 A + B (lambda - A)^-1 B >= 0,  lambda >= 0,
// implies g(A+B) <= g(A) + g(B). Also records the intermediate
// "condition + lambda - 2(A+B) >= 0" margin and, when subadditivity holds,
// the limiting margin of -(A B^-1 A + B A^-1 B).
CheckOutcome check_thm5new(const ScalarFunction& g, const HermitianMatrix& a,
                           const HermitianMatrix& b, const std::vector<double>& lambda_grid,
                           double eps_rel = kEpsRel);

// "thm16.quarter": with f = 1/g for positive operator convex g vanishing at
// 0+, AB + BA >= 0 implies f(A+B) <= (f(A) + f(B))/4. The unconditional
// middle step (g(A)+g(B))^-1 <= (g(A)^-1 + g(B)^-1)/4 is recorded as
// chain_mid and gated always.
CheckOutcome check_thm16(const ScalarFunction& g, const HermitianMatrix& a,
                         const HermitianMatrix& b, double eps_rel = kEpsRel);

// "bu.gap": g(A) nabla_a g(B) - g(A nabla_a B)
//   >= a(1-a) (g(A)-g(B)) (a g(A) + (1-a) g(B))^-1 (g(A)-g(B)).
CheckOutcome check_bu_gap(const ScalarFunction& g, const HermitianMatrix& a,
                          const HermitianMatrix& b, double alpha, double eps_rel = kEpsRel);

// "thm9.harmonic": g(A nabla_a B) <= g(A) !_a g(B).
CheckOutcome check_thm9ii(const ScalarFunction& g, const HermitianMatrix& a,
                          const HermitianMatrix& b, double alpha, double eps_rel = kEpsRel);

// "lemma12.block": instance-level equivalence of C <= A !_a B and positivity
// of [[aA - a(1-a)C, a(1-a)C], [a(1-a)C, (1-a)B - a(1-a)C]]. Margins within
// 10x tolerance of zero put the instance in the exclusion band (SKIP).
CheckOutcome check_lemma12(const HermitianMatrix& a, const HermitianMatrix& b,
                           const HermitianMatrix& c, double alpha, double eps_rel = kEpsRel);

// "cor13.block": the block inequality of lemma12 at C = g(A nabla_a B),
// A -> g(A), B -> g(B); cross-checked against the thm9 gap on the same
// instance outside the exclusion band.
CheckOutcome check_cor13(const ScalarFunction& g, const HermitianMatrix& a,
                         const HermitianMatrix& b, double alpha, double eps_rel = kEpsRel);

// "thm20.right": for g in the SOC class on (a, inf) and A - B >= m > 0,
//   g(B) - g(A) >= g(s_B) - g(s_B + m) >= g(s_A - m) - g(s_A) > 0
// with s_X = max sp(X); the last term must be strictly positive unless g is
// constant.
CheckOutcome check_lower_bound_right(const ScalarFunction& g, const HermitianMatrix& a,
                                     const HermitianMatrix& b, double m,
                                     double eps_rel = kEpsRel);

// "thm21.left": mirror chain on (-inf, b) with t_X = min sp(X):
//   g(A) - g(B) >= g(t_A) - g(t_A - m) >= g(t_B + m) - g(t_B) > 0.
CheckOutcome check_lower_bound_left(const ScalarFunction& g, const HermitianMatrix& a,
                                    const HermitianMatrix& b, double m,
                                    double eps_rel = kEpsRel);

// "lemma15.resolvent": for A - B >= m > 0 with positive invertible A, B,
//   B^-1 - A^-1 >= m ||B||^-1 (||B|| + m)^-1 >= m (||A|| - m)^-1 ||A||^-1.
CheckOutcome check_lemma15(const HermitianMatrix& a, const HermitianMatrix& b, double m,
                           double eps_rel = kEpsRel);

// "cor7.kwongpower": if AB + BA >= 0 (hypothesis, else SKIP) then
// g(A^p) B + B g(A^p) >= 0 and A^-p B^-q + B^-q A^-p >= 0 for p, q in [-1, 1].
CheckOutcome check_cor7_powers(const ScalarFunction& g, double p, double q,
                               const HermitianMatrix& a, const HermitianMatrix& b,
                               double eps_rel = kEpsRel);

// "uchi.superadd": for operator convex g with g(0+) <= 0 on positive
// operators, AB + BA >= 0 implies g(A+B) >= g(A) + g(B).
CheckOutcome check_superadditivity(const ScalarFunction& g, const HermitianMatrix& a,
                                   const HermitianMatrix& b, double eps_rel = kEpsRel);

// ---------------------------------------------------------------------------

struct CheckerSpec {
    std::string id;
    std::string summary;
    std::string default_function;  // empty when the checker takes none
    bool uses_function;
    bool uses_alpha;
    bool uses_m;
    bool uses_lambda_grid;
};

// Stable registry, one entry per checker id above, in fixed order.
const std::vector<CheckerSpec>& checker_registry();
const CheckerSpec& find_checker(const std::string& id);

} // namespace socv

#endif
