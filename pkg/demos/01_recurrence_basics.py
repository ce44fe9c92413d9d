"""Generating the polynomial families and perturbing their recurrence.

The library's central objects: a CoefficientScheme feeding the three-term
recurrence

    P_{n+1}(z) = rho_n (z - c_n) P_n(z) - lam_n W_n(z) P_{n-1}(z),

and a Perturbation that shifts one center (c_k -> c_k + mu) and/or dilates
one coefficient (lam_kp -> nu lam_kp).  Everything here runs in exact
rational arithmetic.
"""

from fractions import Fraction

from rii import (CoefficientScheme, Perturbation, cauchy_scheme,
                 example_closed_form, gen_associated, gen_first_kind,
                 gen_second_kind)

scheme = cauchy_scheme()   # rho=1, c=0, lam=1/4, W(x) = x^2 + 1

print("== the worked example ==")
ps = gen_first_kind(scheme, None, 6)
for n in (0, 1, 2, 3, 6):
    print("P_%d(x) = %s" % (n, ps[n]))

print()
print("closed form agrees with the recurrence, coefficient for coefficient:")
for n in (5, 6):
    print("  n=%d: %s" % (n, ps[n] == example_closed_form(n)))

print()
print("second kind lags the first kind by one degree (Q_n = P_{n-1} here):")
qs = gen_second_kind(scheme, None, 6)
print("  Q_6(x) = %s" % qs[6])
print("  equality for n<=6:", all(qs[n] == ps[n - 1] for n in range(1, 7)))

print()
print("== perturbing one recurrence step ==")
pert = Perturbation.corec(0, Fraction(1, 10))
ps_star = gen_first_kind(scheme, pert, 4)
print("shift c_0 by mu=1/10: P_1 becomes %s" % ps_star[1])
print("degrees 0..4 changed?", [ps_star[n] != ps[n] for n in range(5)])

pert = Perturbation.codil(2, Fraction(3, 2))
ps_star = gen_first_kind(scheme, pert, 4)
print("dilate lam_2 by nu=3/2: changes start at degree 3:",
      [ps_star[n] != ps[n] for n in range(5)])

print()
print("a co-recursion at level 0 never touches the second kind family")
qs_star = gen_second_kind(scheme, Perturbation.corec(0, Fraction(7, 3)), 6)
print("  Q_n identical for n<=6:", list(qs_star) == list(qs))

print()
print("== associated families ==")
# On a constant scheme shifting the start index changes nothing, so use a
# tabulated one to make the shift visible.
varying = CoefficientScheme.special(rho=[1, 1, 1, 1, 1],
                                    c=[0, 1, 2, 3, 4],
                                    lam=[Fraction(1, 2)] * 5, omega=1)
base = gen_first_kind(varying, None, 2)
g = gen_associated(varying, 1, 2, kind="first")  # indices shifted by j+1 = 2
print("base P_2(x)      = %s" % base[2])
print("shifted G_2(x)   = %s  (built from c_2, c_3)" % g[2])

