#!/usr/bin/env python3
"""Smoke test for the ckops python bindings."""

import sys

import ckops

failures = []


def check(name, cond, detail=""):
    print(("ok  " if cond else "FAIL") + " " + name + ("" if cond else f"  ({detail})"))
    if not cond:
        failures.append(name)


names = ckops.catalog(4)
check("catalog content", "P2" in names and "Q3" in names and "P1xP1" in names)
check("catalog quadric bound", "Q4" not in ckops.catalog(8, max_quadric=3))

check("dim", ckops.dim("P2xQ3") == 5)
check("basis of Q4", ckops.basis("Q4") == ["h0", "h1", "h2", "l2", "l1", "l0"])
check("cell dims of Q4", ckops.cell_dims("Q4") == [4, 3, 2, 2, 1, 0])

# Sq_1(l2) = l1 on Q4, basis order h0 h1 h2 l2 l1 l0
check("sq1 table row", ckops.sq1("Q4", [0, 0, 0, 1, 0, 0]) == [0, 0, 0, 0, 1, 0])
check("sq1 kills l1", ckops.sq1("Q4", [0, 0, 0, 0, 1, 0]) == [0] * 6)
# Sq^1(h) = h^2 on P3
check("sq1_coh", ckops.sq1_coh("P3", [0, 1, 0, 0]) == [0, 0, 1, 0])

check("chow_mul", ckops.chow_mul("P3", [0, 1, 0, 0], [0, 1, 0, 0]) == ["0", "0", "1", "0"])
check("chern of tangent", ckops.chern_of_tangent("P3", 1) == ["0", "4", "0", "0"])

# psi^2(1 - [O_pt]) on P1: x = 1 - [O(-1)] has coordinates (0, 1); psi^2 x = 2x - x^2
check("adams_psi", ckops.adams_psi(2, "P1", [0, 1]) == ["0", "2"])
check("homological point identity", ckops.homological_adams(-1, "P1", [0, 1]) == ["0", "1"])

theta = ckops.theta_of_tangent(-1, "P2")
check("theta rank entry", theta[0][0] == "1")

check("tau of the point at level 0", ckops.tau("P2", [0, 0, 1], 0) == ["0", "0", "0"])
check("gr_steenrod on Q4", ckops.gr_steenrod("Q4", 2, [0, 0, 0, 1, 0, 0]) == [0, 0, 0, 0, 1, 0])

reports = ckops.verify("cartan", max_dim=4)
check("verify cartan green", len(reports) == 1 and reports[0]["failed"] == 0
      and reports[0]["passed"] > 0 and reports[0]["failures"] == [])

diag = [(1, "h0", "l0"), (1, "h1", "l1"), (1, "l1", "h1"), (1, "l0", "h0")]
v = ckops.torsion(3, diag, closure_asserted=True)
check("torsion verdict", v["multiplicity"] == 1 and v["applicable"] and v["witness"] == 1)
v = ckops.torsion(3, [])
check("torsion empty carrier", v["multiplicity"] == 0 and not v["applicable"])

try:
    ckops.adams_psi(2, "Q2", [0, 0, 0, 1])  # l1 is outside the line subring
    check("UnsupportedDomain raised", False)
except ckops.UnsupportedDomain:
    check("UnsupportedDomain raised", True)

try:
    ckops.tau("P2", [1, 0, 0], 0)  # [O_X] is not in F_0
    check("CertificateError raised", False)
except ckops.CertificateError:
    check("CertificateError raised", True)

try:
    ckops.dim("P0x")
    check("DomainError raised", False)
except ckops.DomainError:
    check("DomainError raised", True)

print()
if failures:
    print(f"{len(failures)} smoke check(s) failed")
    sys.exit(1)
print("all smoke checks passed")
