"""
Central part and zero locus
===========================

A two-sided ideal J is generated by its central elements J_c, and J and
J_c have the same zeros.  Both statements are checked on a small grid.
"""

# %%
from quatnull import catalog, central_part, zero_locus_grid
from quatnull.nullsatz import central_zero_grid, check_d_radical_on_samples, vanishes_on_zero_locus
from quatnull.ncpoly import parse_nc

H = catalog.HAMILTON
ideals = catalog.ideals()
box, step = catalog.GRID_BOX, catalog.GRID_STEP

for name, J in ideals.items():
    Jc = central_part(J)
    direct = zero_locus_grid(J, box, step)
    central = central_zero_grid(Jc, H, 1, box, step)
    print(f"{name:10s} J_c basis={Jc.basis.lines()}  zeros={len(direct)}  same={direct == central}")

# %%
# The commutant of i: x commutes with i exactly when its j and k parts vanish.
J = ideals["commutant"]
print([str(P[0]) for P in zero_locus_grid(J, box, step)])

# %%
# x*j - j*x does not vanish there; the report names a witness point.
report = vanishes_on_zero_locus(J, parse_nc("x1*j - j*x1", H, 1), box, step)
print(report.vanishes, [str(q) for q in report.failure_point], report.failure_value)

# %%
for r in check_d_radical_on_samples(J, [catalog.jk_part(), parse_nc("x1", H, 1)], box, step):
    print(r.status)
