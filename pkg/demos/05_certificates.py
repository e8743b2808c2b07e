"""
Checking radical-membership certificates
========================================

A certificate says f vanishes wherever J does.  The checker verifies a
quasi-anisotropic form shape and an exact ideal membership in J_c.
"""

# %%
import subprocess
import sys
import tempfile
from pathlib import Path

from quatnull import catalog, check_ap_certificate, check_rad_d_witness, check_rad_dprime_witness, transform_witness
from quatnull.certfile import CertificateDocument, dump_certificate, write_certificate
from quatnull.nullsatz import induced_rad_d_witness, transform_identity_residual

H = catalog.HAMILTON
ideals = catalog.ideals()

for e in catalog.rad_d_entries():
    v = check_rad_d_witness(ideals[e.ideal], e.f, e.witness)
    print(f"{e.name:26s} {v.to_dict()['verdict']:7s} nf={v.normal_form}")

# %%
# Central companions can be traded for reduced norms of new companions.
e = next(e for e in catalog.rad_d_entries() if e.name == "commutant-jk-diag-two")
w2 = transform_witness(e.witness, H, 1)
print("q =", w2.form)
print("identity residual:", transform_identity_residual(e.witness, w2, 1))
print("primed check:", check_rad_dprime_witness(ideals[e.ideal], e.f, w2).accepted)

# %%
# Sums of norms: N(f_1) + ... + N(f)^k in J.  Each accepted one also yields a
# diagonal-form witness.
for e in catalog.ap_entries():
    v = check_ap_certificate(ideals[e.ideal], e.f, e.witness)
    bridged = v.accepted and check_rad_d_witness(ideals[e.ideal], e.f, induced_rad_d_witness(e.f, e.witness)).accepted
    print(f"{e.name:24s} {v.to_dict()['verdict']:7s} bridged={bridged}")

# %%
# The same check from the command line.
doc = CertificateDocument("ap", H, 1, ideals["norm"], catalog.ap_entries()[0].f, catalog.ap_entries()[0].witness)
print(dump_certificate(doc))
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "cert.txt"
    write_certificate(doc, path)
    res = subprocess.run([sys.executable, "-m", "quatnull.cli", "check-cert", "ap", str(path)],
                         capture_output=True, text=True)
    print(res.stdout, "exit", res.returncode)
