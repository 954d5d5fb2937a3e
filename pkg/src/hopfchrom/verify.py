"""One-stop conformance check for a structure, character, and group.

run_verification computes the class function once and then checks, in
order: convexity of the character on the instance, agreement of the
composition route with the complex route, embedding certificates on
refinement pairs, the effective-order monotonicity of coefficients
(abelian groups), the f-vector inequalities at class and orbit level,
integrality and bounds of the orbit counts, and agreement with the
brute-force coloring oracle.  The report is a plain dict, JSON-ready,
with an overall "ok" plus one section per check so a failure names the
exact place it happened.
"""

from .chromatic import (ORACLE_GROUND_CAP, coloring_oracle,
                        fixed_coloring_counts, orbital_polynomial, orbital_psi,
                        psi, psi_polynomial, verify_flawless)
from .complexes import (check_balanced_convex, coloring_complex, hilb,
                        verify_m_increasing)
from .errors import VerificationFailure
from .structures import DIRECT_ONLY_KINDS, check_compatible

VERIFY_GROUND_CAP = 8


def run_verification(h, char, group, k=None, max_ground=VERIFY_GROUND_CAP,
                     certify="comparable", include_oracle=True, workers=1):
    """Full conformance report; every check that can fail is a section."""
    char = check_compatible(h, char)
    n = len(h.ground)
    report = {
        "structure": {"kind": h.kind, "ground": list(h.ground), "size": n},
        "character": str(char),
        "group_order": group.order,
        "checks": {},
    }
    checks = report["checks"]

    if h.kind in DIRECT_ONLY_KINDS:
        checks["balanced_convex"] = {"ok": True, "skipped": "no splitting calculus for this kind"}
    else:
        witness = check_balanced_convex(h, char)
        checks["balanced_convex"] = {"ok": witness is None}
        if witness is not None:
            checks["balanced_convex"]["witness"] = witness

    X = psi(h, char, group, workers=workers, max_ground=max_ground)
    phi = coloring_complex(h, char, max_ground=max_ground, workers=workers)
    H = hilb(phi, group)
    diffs = []
    for alpha in sorted(set(X.coeffs) | set(H.coeffs), key=lambda a: (a.length, a.parts)):
        a, b = X.coefficient(alpha).values, H.coefficient(alpha).values
        if a != b:
            diffs.append({"alpha": str(alpha), "composition_route": list(map(str, a)),
                          "complex_route": list(map(str, b))})
    checks["psi_equals_hilb"] = {"ok": not diffs, "diffs": diffs}

    inc = verify_m_increasing(X, phi, group, certify=certify)
    checks["theta_certificates"] = {
        "ok": not inc["invalid_certificates"],
        "pairs_checked": len(inc["certificates"]),
        "invalid": inc["invalid_certificates"],
    }
    checks["coefficient_order"] = {
        "ok": not inc["leq_failures"],
        "abelian": inc["abelian"],
        "failures": inc["leq_failures"],
    }
    if not inc["abelian"]:
        checks["coefficient_order"]["skipped"] = "effective order needs an abelian group"

    poly = psi_polynomial(X)
    if group.is_abelian():
        checks["flawless_class"] = verify_flawless(poly)
    else:
        checks["flawless_class"] = {"ok": True, "skipped": "class-level order needs an abelian group"}
    ofvec = orbital_polynomial(X)
    checks["flawless_orbital"] = verify_flawless(ofvec)
    checks["flawless_orbital"]["f_vector"] = ofvec

    burnside = {"ok": True, "orbit_counts": {}}
    try:
        orb = orbital_psi(X)
        for alpha in sorted(orb, key=lambda a: (a.length, a.parts)):
            v = orb[alpha]
            ident = X.coefficient(alpha).at_identity()
            entry = {"count": v, "identity": ident}
            if not (0 <= v <= ident):
                entry["violation"] = "orbit count outside [0, identity coefficient]"
                burnside["ok"] = False
            burnside["orbit_counts"][str(alpha)] = entry
    except VerificationFailure as exc:
        burnside["ok"] = False
        burnside["error"] = str(exc)
        burnside["details"] = exc.details
    checks["burnside_integrality"] = burnside

    if include_oracle and n <= ORACLE_GROUND_CAP:
        kk = k if k is not None else n
        colorings = coloring_oracle(h, char, kk, max_ground=max_ground)
        fixed = fixed_coloring_counts(colorings, group)
        mism = []
        for idx, rep in enumerate(group.class_reps):
            want = poly.value_at(rep, kk)
            got = fixed.values[idx]
            if want != got:
                mism.append({"class": rep.cycle_string(), "polynomial": str(want),
                             "oracle": str(got)})
        checks["oracle"] = {"ok": not mism, "colors": kk,
                            "total_colorings": len(colorings), "mismatches": mism}
    else:
        checks["oracle"] = {"ok": True, "skipped": "oracle not run"}

    report["ok"] = all(c["ok"] for c in checks.values())
    return report
