"""Balanced relative complexes of flags, their flag f-vectors and Hilb
functions, and certified embeddings between type-selected face sets.

A face is a flag (a strictly increasing chain of proper nonempty subsets
of the ground set, possibly empty).  A balanced relative complex is a
face set that is sandwich-closed (anything between two faces is a face),
pure (every face extends to one of maximal size), and balanced (member
sizes inside a face are distinct, which flags guarantee for free).

coloring_complex builds the face set of all flags of proper compositions
of a structure; for kinds with a splitting calculus the three convexity
conditions of the character are verified first, recursively over every
minor reachable through nonzero splits, and a violation is reported with
the witnessing subset chain.

hilb packages fixed-face counts per size set into the same kind of
quasisymmetric class function that psi produces; the two agree for
coloring complexes, and verify_psi_equals_hilb checks that coefficient
by coefficient.  theta_certificate certifies that coarser-type faces
embed into finer-type faces: a 0/1 incidence matrix (rows indexed by the
finer faces) with full column rank, plus an equivariance check on the
group generators.  Rank is computed by exact integer elimination; no
floating point.
"""

from dataclasses import dataclass
from itertools import combinations

from .compositions import (Flag, IntComposition, act_flag, alpha_of_subset,
                           compositions_of, flag_of, refines, subset_of_alpha,
                           type_of_flag)
from .chromatic import GROUND_CAP, ClassQSym, proper_compositions, psi
from .errors import DomainError, VerificationFailure
from .groups import ClassFunction, leq_char
from .structures import (DIRECT_ONLY_KINDS, char_value, check_compatible,
                         contract, restrict, split_is_zero)


class BalancedRelativeComplex:
    """A validated set of flag faces on a common ground set."""

    def __init__(self, ground, faces, validate=True):
        self.ground = tuple(sorted(ground))
        canon = set()
        for f in faces:
            if not isinstance(f, Flag):
                f = Flag(self.ground, tuple(f))
            if f.ground != self.ground:
                raise DomainError("face %s lives on a different ground set" % (f,))
            canon.add(f)
        self.faces = frozenset(canon)
        if validate:
            self._validate()

    @property
    def dimension(self):
        """One less than the largest face size; -1 for the empty complex."""
        if not self.faces:
            return -1
        return max(len(f.chain) for f in self.faces) - 1

    def _validate(self):
        faces = self.faces
        chains = {frozenset(f.chain) for f in faces}
        for tau in faces:
            members = list(tau.chain)
            for k in range(len(members)):
                for sub in combinations(members, k):
                    sigma = frozenset(sub)
                    if sigma in chains:
                        continue
                    for rho in chains:
                        if rho <= sigma:
                            raise DomainError(
                                "sandwich violation: %s <= %s <= %s, middle face missing"
                                % (_chain_str(rho), _chain_str(sigma), _chain_str(tau.chain)))
        if faces:
            top = self.dimension + 1
            facets = [frozenset(f.chain) for f in faces if len(f.chain) == top]
            for f in faces:
                fc = frozenset(f.chain)
                if not any(fc <= big for big in facets):
                    raise DomainError("purity violation: face %s extends to no %d-vertex face"
                                      % (f, top))

    def by_kappa(self):
        """Faces grouped by their size set."""
        out = {}
        for f in self.faces:
            out.setdefault(f.kappa, []).append(f)
        for k in out:
            out[k].sort(key=lambda f: f.chain)
        return out

    def faces_of_type(self, alpha):
        """Faces whose size set corresponds to the given composition."""
        n = len(self.ground)
        if alpha.degree != n:
            raise DomainError("composition degree %d does not match ground size %d"
                              % (alpha.degree, n))
        want = tuple(sorted(subset_of_alpha(alpha)))
        return sorted((f for f in self.faces if f.kappa == want), key=lambda f: f.chain)


def _chain_str(chain):
    parts = sorted(chain, key=lambda s: (len(s), s))
    return "<".join("{%s}" % ",".join(s) for s in parts) or "(empty)"


def check_balanced_convex(h, char):
    """Verify the three convexity conditions on every minor of h reachable
    through nonzero splits.  Returns None when all hold, else a witness
    dict naming the condition and the offending subset chain."""
    char = check_compatible(h, char)
    if h.kind in DIRECT_ONLY_KINDS:
        return None
    seen = set()

    def walk(cur, trail):
        if cur in seen:
            return None
        seen.add(cur)
        ground = cur.ground
        n = len(ground)
        phi = char_value(cur, char)
        if n == 1:
            if phi != 1:
                return {"condition": 1, "ground": list(ground), "trail": trail,
                        "detail": "character is 0 on a singleton"}
            return None
        splits = []
        for k in range(1, n):
            for c in combinations(ground, k):
                S = frozenset(c)
                if not split_is_zero(cur, S):
                    splits.append(S)
        if not splits:
            return {"condition": 2, "ground": list(ground), "trail": trail,
                    "detail": "no nonzero split exists"}
        for S in splits:
            left, right = restrict(cur, S), contract(cur, S)
            if phi == 1 and (char_value(left, char) != 1 or char_value(right, char) != 1):
                return {"condition": 3, "ground": list(ground),
                        "subset": sorted(S), "trail": trail,
                        "detail": "character 1 on the whole but 0 on a piece"}
            for piece, tag in ((left, "restrict"), (right, "contract")):
                w = walk(piece, trail + [(tag, tuple(sorted(S)))])
                if w is not None:
                    return w
        return None

    return walk(h, [])


def coloring_complex(h, char, max_ground=GROUND_CAP, workers=1):
    """The balanced relative complex of flags of proper compositions.

    For splitting kinds the character's convexity conditions are checked
    first and a violation raises with the witness; the built complex is
    then validated structurally (sandwich, purity) in all cases."""
    char = check_compatible(h, char)
    witness = check_balanced_convex(h, char)
    if witness is not None:
        raise VerificationFailure(
            "character %s is not balanced convex on this structure: %s"
            % (char, witness["detail"]), witness)
    propers = proper_compositions(h, char, workers=workers, max_ground=max_ground)
    faces = [flag_of(c) for c in propers]
    phi = BalancedRelativeComplex(h.ground, faces, validate=True)
    if phi.faces and phi.dimension != len(h.ground) - 2:
        raise VerificationFailure(
            "coloring complex has dimension %d, expected %d"
            % (phi.dimension, len(h.ground) - 2))
    return phi


def flag_f_vector(phi):
    """Face counts per size set, one entry for every subset of sizes."""
    n = len(phi.ground)
    counts = {f.kappa: 0 for f in phi.faces}
    for f in phi.faces:
        counts[f.kappa] += 1
    out = {}
    for k in range(n):
        for c in combinations(range(1, n), k):
            out[c] = counts.get(c, 0)
    return out


def complex_automorphism_check(phi, g):
    """Whether a ground permutation maps faces to faces."""
    return frozenset(act_flag(g, f) for f in phi.faces) == phi.faces


def hilb(phi, group):
    """Fixed-face counts per size set, as a quasisymmetric class function
    of degree |ground|; the empty flag contributes to the one-part
    composition.  Generators must be complex automorphisms."""
    if group.ground != phi.ground:
        raise DomainError("group acts on %r, complex lives on %r"
                          % (group.ground, phi.ground))
    for g in group.generators:
        if not complex_automorphism_check(phi, g):
            raise DomainError("generator %s is not an automorphism of the complex"
                              % g.cycle_string())
    n = len(phi.ground)
    coeffs = {}
    for kappa, faces in phi.by_kappa().items():
        alpha = alpha_of_subset(set(kappa), n)
        by_element = {}
        for g in group.elements:
            by_element[g] = sum(1 for f in faces if act_flag(g, f) == f)
        coeffs[alpha] = ClassFunction.from_element_values(group, by_element)
    return ClassQSym(n, group, coeffs)


def verify_psi_equals_hilb(h, char, group, max_ground=GROUND_CAP):
    """Compare the two routes coefficient by coefficient."""
    X = psi(h, char, group, max_ground=max_ground)
    phi = coloring_complex(h, char, max_ground=max_ground)
    H = hilb(phi, group)
    diffs = []
    for alpha in sorted(set(X.coeffs) | set(H.coeffs), key=lambda a: (a.length, a.parts)):
        a, b = X.coefficient(alpha).values, H.coefficient(alpha).values
        if a != b:
            diffs.append({"alpha": str(alpha), "psi": list(a), "hilb": list(b)})
    return {"ok": not diffs, "diffs": diffs}


# ---------------------------------------------------------------------------
# embedding certificates


@dataclass
class EmbeddingCertificate:
    """Witness that faces of the coarser type embed equivariantly into
    faces of the finer type: full column rank of the incidence matrix
    (rows: finer faces, columns: coarser faces) plus generator
    equivariance."""

    alpha: IntComposition
    beta: IntComposition
    n_source: int
    n_target: int
    matrix: tuple
    rank: int
    equivariance_checked: bool

    @property
    def valid(self):
        return self.rank == self.n_source and self.equivariance_checked


def integer_matrix_rank(rows):
    """Exact rank by multiply-and-subtract integer elimination (no
    division, no floating point; rows are scaled by the pivot)."""
    m = [list(r) for r in rows]
    if not m or not m[0]:
        return 0
    nr, nc = len(m), len(m[0])
    rank = 0
    for col in range(nc):
        piv = None
        for r in range(rank, nr):
            if m[r][col] != 0:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        pivot = m[rank][col]
        for r in range(rank + 1, nr):
            if m[r][col] != 0:
                factor = m[r][col]
                m[r] = [pivot * a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == min(nr, nc):
            break
    return rank


def theta_certificate(phi, group, alpha, beta):
    """Certificate for the pair alpha <= beta (beta refines alpha)."""
    if not refines(alpha, beta):
        raise DomainError("%s is not refined by %s" % (alpha, beta))
    src = phi.faces_of_type(alpha)
    tgt = phi.faces_of_type(beta)
    matrix = tuple(
        tuple(1 if set(s.chain) <= set(t.chain) else 0 for s in src)
        for t in tgt)
    rank = integer_matrix_rank(matrix)
    equi = _theta_equivariant(phi, group, src, tgt)
    return EmbeddingCertificate(alpha, beta, len(src), len(tgt), matrix, rank, equi)


def _theta_equivariant(phi, group, src, tgt):
    tgt_set = set(tgt)
    for g in group.generators:
        for s in src:
            direct = {t for t in tgt if set(act_flag(g, s).chain) <= set(t.chain)}
            moved = {act_flag(g, t) for t in tgt if set(s.chain) <= set(t.chain)}
            if direct != moved or not moved <= tgt_set:
                return False
    return True


def comparable_pairs(n, covering_only=False):
    """Pairs (alpha, beta) of compositions of n with beta refining alpha,
    alpha != beta; covering pairs split exactly one part."""
    comps = compositions_of(n)
    out = []
    for a in comps:
        sa = subset_of_alpha(a)
        for b in comps:
            sb = subset_of_alpha(b)
            if sa < sb and (not covering_only or len(sb) == len(sa) + 1):
                out.append((a, b))
    return out


def verify_m_increasing(X, phi, group, certify="covering"):
    """Certificates on refinement pairs plus, for abelian groups, the
    effective-order comparison of every comparable coefficient pair.

    certify: "covering" (enough for the order, by composing embeddings)
    or "comparable" (every pair)."""
    n = X.degree
    cert_pairs = comparable_pairs(n, covering_only=(certify == "covering"))
    certs = []
    for a, b in cert_pairs:
        c = theta_certificate(phi, group, a, b)
        certs.append(c)
    abelian = group.is_abelian()
    leq_failures = []
    if abelian:
        for a, b in comparable_pairs(n):
            ca, cb = X.coefficient(a), X.coefficient(b)
            if ca.is_zero() and cb.is_zero():
                continue
            ok, details = leq_char(ca, cb)
            if not ok:
                leq_failures.append({"alpha": str(a), "beta": str(b), "details": details})
    bad_certs = [c for c in certs if not c.valid]
    return {
        "ok": not bad_certs and not leq_failures,
        "abelian": abelian,
        "certificates": certs,
        "invalid_certificates": [(str(c.alpha), str(c.beta)) for c in bad_certs],
        "leq_failures": leq_failures,
    }
