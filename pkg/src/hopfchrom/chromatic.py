"""The central invariant: quasisymmetric class functions of proper colorings.

psi(h, char, G) attaches to a structure, a character and a group of
automorphisms the function whose value at g in G is the generating sum of
proper colorings fixed by g; organized by monomial type, each coefficient
is an exact class function.  Enumeration works over proper set
compositions, peeling first blocks and pruning on vanishing splits or
character value 0; hypergraph enumeration prunes on fully covered edges;
point collections are filtered whole.

The principal specialization gives a polynomial with class-function
coefficients on the binomial basis; orbital versions average each
coefficient over the group (Burnside), always landing in nonnegative
integers.  A brute-force coloring oracle provides an independent route
for cross-checking, and verify_flawless checks the f-vector inequalities
either numerically or in the effective order on characters.
"""

from concurrent.futures import ProcessPoolExecutor
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import comb

from .compositions import IntComposition, SetComposition, act, type_of
from .errors import DomainError, ResourceCapError
from .groups import (ClassFunction, Permutation, burnside_count, leq_char)
from .structures import (CharacterSpec, automorphism_check, char_value, check_compatible,
                         contract, level_set_composition, proper_coloring,
                         proper_composition, restrict, split_is_zero)

GROUND_CAP = 9
ORACLE_GROUND_CAP = 8


def proper_compositions(h, char, workers=1, max_ground=GROUND_CAP):
    """All proper set compositions of h for the character, sorted by length
    then blocks.  With workers > 1 the search space is partitioned by the
    first block; results are identical to the serial run."""
    char = check_compatible(h, char)
    n = len(h.ground)
    if n > max_ground:
        raise ResourceCapError("ground set size %d exceeds cap %d" % (n, max_ground))
    firsts = [frozenset(c) for k in range(1, n + 1)
              for c in combinations(h.ground, k)]
    if workers > 1:
        tasks = [(h, char, f) for f in firsts]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_enumerate_from_first, tasks))
        found = [c for chunk in chunks for c in chunk]
    else:
        found = []
        for f in firsts:
            found.extend(_enumerate_from_first((h, char, f)))
    return sorted(found, key=lambda c: (c.length, c.blocks))


def _enumerate_from_first(task):
    h, char, first = task
    out = []
    if h.kind == "hypergraph":
        _rec_hypergraph(h, dict(), first, [], out)
    elif h.kind == "gen_permutohedron":
        _rec_points(h, char, frozenset(h.ground), first, [], out)
    else:
        _rec_peel(h, char, first, [], out)
    return out


def _rec_peel(cur, char, block, prefix, out):
    """Peel one block off a splitting structure, then recurse freely."""
    S = frozenset(block)
    whole = len(S) == len(cur.ground)
    if not whole and split_is_zero(cur, S):
        return
    if char_value(cur if whole else restrict(cur, S), char) != 1:
        return
    prefix = prefix + [tuple(sorted(S))]
    if whole:
        out.append(SetComposition(tuple(prefix)))
        return
    nxt = contract(cur, S)
    for k in range(1, len(nxt.ground) + 1):
        for c in combinations(nxt.ground, k):
            _rec_peel(nxt, char, frozenset(c), prefix, out)


def _rec_hypergraph(h, position, block, prefix, out):
    """Place one block; any edge that just became fully covered must meet
    it in exactly one element."""
    depth = len(prefix)
    newpos = dict(position)
    for x in block:
        newpos[x] = depth
    for e in h.edges:
        if any(x in block for x in e) and all(x in newpos for x in e):
            if sum(1 for x in e if newpos[x] == depth) != 1:
                return
    prefix = prefix + [tuple(sorted(block))]
    remaining = [x for x in h.ground if x not in newpos]
    if not remaining:
        out.append(SetComposition(tuple(prefix)))
        return
    for k in range(1, len(remaining) + 1):
        for c in combinations(remaining, k):
            _rec_hypergraph(h, newpos, frozenset(c), prefix, out)


def _rec_points(h, char, remaining, block, prefix, out):
    """No pruning is available for point collections; completed
    compositions are tested whole."""
    prefix = prefix + [tuple(sorted(block))]
    rest = remaining - frozenset(block)
    if not rest:
        comp = SetComposition(tuple(prefix))
        if proper_composition(h, char, comp):
            out.append(comp)
        return
    for k in range(1, len(rest) + 1):
        for c in combinations(sorted(rest), k):
            _rec_points(h, char, rest, frozenset(c), prefix, out)


@dataclass
class ClassQSym:
    """Monomial-basis expansion with class-function coefficients.

    coeffs maps integer compositions of the degree to class functions;
    absent compositions are zero.  Engine outputs are fixed-composition
    counts, so values are nonnegative integers maximized at the identity;
    that much is validated here."""

    degree: int
    group: object
    coeffs: dict

    def __post_init__(self):
        ordered = {}
        for alpha in sorted(self.coeffs, key=lambda a: (a.length, a.parts)):
            cf = self.coeffs[alpha]
            if alpha.degree != self.degree:
                raise DomainError("coefficient %s does not match degree %d" % (alpha, self.degree))
            if cf.group is not self.group:
                raise DomainError("coefficient %s lives on a different group" % (alpha,))
            ident = cf.at_identity()
            for v in cf.values:
                if not isinstance(v, int) or v < 0 or v > ident:
                    raise DomainError(
                        "coefficient %s has value %r outside 0..identity" % (alpha, v))
            if ident != 0:
                ordered[alpha] = cf
        self.coeffs = ordered

    def coefficient(self, alpha):
        if alpha in self.coeffs:
            return self.coeffs[alpha]
        return ClassFunction.constant(self.group, 0)

    def support(self):
        return list(self.coeffs)

    def identity_slice(self):
        return {alpha: cf.at_identity() for alpha, cf in self.coeffs.items()}

    def __eq__(self, other):
        return (isinstance(other, ClassQSym) and self.degree == other.degree
                and self.group is other.group and self.coeffs == other.coeffs)


def psi(h, char, group, workers=1, max_ground=GROUND_CAP):
    """The quasisymmetric class function of (h, char) under a group of
    automorphisms of h.  Every generator is checked; a non-automorphism is
    reported by name."""
    char = check_compatible(h, char)
    if group.ground != h.ground:
        raise DomainError("group acts on %r, structure lives on %r"
                          % (group.ground, h.ground))
    for g in group.generators:
        if not automorphism_check(h, g):
            raise DomainError("generator %s is not an automorphism of the structure"
                              % g.cycle_string())
    propers = proper_compositions(h, char, workers=workers, max_ground=max_ground)
    by_type = {}
    for comp in propers:
        by_type.setdefault(type_of(comp), []).append(comp)
    coeffs = {}
    for alpha, comps in by_type.items():
        comp_set = set(comps)
        by_element = {}
        for g in group.elements:
            by_element[g] = sum(1 for c in comps if act(g, c) == c)
        coeffs[alpha] = ClassFunction.from_element_values(group, by_element)
    return ClassQSym(len(h.ground), group, coeffs)


@dataclass
class ClassPolynomial:
    """Principal specialization on the binomial basis: value at a
    nonnegative integer k is sum over i of f_i * C(k, i), where each f_i
    is a class function."""

    group: object
    fvec: tuple

    @property
    def degree(self):
        return len(self.fvec) - 1

    def value_at(self, g, k):
        return sum(f(g) * comb(k, i) for i, f in enumerate(self.fvec))

    def identity_binomial(self):
        return [f.at_identity() for f in self.fvec]

    def identity_monomial(self):
        return binomial_to_monomial(self.identity_binomial())


def psi_polynomial(X):
    """Collapse a ClassQSym along composition length."""
    zero = ClassFunction.constant(X.group, 0)
    fvec = [zero for _ in range(X.degree + 1)]
    for alpha, cf in X.coeffs.items():
        fvec[alpha.length] = fvec[alpha.length] + cf
    return ClassPolynomial(X.group, tuple(fvec))


def orbital_psi(X):
    """Burnside average of every coefficient: composition -> orbit count."""
    return {alpha: burnside_count(cf) for alpha, cf in X.coeffs.items()}


def orbital_polynomial(X):
    """Binomial-basis integer f-vector of the orbital invariant."""
    orb = orbital_psi(X)
    fvec = [0] * (X.degree + 1)
    for alpha, v in orb.items():
        fvec[alpha.length] += v
    return fvec


def binomial_to_monomial(fvec):
    """Convert sum f_i*C(x,i) to ascending monomial coefficients (exact)."""
    coeffs = [Fraction(0)] * len(fvec)
    for i, fi in enumerate(fvec):
        if fi == 0:
            continue
        # falling factorial x(x-1)...(x-i+1) / i!
        poly = [Fraction(1)]
        for j in range(i):
            poly = [a - j * b for a, b in zip([Fraction(0)] + poly, poly + [Fraction(0)])]
        fact = 1
        for j in range(1, i + 1):
            fact *= j
        for d, c in enumerate(poly):
            coeffs[d] += Fraction(fi) * c / fact
    return coeffs


# ---------------------------------------------------------------------------
# brute-force oracle


def coloring_oracle(h, char, k, max_ground=ORACLE_GROUND_CAP, max_colors=None):
    """All proper colorings with colors 1..k, by direct per-kind predicate.

    Returns color tuples aligned with the sorted ground set.  Capped
    because the search is k^n."""
    char = check_compatible(h, char)
    n = len(h.ground)
    if n > max_ground:
        raise ResourceCapError("oracle ground cap exceeded: %d > %d" % (n, max_ground))
    cap_colors = max_colors if max_colors is not None else max(n, 1)
    if k > cap_colors:
        raise ResourceCapError("oracle color cap exceeded: %d > %d" % (k, cap_colors))
    out = []
    for values in product(range(1, k + 1), repeat=n):
        f = dict(zip(h.ground, values))
        if proper_coloring(h, char, f):
            out.append(values)
    return out


def colorings_by_composition(colorings, ground):
    """Group color tuples by their level-set set composition."""
    ground = tuple(sorted(ground))
    out = Counter()
    for values in colorings:
        out[level_set_composition(dict(zip(ground, values)), ground)] += 1
    return dict(out)


def colorings_by_type(colorings, ground):
    """Group color tuples by monomial type (composition of the degree)."""
    by_comp = colorings_by_composition(colorings, ground)
    out = Counter()
    for comp, cnt in by_comp.items():
        out[type_of(comp)] += cnt
    return dict(out)


def fixed_coloring_counts(colorings, group):
    """Class function counting colorings fixed by each group element."""
    ground = group.ground
    by_element = {}
    for g in group.elements:
        cnt = 0
        for values in colorings:
            f = dict(zip(ground, values))
            if all(f[g(x)] == f[x] for x in ground):
                cnt += 1
        by_element[g] = cnt
    return ClassFunction.from_element_values(group, by_element)


# ---------------------------------------------------------------------------
# f-vector inequalities


def verify_flawless(p):
    """Check the f-vector inequalities of a polynomial.

    For a ClassPolynomial the comparisons run in the effective order on
    class functions (abelian groups only); for a plain integer vector
    they are numeric.  Returns a report dict with one entry per
    inequality, each carrying pass/fail and a witness on failure."""
    if isinstance(p, ClassPolynomial):
        return _flawless_report(
            p.degree, p.fvec,
            lambda a, b: leq_char(a, b)[0],
            lambda f, c: f.scale(c),
            lambda f: [str(v) for v in f.values])
    fvec = list(p)
    return _flawless_report(
        len(fvec) - 1, fvec,
        lambda a, b: a <= b,
        lambda f, c: f * c,
        lambda f: f)


def _flawless_report(d, fvec, le, scale, show):
    zero = scale(fvec[0], 0)
    checks = []

    def record(name, i, lhs, rhs):
        ok = le(lhs, rhs)
        entry = {"name": name, "i": i, "ok": ok}
        if not ok:
            entry["witness"] = {"lhs": show(lhs), "rhs": show(rhs)}
        checks.append(entry)

    for i in range(0, d + 1):
        if 2 * i <= d - 1:
            record("rising", i, fvec[i], fvec[i + 1])
    for i in range(0, d + 1):
        if 2 * i <= d:
            record("mirror", i, fvec[i], fvec[d - i])
    padded = list(fvec) + [zero]
    for i in range(0, d + 1):
        record("edge", i, scale(padded[i], d - i), scale(padded[i + 1], i))
    return {"ok": all(c["ok"] for c in checks), "inequalities": checks}
