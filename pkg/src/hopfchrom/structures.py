"""The eight supported structure kinds and their splitting calculus.

Each kind carries a ground set of string labels and knows how to restrict
to a subset and contract by one, with a possibly-zero splitting rule:
coproduct(h, S) returns either the pair (h restricted to S, h contracted
by S) or the ZERO sentinel when the split vanishes (posets and double
posets need S to be a down-closed set, mixed graphs forbid arcs pointing
from the complement into S).  Hypergraphs and point collections
(generalized permutohedra) do not expose restrict/contract here; their
properness predicate is stated directly on whole set compositions.

A character assigns 0 or 1 to a structure, multiplicatively over blocks.
Supported names and the kinds they apply to:

    zeta             graph poset matroid mixed_graph double_poset simplicial_complex
    chromatic        graph poset matroid
    strong_mixed     mixed_graph
    weak_mixed       mixed_graph
    inversion_free   double_poset
    unique_local_max hypergraph
    dim_bound(s)     simplicial_complex
    vertex_generic   gen_permutohedron

proper_composition decides whether a set composition is proper (peeling
blocks left to right through nonzero splits, the character equal to 1 on
every restricted block), and proper_coloring gives the equivalent direct
test on colorings: a coloring is proper exactly when its level-set
composition is.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations

from .compositions import SetComposition
from .errors import DomainError, ResourceCapError
from .groups import Permutation


class _ZeroSplit:
    """Sentinel for a vanishing split."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ZERO"


ZERO = _ZeroSplit()


def _norm_ground(labels):
    ground = tuple(sorted(labels))
    if len(set(ground)) != len(ground):
        raise DomainError("ground set has repeated labels")
    if not ground:
        raise DomainError("ground set must be nonempty")
    return ground


@dataclass(frozen=True)
class Graph:
    kind = "graph"
    ground: tuple
    edges: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        edges = frozenset(frozenset(e) for e in self.edges)
        object.__setattr__(self, "edges", edges)
        for e in edges:
            if len(e) != 2 or not e <= set(self.ground):
                raise DomainError("bad edge %r" % (sorted(e),))


@dataclass(frozen=True)
class Poset:
    """Strict order relation, stored transitively closed."""

    kind = "poset"
    ground: tuple
    less: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        less = frozenset(tuple(p) for p in self.less)
        object.__setattr__(self, "less", less)
        gset = set(self.ground)
        for a, b in less:
            if a not in gset or b not in gset or a == b:
                raise DomainError("bad order pair %r" % ((a, b),))
        for a, b in less:
            if (b, a) in less:
                raise DomainError("order relation contains a cycle through %r, %r" % (a, b))
            for c, d in less:
                if b == c and (a, d) not in less:
                    raise DomainError("order relation is not transitively closed at %r" % ((a, d),))


def make_poset(ground, relations):
    """Build a poset from arbitrary strict relations (e.g. cover pairs),
    taking the transitive closure and rejecting cycles."""
    ground = _norm_ground(ground)
    less = {tuple(p) for p in relations}
    changed = True
    while changed:
        changed = False
        for a, b in list(less):
            for c, d in list(less):
                if b == c and (a, d) not in less:
                    less.add((a, d))
                    changed = True
    for a, b in less:
        if a == b or (b, a) in less:
            raise DomainError("relations contain a cycle through %r" % (a,))
    return Poset(ground, frozenset(less))


@dataclass(frozen=True)
class Matroid:
    kind = "matroid"
    ground: tuple
    bases: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        bases = frozenset(frozenset(b) for b in self.bases)
        object.__setattr__(self, "bases", bases)
        if not bases:
            raise DomainError("a matroid needs at least one basis")
        sizes = {len(b) for b in bases}
        if len(sizes) != 1:
            raise DomainError("bases must all have the same size, got sizes %r" % (sorted(sizes),))
        gset = set(self.ground)
        for b in bases:
            if not b <= gset:
                raise DomainError("basis %r is not a subset of the ground set" % (sorted(b),))
        if len(self.ground) <= 10:
            for A in bases:
                for B in bases:
                    for a in A - B:
                        if not any((A - {a}) | {b} in bases for b in B - A):
                            raise DomainError(
                                "basis exchange fails for %r, %r at %r"
                                % (sorted(A), sorted(B), a))

    @property
    def rank(self):
        return len(next(iter(self.bases)))


@dataclass(frozen=True)
class MixedGraph:
    """Undirected edges plus directed arcs (u, v), read as u before v:
    a proper coloring needs f(u) <= f(v), strictly so for the strong rule."""

    kind = "mixed_graph"
    ground: tuple
    undirected: frozenset
    directed: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        und = frozenset(frozenset(e) for e in self.undirected)
        arcs = frozenset(tuple(a) for a in self.directed)
        object.__setattr__(self, "undirected", und)
        object.__setattr__(self, "directed", arcs)
        gset = set(self.ground)
        for e in und:
            if len(e) != 2 or not e <= gset:
                raise DomainError("bad undirected edge %r" % (sorted(e),))
        for u, v in arcs:
            if u == v or u not in gset or v not in gset:
                raise DomainError("bad arc %r" % ((u, v),))
        # arcs must be acyclic for any proper coloring to exist at all
        succ = {x: set() for x in gset}
        for u, v in arcs:
            succ[u].add(v)
        seen, done = set(), set()

        def visit(x):
            if x in done:
                return
            if x in seen:
                raise DomainError("directed part contains a cycle through %r" % (x,))
            seen.add(x)
            for y in succ[x]:
                visit(y)
            done.add(x)

        for x in gset:
            visit(x)


@dataclass(frozen=True)
class DoublePoset:
    """Two strict orders on one ground set, both stored closed."""

    kind = "double_poset"
    ground: tuple
    less1: frozenset
    less2: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        for attr in ("less1", "less2"):
            rel = frozenset(tuple(p) for p in getattr(self, attr))
            object.__setattr__(self, attr, rel)
            Poset(self.ground, rel)  # validates closure and acyclicity


def make_double_poset(ground, relations1, relations2):
    p1 = make_poset(ground, relations1)
    p2 = make_poset(ground, relations2)
    return DoublePoset(p1.ground, p1.less, p2.less)


@dataclass(frozen=True)
class Hypergraph:
    """Edge multiset; edges may repeat and have any size >= 1."""

    kind = "hypergraph"
    ground: tuple
    edges: tuple

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        edges = tuple(sorted(tuple(sorted(set(e))) for e in self.edges))
        object.__setattr__(self, "edges", edges)
        gset = set(self.ground)
        for e in edges:
            if len(e) == 0 or not set(e) <= gset:
                raise DomainError("bad hyperedge %r" % (e,))


@dataclass(frozen=True)
class SimplicialComplex:
    """Faces closed under taking subsets; the empty face is always present."""

    kind = "simplicial_complex"
    ground: tuple
    faces: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        faces = set(frozenset(f) for f in self.faces)
        closed = set()
        for f in faces:
            if not f <= set(self.ground):
                raise DomainError("face %r is not a subset of the ground set" % (sorted(f),))
            for k in range(len(f) + 1):
                closed.update(frozenset(c) for c in combinations(sorted(f), k))
        closed.add(frozenset())
        object.__setattr__(self, "faces", frozenset(closed))


@dataclass(frozen=True)
class PointCollection:
    """Finitely many exact rational points indexed by the ground set,
    all on a common hyperplane sum(x) = const in the intended use.
    Coordinates are stored in sorted-label order; duplicates collapse."""

    kind = "gen_permutohedron"
    ground: tuple
    points: tuple

    def __post_init__(self):
        object.__setattr__(self, "ground", _norm_ground(self.ground))
        pts = set()
        for p in self.points:
            if len(p) != len(self.ground):
                raise DomainError("point %r has wrong dimension" % (p,))
            pts.add(tuple(Fraction(c) for c in p))
        if not pts:
            raise DomainError("need at least one point")
        object.__setattr__(self, "points", tuple(sorted(pts)))


KIND_CLASSES = {
    "graph": Graph,
    "poset": Poset,
    "matroid": Matroid,
    "mixed_graph": MixedGraph,
    "double_poset": DoublePoset,
    "hypergraph": Hypergraph,
    "simplicial_complex": SimplicialComplex,
    "gen_permutohedron": PointCollection,
}


@dataclass(frozen=True)
class CharacterSpec:
    name: str
    s: int = None

    def __post_init__(self):
        if self.name not in CHARACTER_KINDS:
            raise DomainError("unknown character %r" % (self.name,))
        if self.name == "dim_bound":
            if not isinstance(self.s, int) or self.s < 1:
                raise DomainError("dim_bound needs an integer bound s >= 1")
        elif self.s is not None:
            raise DomainError("character %r takes no parameter" % (self.name,))

    def __str__(self):
        if self.name == "dim_bound":
            return "dim_bound(%d)" % self.s
        return self.name

    @classmethod
    def parse(cls, obj):
        if isinstance(obj, cls):
            return obj
        if isinstance(obj, dict):
            return cls(obj.get("name"), obj.get("s"))
        if isinstance(obj, str):
            text = obj.strip()
            if text.startswith("dim_bound(") and text.endswith(")"):
                try:
                    return cls("dim_bound", int(text[len("dim_bound("):-1]))
                except ValueError:
                    raise DomainError("cannot parse %r" % (obj,))
            return cls(text)
        raise DomainError("cannot parse a character from %r" % (obj,))


CHARACTER_KINDS = {
    "zeta": {"graph", "poset", "matroid", "mixed_graph", "double_poset", "simplicial_complex"},
    "chromatic": {"graph", "poset", "matroid"},
    "strong_mixed": {"mixed_graph"},
    "weak_mixed": {"mixed_graph"},
    "inversion_free": {"double_poset"},
    "unique_local_max": {"hypergraph"},
    "dim_bound": {"simplicial_complex"},
    "vertex_generic": {"gen_permutohedron"},
}

DIRECT_ONLY_KINDS = {"hypergraph", "gen_permutohedron"}


def check_compatible(h, char):
    char = CharacterSpec.parse(char)
    if h.kind not in CHARACTER_KINDS[char.name]:
        raise DomainError("character %s does not apply to kind %s" % (char, h.kind))
    return char


# ---------------------------------------------------------------------------
# restriction / contraction / splitting


def restrict(h, S):
    """The induced structure on S (a nonempty subset of the ground set)."""
    S = frozenset(S)
    _check_subset(h, S)
    if h.kind == "graph":
        return Graph(tuple(S), frozenset(e for e in h.edges if e <= S))
    if h.kind == "poset":
        return Poset(tuple(S), frozenset(p for p in h.less if p[0] in S and p[1] in S))
    if h.kind == "matroid":
        ind = _independents_within(h, S)
        top = max(len(i) for i in ind)
        return Matroid(tuple(S), frozenset(i for i in ind if len(i) == top))
    if h.kind == "mixed_graph":
        return MixedGraph(tuple(S),
                          frozenset(e for e in h.undirected if e <= S),
                          frozenset(a for a in h.directed if a[0] in S and a[1] in S))
    if h.kind == "double_poset":
        return DoublePoset(tuple(S),
                           frozenset(p for p in h.less1 if p[0] in S and p[1] in S),
                           frozenset(p for p in h.less2 if p[0] in S and p[1] in S))
    if h.kind == "simplicial_complex":
        return SimplicialComplex(tuple(S), frozenset(f for f in h.faces if f <= S))
    raise DomainError("kind %s has no restriction; its properness test is direct" % h.kind)


def contract(h, S):
    """The structure induced on the complement of S after splitting off S."""
    S = frozenset(S)
    _check_subset(h, S)
    rest = frozenset(h.ground) - S
    if not rest:
        raise DomainError("cannot contract the full ground set")
    if h.kind == "matroid":
        b_s = _canonical_max_independent(h, S)
        target = h.rank - len(b_s)
        new_bases = frozenset(
            frozenset(i) for i in combinations(sorted(rest), target)
            if _independent(h, frozenset(i) | b_s))
        return Matroid(tuple(rest), new_bases)
    if h.kind in ("graph", "poset", "mixed_graph", "double_poset", "simplicial_complex"):
        return restrict(h, rest)
    raise DomainError("kind %s has no contraction; its properness test is direct" % h.kind)


def split_is_zero(h, S):
    """Whether the split of h along (S, complement) vanishes."""
    S = frozenset(S)
    _check_subset(h, S)
    rest = frozenset(h.ground) - S
    if h.kind in ("graph", "matroid", "simplicial_complex"):
        return False
    if h.kind == "poset":
        return any(a in rest and b in S for a, b in h.less)
    if h.kind == "double_poset":
        return any(a in rest and b in S for a, b in h.less1)
    if h.kind == "mixed_graph":
        return any(u in rest and v in S for u, v in h.directed)
    raise DomainError("kind %s has no splitting; its properness test is direct" % h.kind)


def coproduct(h, S):
    """(restrict(h, S), contract(h, S)), or ZERO when the split vanishes."""
    if split_is_zero(h, S):
        return ZERO
    return restrict(h, S), contract(h, S)


def _check_subset(h, S):
    if not S:
        raise DomainError("subset must be nonempty")
    if not S <= set(h.ground):
        raise DomainError("%r is not a subset of the ground set" % (sorted(S),))


def _independent(m, I):
    return any(I <= b for b in m.bases)


def _independents_within(m, S):
    out = []
    S = sorted(S)
    for k in range(len(S) + 1):
        for c in combinations(S, k):
            if _independent(m, frozenset(c)):
                out.append(frozenset(c))
    return out


def _canonical_max_independent(m, S):
    """Lexicographically first maximum independent subset of S."""
    ind = _independents_within(m, S)
    top = max(len(i) for i in ind)
    return min((i for i in ind if len(i) == top), key=lambda i: tuple(sorted(i)))


# ---------------------------------------------------------------------------
# character values


def char_value(h, char):
    """0/1 value of a character on a whole structure."""
    char = check_compatible(h, char)
    name = char.name
    if name == "zeta":
        return 1
    if name == "chromatic":
        if h.kind == "graph":
            return 1 if not h.edges else 0
        if h.kind == "poset":
            return 1 if not h.less else 0
        if h.kind == "matroid":
            return 1 if len(h.bases) == 1 else 0
    if name == "strong_mixed":
        return 1 if not h.undirected and not h.directed else 0
    if name == "weak_mixed":
        return 1 if not h.undirected else 0
    if name == "inversion_free":
        bad = any((a, b) in h.less1 and (b, a) in h.less2 for a, b in h.less1)
        return 0 if bad else 1
    if name == "unique_local_max":
        return 1 if all(len(e) == 1 for e in h.edges) else 0
    if name == "dim_bound":
        return 1 if all(len(f) <= char.s for f in h.faces) else 0
    if name == "vertex_generic":
        return 1 if len(h.points) == 1 else 0
    raise AssertionError("unhandled character %s on kind %s" % (char, h.kind))


# ---------------------------------------------------------------------------
# properness of set compositions


def proper_composition(h, char, comp):
    """1 if the set composition is proper for (h, char), else 0.

    For splitting kinds this peels blocks left to right: every split must
    be nonzero and the character must equal 1 on every restricted block.
    Hypergraphs and point collections get their direct tests.
    """
    char = check_compatible(h, char)
    if comp.ground != h.ground:
        raise DomainError("set composition is not a composition of the ground set")
    if h.kind == "hypergraph":
        return _hypergraph_proper(h, comp)
    if h.kind == "gen_permutohedron":
        return _points_proper(h, comp)
    cur = h
    for i, block in enumerate(comp.blocks):
        S = frozenset(block)
        last = i == len(comp.blocks) - 1
        if not last and split_is_zero(cur, S):
            return 0
        if char_value(restrict(cur, S), char) == 0:
            return 0
        if not last:
            cur = contract(cur, S)
    return 1


def _hypergraph_proper(h, comp):
    """Every edge must meet its last block in exactly one element."""
    position = {}
    for i, block in enumerate(comp.blocks):
        for x in block:
            position[x] = i
    for e in h.edges:
        top = max(position[x] for x in e)
        if sum(1 for x in e if position[x] == top) != 1:
            return 0
    return 1


def _points_proper(h, comp):
    """The block-index weighting must pick out a unique maximizing point."""
    weight = {}
    for i, block in enumerate(comp.blocks):
        for x in block:
            weight[x] = i + 1
    w = tuple(weight[x] for x in h.ground)
    return 1 if _unique_argmax(h.points, w) else 0


def _unique_argmax(points, w):
    best, count = None, 0
    for p in points:
        v = sum(c * wi for c, wi in zip(p, w))
        if best is None or v > best:
            best, count = v, 1
        elif v == best:
            count += 1
    return count == 1


# ---------------------------------------------------------------------------
# colorings


def level_set_composition(f, ground):
    """Level sets of a coloring, ordered by increasing color."""
    ground = tuple(sorted(ground))
    by_color = {}
    for x in ground:
        if x not in f:
            raise DomainError("coloring misses label %r" % (x,))
        c = f[x]
        by_color.setdefault(c, []).append(x)
    blocks = tuple(tuple(by_color[c]) for c in sorted(by_color))
    return SetComposition(blocks)


def proper_coloring(h, char, f):
    """Direct properness test of a coloring f (a map label -> integer).

    Equivalent to proper_composition on the level-set composition; stated
    independently per kind and character so the two routes can be checked
    against each other.
    """
    char = check_compatible(h, char)
    name = char.name
    if h.kind == "graph":
        if name == "zeta":
            return True
        return all(f[a] != f[b] for e in h.edges for a, b in [tuple(e)])
    if h.kind == "poset":
        if name == "zeta":
            return all(f[a] <= f[b] for a, b in h.less)
        return all(f[a] < f[b] for a, b in h.less)
    if h.kind == "matroid":
        if name == "zeta":
            return True
        return _unique_min_basis(h, f)
    if h.kind == "mixed_graph":
        if name == "zeta":
            return all(f[u] <= f[v] for u, v in h.directed)
        ok_und = all(f[a] != f[b] for e in h.undirected for a, b in [tuple(e)])
        if name == "weak_mixed":
            return ok_und and all(f[u] <= f[v] for u, v in h.directed)
        return ok_und and all(f[u] < f[v] for u, v in h.directed)
    if h.kind == "double_poset":
        ok1 = all(f[a] <= f[b] for a, b in h.less1)
        if name == "zeta":
            return ok1
        return ok1 and all(
            not (f[a] == f[b] and (b, a) in h.less2) for a, b in h.less1)
    if h.kind == "hypergraph":
        for e in h.edges:
            top = max(f[x] for x in e)
            if sum(1 for x in e if f[x] == top) != 1:
                return False
        return True
    if h.kind == "simplicial_complex":
        if name == "zeta":
            return True
        for face in h.faces:
            if len(face) > char.s and len({f[x] for x in face}) == 1:
                return False
        return True
    if h.kind == "gen_permutohedron":
        w = tuple(f[x] for x in h.ground)
        return _unique_argmax(h.points, w)
    raise AssertionError("unhandled kind %s" % h.kind)


def _unique_min_basis(m, f):
    """Whether exactly one basis has minimum total weight under f."""
    best, count = None, 0
    for b in m.bases:
        v = sum(f[x] for x in b)
        if best is None or v < best:
            best, count = v, 1
        elif v == best:
            count += 1
    return count == 1


# ---------------------------------------------------------------------------
# automorphisms


def automorphism_check(h, g):
    """Whether a permutation of the ground set preserves the structure."""
    if tuple(sorted(g.ground)) != h.ground:
        raise DomainError("permutation acts on a different ground set")
    if h.kind == "graph":
        return frozenset(frozenset(g(x) for x in e) for e in h.edges) == h.edges
    if h.kind == "poset":
        return frozenset((g(a), g(b)) for a, b in h.less) == h.less
    if h.kind == "matroid":
        return frozenset(frozenset(g(x) for x in b) for b in h.bases) == h.bases
    if h.kind == "mixed_graph":
        return (frozenset(frozenset(g(x) for x in e) for e in h.undirected) == h.undirected
                and frozenset((g(u), g(v)) for u, v in h.directed) == h.directed)
    if h.kind == "double_poset":
        return (frozenset((g(a), g(b)) for a, b in h.less1) == h.less1
                and frozenset((g(a), g(b)) for a, b in h.less2) == h.less2)
    if h.kind == "hypergraph":
        mapped = sorted(tuple(sorted(g(x) for x in e)) for e in h.edges)
        return tuple(mapped) == h.edges
    if h.kind == "simplicial_complex":
        return frozenset(frozenset(g(x) for x in f) for f in h.faces) == h.faces
    if h.kind == "gen_permutohedron":
        idx = {x: i for i, x in enumerate(h.ground)}
        mapped = set()
        for p in h.points:
            q = [None] * len(p)
            for x, c in zip(h.ground, p):
                q[idx[g(x)]] = c
            mapped.add(tuple(q))
        return mapped == set(h.points)
    raise AssertionError("unhandled kind %s" % h.kind)


def automorphisms(h, cap=7):
    """All structure automorphisms, by filtering every permutation of the
    ground set; capped because the search is factorial."""
    n = len(h.ground)
    if n > cap:
        raise ResourceCapError("automorphism search is factorial; %d > cap %d" % (n, cap))
    out = []
    for images in permutations(h.ground):
        g = Permutation(h.ground, images)
        if automorphism_check(h, g):
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# a classical family of point collections


def loday_associahedron(n):
    """The associahedron on ground labels "1", ..., "n", realized as the
    Minkowski sum over intervals [i, j] of the simplex on coordinates
    i..j; the stored points are all vertex-combination sums, so ties in a
    weighting detect positive-dimensional optimal faces exactly."""
    if not 1 <= n <= 9:
        raise DomainError("need 1 <= n <= 9 (single-digit labels keep sorted order numeric)")
    ground = tuple(str(i) for i in range(1, n + 1))
    sums = {tuple(0 for _ in range(n))}
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            sums = {tuple(p[t] + (1 if t == k - 1 else 0) for t in range(n))
                    for p in sums for k in range(i, j + 1)}
    return PointCollection(ground, tuple(tuple(Fraction(c) for c in p) for p in sums))
