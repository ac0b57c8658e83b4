"""Exact simplicial homology and contractibility certificates.

Integral homology comes from Smith normal form over unbounded ints; field
homology (rationals, prime fields) from exact elimination.  Reduced homology
uses the augmented chain complex, so the empty complex has rank one in
degree -1; that convention makes the suspension-shift bookkeeping of the
analyzer hold verbatim, empty obstructions included.

"Contractible" is always a sufficient certificate here: a central simplex or
a collapse sequence down to a vertex.  Trivial homology without a
certificate is reported as acyclic, never as contractible.
"""

from itertools import combinations

from . import linalg
from .complexes import Complex, make_simplex
from .errors import (
    EmptyComplex,
    EnumerationRefused,
    InvalidInput,
    NotASubcomplex,
)

__all__ = [
    "BoundaryMatrix",
    "ContractibilityCertificate",
    "HomologyProfile",
    "InducedMap",
    "boundary_matrix",
    "central_vertex",
    "contractibility_certificate",
    "homology",
    "induced_map",
    "is_subcomplex",
    "relative_homology",
    "smith_normal_form",
]

smith_normal_form = linalg.smith_invariants


# ----------------------------------------------------------------- chains


def incidence(rows, cols):
    """Alternating-sign incidence matrix between simplex lists.

    Faces absent from ``rows`` contribute nothing, which is exactly the
    boundary of a quotient (relative) chain complex.  The empty simplex
    ``()`` may appear as a row to augment the complex.
    """
    index = {s: i for i, s in enumerate(rows)}
    m = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for i in range(len(s)):
            r = index.get(s[:i] + s[i + 1 :])
            if r is not None:
                m[r][j] += 1 if i % 2 == 0 else -1
    return m


def simplex_levels(complex_, need):
    """Simplices bucketed by dimension 0..need, each level lexicographic.

    A flag complex refuses when simplices beyond its cap are needed; when
    the level at the cap is already empty, downward closure guarantees all
    higher levels are empty too and they are padded in.
    """
    cap = complex_.dim_cap if complex_.is_flag else None
    top = need if cap is None else min(need, cap)
    buckets = [[] for _ in range(top + 1)]
    for s in complex_.simplices(max_dim=top):
        buckets[len(s) - 1].append(s)
    if cap is not None and need > cap:
        if buckets[cap] and complex_.has_simplices_above_cap():
            raise EnumerationRefused(
                f"need simplices of dimension {need}, flag complex capped at {cap}"
            )
        buckets.extend([] for _ in range(need - cap))
    return buckets


class BoundaryMatrix:
    """Boundary operator of one degree over the deterministic simplex order."""

    __slots__ = ("degree", "rows", "cols", "entries")

    def __init__(self, degree, rows, cols, entries):
        self.degree = degree
        self.rows = rows
        self.cols = cols
        self.entries = entries

    def __repr__(self):
        return f"BoundaryMatrix(degree={self.degree}, {len(self.rows)}x{len(self.cols)})"


def boundary_matrix(complex_, n, dim_cap=None):
    """The degree-n boundary matrix; rows are (n-1)-simplices."""
    if n < 1:
        raise InvalidInput("boundary degree must be at least 1")
    if complex_.is_flag:
        cap = complex_.dim_cap if dim_cap is None else min(dim_cap, complex_.dim_cap)
        if n > cap:
            raise EnumerationRefused(f"degree {n} above the cap {cap}")
    rows = complex_.n_simplices(n - 1)
    cols = complex_.n_simplices(n)
    return BoundaryMatrix(n, rows, cols, incidence(rows, cols))


# ----------------------------------------------------------------- profiles


class HomologyProfile:
    """Per-degree Betti numbers, plus torsion prime powers over the integers."""

    __slots__ = ("coeffs", "reduced", "degrees", "betti", "torsion")

    def __init__(self, coeffs, reduced, degrees, betti, torsion=None):
        self.coeffs = coeffs
        self.reduced = reduced
        self.degrees = tuple(degrees)
        self.betti = dict(betti)
        self.torsion = {d: tuple(t) for d, t in (torsion or {}).items() if t}

    def betti_vector(self, lo, hi):
        return tuple(self.betti.get(d, 0) for d in range(lo, hi + 1))

    def torsion_at(self, d):
        return self.torsion.get(d, ())

    def is_trivial(self):
        return all(v == 0 for v in self.betti.values()) and not self.torsion

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return (
            self.coeffs == other.coeffs
            and self.reduced == other.reduced
            and self.degrees == other.degrees
            and self.betti == other.betti
            and self.torsion == other.torsion
        )

    def __repr__(self):
        lo, hi = (self.degrees[0], self.degrees[-1]) if self.degrees else (0, -1)
        return (
            f"HomologyProfile({self.coeffs}, reduced={self.reduced}, "
            f"betti={list(self.betti_vector(lo, hi))})"
        )

    def to_dict(self):
        return {
            "coeffs": self.coeffs,
            "reduced": self.reduced,
            "degrees": list(self.degrees),
            "betti": {str(d): b for d, b in sorted(self.betti.items())},
            "torsion": {str(d): list(t) for d, t in sorted(self.torsion.items())},
        }

    @classmethod
    def from_dict(cls, data):
        return cls(
            data["coeffs"],
            data["reduced"],
            data["degrees"],
            {int(d): b for d, b in data["betti"].items()},
            {int(d): tuple(t) for d, t in data.get("torsion", {}).items()},
        )


def _coeff_kind(coeffs):
    if coeffs == "z":
        return "z", None
    return "field", linalg.field_of(coeffs)


def homology(complex_, coeffs="z", max_deg=None, reduced=True):
    """Homology profile of a complex up to ``max_deg``.

    Integral coefficients ("z") also report torsion; field coefficients
    ("q", "zp:<p>") report ranks only.
    """
    if max_deg is None:
        max_deg = max(complex_.dim(), 0)
    levels = simplex_levels(complex_, max_deg + 1)
    bases = {n: levels[n] for n in range(max_deg + 2)}
    lo = -1 if reduced else 0
    if reduced:
        bases[-1] = [()]
    kind, field = _coeff_kind(coeffs)
    ranks = {}
    invariants = {}
    for n in range(lo + 1, max_deg + 2):
        mat = incidence(bases[n - 1], bases[n])
        if kind == "z":
            inv = linalg.smith_invariants(mat)
            invariants[n] = inv
            ranks[n] = len(inv)
        else:
            ranks[n] = linalg.rank(mat, field)
    betti = {}
    torsion = {}
    for n in range(lo, max_deg + 1):
        betti[n] = len(bases[n]) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        if kind == "z":
            powers = []
            for d in invariants.get(n + 1, ()):
                if d > 1:
                    powers.extend(linalg.prime_power_factors(d))
            if powers:
                torsion[n] = sorted(powers)
    return HomologyProfile(coeffs, reduced, range(lo, max_deg + 1), betti, torsion)


def is_subcomplex(sub, ambient):
    """True when every simplex of ``sub`` belongs to ``ambient``."""
    if sub.is_flag and ambient.is_flag:
        return set(sub.vertices) <= set(ambient.vertices) and all(
            e in ambient for e in sub.edges()
        )
    for s in sub.to_explicit(full=True).simplices():
        if s not in ambient:
            return False
    return True


def relative_homology(complex_, sub, coeffs="z", max_deg=None):
    """Homology of the quotient chain complex of a pair.

    Both sides are taken augmented, so an empty subcomplex yields the
    unreduced homology of the ambient complex; a nonempty subcomplex yields
    the usual relative homology.
    """
    if not is_subcomplex(sub, complex_):
        raise NotASubcomplex("second complex is not a subcomplex of the first")
    if max_deg is None:
        max_deg = max(complex_.dim(), 0)
    levels = simplex_levels(complex_, max_deg + 1)
    bases = {
        n: [s for s in levels[n] if s not in sub] for n in range(max_deg + 2)
    }
    bases[-1] = []
    kind, field = _coeff_kind(coeffs)
    ranks = {}
    invariants = {}
    for n in range(0, max_deg + 2):
        mat = incidence(bases[n - 1], bases[n])
        if kind == "z":
            inv = linalg.smith_invariants(mat)
            invariants[n] = inv
            ranks[n] = len(inv)
        else:
            ranks[n] = linalg.rank(mat, field)
    betti = {}
    torsion = {}
    for n in range(0, max_deg + 1):
        betti[n] = len(bases[n]) - ranks.get(n, 0) - ranks.get(n + 1, 0)
        if kind == "z":
            powers = []
            for d in invariants.get(n + 1, ()):
                if d > 1:
                    powers.extend(linalg.prime_power_factors(d))
            if powers:
                torsion[n] = sorted(powers)
    return HomologyProfile(coeffs, False, range(0, max_deg + 1), betti, torsion)


# -------------------------------------------------------------- induced maps


class InducedMap:
    """A map on field homology induced by a subcomplex inclusion."""

    __slots__ = ("field", "degree", "matrix", "rank", "dim_source", "dim_target")

    def __init__(self, field, degree, matrix, rank, dim_source, dim_target):
        self.field = field
        self.degree = degree
        self.matrix = matrix
        self.rank = rank
        self.dim_source = dim_source
        self.dim_target = dim_target

    @property
    def injective(self):
        return self.rank == self.dim_source

    @property
    def surjective(self):
        return self.rank == self.dim_target

    @property
    def iso(self):
        return self.injective and self.surjective

    def __repr__(self):
        return (
            f"InducedMap({self.field}, degree={self.degree}, rank={self.rank}, "
            f"{self.dim_source}->{self.dim_target})"
        )


def _homology_reps(bases, deg, field):
    """Boundary basis and homology representatives of degree ``deg`` cycles.

    Returns (span over boundaries, representative cycle vectors); vectors are
    coordinates over ``bases[deg]``.
    """
    d_n = incidence(bases[deg - 1], bases[deg])
    cycles = linalg.kernel_basis(d_n, field, ncols=len(bases[deg]))
    d_up = incidence(bases[deg], bases[deg + 1])
    span = linalg.Span(field)
    boundary_cols = []
    for j in range(len(bases[deg + 1])):
        col = [field.of(d_up[i][j]) for i in range(len(bases[deg]))]
        if span.add(col):
            boundary_cols.append(col)
    reps = []
    for z in cycles:
        if span.add(z):
            reps.append(z)
    return boundary_cols, reps


def induced_map(sub, ambient, degree, coeffs="q", reduced=False):
    """The map on homology of one degree induced by an inclusion.

    Field coefficients only.  With ``reduced`` both complexes are augmented,
    which matters in degree 0 and for empty complexes in degree -1.
    """
    if not is_subcomplex(sub, ambient):
        raise NotASubcomplex("second complex is not a subcomplex of the first")
    field = linalg.field_of(coeffs)
    lo = -1 if reduced else 0
    if degree < lo:
        raise InvalidInput(f"degree {degree} below {lo}")
    need = degree + 1
    bases_l = {n: lvl for n, lvl in enumerate(simplex_levels(sub, need))}
    bases_k = {n: lvl for n, lvl in enumerate(simplex_levels(ambient, need))}
    for b in (bases_l, bases_k):
        b[-1] = [()] if reduced else []
        b.setdefault(-2, [])
    boundary_l, reps_l = _homology_reps(bases_l, degree, field)
    boundary_k, reps_k = _homology_reps(bases_k, degree, field)
    position = {s: i for i, s in enumerate(bases_k[degree])}
    mapped = []
    for rep in reps_l:
        vec = [field.zero] * len(bases_k[degree])
        for value, s in zip(rep, bases_l[degree]):
            if value != field.zero:
                vec[position[s]] = value
        mapped.append(vec)
    if reps_k or boundary_k:
        coords = linalg.solve_in_span(boundary_k + reps_k, mapped, field)
    else:
        coords = [[] for _ in mapped]
    nb = len(boundary_k)
    matrix = [
        [coords[j][nb + i] if coords[j] else field.zero for j in range(len(mapped))]
        for i in range(len(reps_k))
    ]
    rk = linalg.rank(matrix, field) if matrix and matrix[0] else 0
    return InducedMap(coeffs, degree, matrix, rk, len(reps_l), len(reps_k))


# --------------------------------------------------------------- certificates


class ContractibilityCertificate:
    """Sufficient evidence of contractibility: a central simplex or a
    collapse sequence ending at one vertex."""

    __slots__ = ("kind", "central", "collapses")

    CENTRAL = "central"
    COLLAPSE = "collapse"

    def __init__(self, kind, central=None, collapses=None):
        self.kind = kind
        self.central = central
        self.collapses = tuple(collapses) if collapses is not None else None

    def __repr__(self):
        if self.kind == self.CENTRAL:
            return f"ContractibilityCertificate(central={self.central})"
        return f"ContractibilityCertificate(collapses={len(self.collapses)})"


def central_vertex(complex_):
    """Smallest central vertex, or None.  Complete for cone detection: a
    complex has a central simplex exactly when it has a central vertex."""
    for v in complex_.vertices:
        if complex_.is_central((v,)):
            return v
    return None


def _greedy_collapse(simplices):
    """Greedy elementary collapses; returns the pair sequence or None."""
    current = set(simplices)
    seq = []
    while len(current) > 1:
        found = None
        for s in sorted(current, key=lambda t: (len(t), t)):
            cofaces = [
                t for t in current if len(t) > len(s) and set(s) < set(t)
            ]
            if len(cofaces) == 1:
                found = (s, cofaces[0])
                break
        if found is None:
            return None
        current.discard(found[0])
        current.discard(found[1])
        seq.append(found)
    return seq


def contractibility_certificate(complex_):
    """Search for a central vertex, then for a full collapse sequence.

    ``None`` is inconclusive, not a proof of non-contractibility.  A flag
    complex is fully materialized for the collapse search, so keep this to
    the small complexes (obstructions) it is meant for.
    """
    if complex_.is_empty:
        raise EmptyComplex("the empty complex has no contractibility certificate")
    v = central_vertex(complex_)
    if v is not None:
        return ContractibilityCertificate(ContractibilityCertificate.CENTRAL, central=(v,))
    seq = _greedy_collapse(complex_.to_explicit(full=True).simplices())
    if seq is not None:
        return ContractibilityCertificate(ContractibilityCertificate.COLLAPSE, collapses=seq)
    return None


def replay_collapses(complex_, collapses):
    """Replay a collapse sequence; returns the surviving simplices."""
    current = set(complex_.to_explicit(full=True).simplices())
    for s, t in collapses:
        cofaces = [u for u in current if len(u) > len(s) and set(s) < set(u)]
        if s not in current or cofaces != [t]:
            raise InvalidInput("collapse sequence does not replay")
        current.discard(s)
        current.discard(t)
    return current
