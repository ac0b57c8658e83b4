"""Finite abstract simplicial complexes over integer vertex ids.

A simplex is a strictly increasing tuple of vertex ids.  A complex carries
one of two backings:

* explicit: a frozenset of simplices, closed under nonempty subsets;
* flag: a graph (adjacency sets) whose cliques are the simplices, plus an
  enumeration cap ``dim_cap``.

Membership is exact for both backings (for a flag complex it is the
pairwise-edge test, at any dimension).  Enumeration of a flag complex never
materializes simplices above its cap; operations that would need to raise
:class:`~ripsdecomp.errors.EnumerationRefused` instead.  Complexes are
immutable after construction and safe to share between threads.

Vertex labels: user-facing labels are interned to dense integer ids at
ingestion.  A complex may carry an ``id -> label`` table; every derived
complex keeps the table of its parent.
"""

from itertools import combinations

from .errors import (
    CoverError,
    EnumerationRefused,
    InvalidInput,
    JoinOverlap,
    NotASimplex,
)

__all__ = [
    "Complex",
    "Cover",
    "PComplementItem",
    "STATUS_COLLAPSE",
    "STATUS_CONE",
    "STATUS_EMPTY",
    "STATUS_HOMOLOGY_ONLY",
    "cover_union",
    "enumerate_p_complement",
    "make_simplex",
]


def make_simplex(vertices):
    """Canonical simplex: nonempty, strictly increasing, duplicate-free."""
    vs = tuple(sorted(set(vertices)))
    if not vs:
        raise InvalidInput("a simplex needs at least one vertex")
    return vs


def _close_downward(simplices):
    closed = set()
    for s in simplices:
        for k in range(1, len(s) + 1):
            closed.update(combinations(s, k))
    return closed


class Complex:
    """Immutable finite abstract simplicial complex."""

    __slots__ = ("_simplices", "_adj", "_vertices", "dim_cap", "labels")

    def __init__(self, *, simplices=None, adj=None, vertices=(), dim_cap=None, labels=None):
        self._simplices = simplices          # frozenset of tuples, or None
        self._adj = adj                      # dict id -> frozenset of ids, or None
        self._vertices = tuple(sorted(vertices))
        self.dim_cap = dim_cap               # enumeration cap (flag only)
        self.labels = labels                 # optional dict id -> label

    # ---------------------------------------------------------------- build

    @classmethod
    def from_simplices(cls, simplices, labels=None):
        """Explicit complex from an already downward-closed family."""
        sset = frozenset(make_simplex(s) for s in simplices)
        for s in sset:
            if len(s) > 1:
                for face in combinations(s, len(s) - 1):
                    if face not in sset:
                        raise InvalidInput(f"not downward closed: missing {face}")
        vertices = {v for s in sset for v in s}
        return cls(simplices=sset, vertices=vertices, labels=labels)

    @classmethod
    def from_facets(cls, facets, labels=None):
        """Explicit complex generated by the given facets (downward closure)."""
        closed = _close_downward(make_simplex(f) for f in facets)
        vertices = {v for s in closed for v in s}
        return cls(simplices=frozenset(closed), vertices=vertices, labels=labels)

    @classmethod
    def flag(cls, vertices, edges, dim_cap, labels=None):
        """Flag (clique) complex of a graph, enumerable up to ``dim_cap``."""
        if dim_cap < 0:
            raise InvalidInput("dim_cap must be nonnegative")
        vset = set(vertices)
        adj = {v: set() for v in vset}
        for e in edges:
            pair = make_simplex(e)
            if len(pair) != 2:
                raise InvalidInput(f"not an edge: {e!r}")
            a, b = pair
            if a not in vset or b not in vset:
                raise InvalidInput(f"edge {e!r} uses unknown vertices")
            adj[a].add(b)
            adj[b].add(a)
        adj = {v: frozenset(nb) for v, nb in adj.items()}
        return cls(adj=adj, vertices=vset, dim_cap=dim_cap, labels=labels)

    @classmethod
    def simplex_on(cls, vertices, labels=None):
        """The standard simplex on a vertex set (empty set gives the empty complex)."""
        vs = sorted(set(vertices))
        if not vs:
            return cls.empty()
        return cls.flag(vs, combinations(vs, 2), dim_cap=len(vs) - 1, labels=labels)

    @classmethod
    def discrete(cls, vertices, labels=None):
        return cls.flag(set(vertices), (), dim_cap=0, labels=labels)

    @classmethod
    def empty(cls):
        return cls(simplices=frozenset(), vertices=())

    # ------------------------------------------------------------ structure

    @property
    def is_flag(self):
        return self._adj is not None

    @property
    def is_empty(self):
        return not self._vertices

    @property
    def vertices(self):
        return self._vertices

    def edges(self):
        """Sorted list of 1-simplices."""
        if self.is_flag:
            return sorted(
                (a, b) for a in self._adj for b in self._adj[a] if a < b
            )
        return sorted(s for s in self._simplices if len(s) == 2)

    def __contains__(self, sigma):
        try:
            s = make_simplex(sigma)
        except InvalidInput:
            return False
        if self.is_flag:
            if any(v not in self._adj for v in s):
                return False
            return all(b in self._adj[a] for a, b in combinations(s, 2))
        return s in self._simplices

    def _clique_levels(self, max_dim):
        """Cliques by dimension, lexicographic within a level.

        ``max_dim=None`` enumerates everything (bounded by the vertex count);
        enumeration stops early at the first empty level since downward
        closure makes all higher levels empty too.
        """
        levels = [[(v,) for v in self._vertices]]
        d = 0
        while levels[-1] and (max_dim is None or d < max_dim):
            nxt = []
            for c in levels[-1]:
                for v in sorted(self._adj[c[-1]]):
                    if v > c[-1] and all(v in self._adj[u] for u in c[:-1]):
                        nxt.append(c + (v,))
            levels.append(nxt)
            d += 1
        if not levels[-1]:
            levels.pop()
        return levels

    def simplices(self, max_dim=None):
        """All simplices of dimension <= max_dim, ordered by (dim, lex).

        For a flag complex the cap applies: ``max_dim=None`` means the cap
        itself, and ``max_dim`` above the cap is refused.
        """
        if self.is_flag:
            if max_dim is None:
                max_dim = self.dim_cap
            elif max_dim > self.dim_cap:
                raise EnumerationRefused(
                    f"flag complex capped at dimension {self.dim_cap}, asked for {max_dim}"
                )
            out = []
            for level in self._clique_levels(max_dim):
                out.extend(level)
            return out
        out = sorted(self._simplices, key=lambda s: (len(s), s))
        if max_dim is not None:
            out = [s for s in out if len(s) <= max_dim + 1]
        return out

    def n_simplices(self, n):
        """The n-dimensional simplices, lexicographically ordered."""
        if n < 0:
            return []
        if self.is_flag:
            if n > self.dim_cap:
                raise EnumerationRefused(
                    f"flag complex capped at dimension {self.dim_cap}, asked for {n}"
                )
            levels = self._clique_levels(n)
            return levels[n] if n < len(levels) else []
        return sorted(s for s in self._simplices if len(s) == n + 1)

    def dim(self):
        """Largest dimension with a simplex (-1 for the empty complex).

        For a flag complex this is the enumerated dimension, at most the cap.
        """
        if self.is_empty:
            return -1
        if self.is_flag:
            return len(self._clique_levels(self.dim_cap)) - 1
        return max(len(s) for s in self._simplices) - 1

    def has_simplices_above_cap(self):
        """True when a flag complex owns cliques it refuses to enumerate.

        Probes one level above the cap and stops at the first extension, so
        a clean answer costs no more than the enumeration already done.
        """
        if not self.is_flag:
            return False
        levels = self._clique_levels(self.dim_cap)
        if len(levels) - 1 < self.dim_cap or not levels[-1]:
            return False
        for c in levels[-1]:
            for v in self._adj[c[-1]]:
                if v > c[-1] and all(v in self._adj[u] for u in c[:-1]):
                    return True
        return False

    def _all_simplices(self):
        """Full enumeration, ignoring the cap.  Exponential for dense graphs;
        intended for the small complexes that certificate search sees."""
        if not self.is_flag:
            return self.simplices()
        out = []
        for level in self._clique_levels(None):
            out.extend(level)
        return out

    def to_explicit(self, full=False):
        """Explicit copy.  ``full=True`` ignores a flag complex's cap."""
        if not self.is_flag:
            return self
        simplices = self._all_simplices() if full else self.simplices()
        return Complex(
            simplices=frozenset(simplices), vertices=self._vertices, labels=self.labels
        )

    def __eq__(self, other):
        if not isinstance(other, Complex):
            return NotImplemented
        if self._vertices != other._vertices:
            return False
        if self.is_flag and other.is_flag:
            return self._adj == other._adj
        a = self if not self.is_flag else self.to_explicit(full=True)
        b = other if not other.is_flag else other.to_explicit(full=True)
        return a._simplices == b._simplices

    def __repr__(self):
        kind = f"flag(cap={self.dim_cap})" if self.is_flag else "explicit"
        return f"Complex({kind}, {len(self._vertices)} vertices)"

    # ------------------------------------------------------------ operations

    def restrict(self, subset):
        """Subcomplex of simplices contained in ``subset``."""
        keep = set(subset)
        vertices = [v for v in self._vertices if v in keep]
        if self.is_flag:
            adj = {v: self._adj[v] & frozenset(vertices) for v in vertices}
            return Complex(
                adj=adj, vertices=vertices, dim_cap=self.dim_cap, labels=self.labels
            )
        simplices = frozenset(s for s in self._simplices if keep.issuperset(s))
        return Complex(simplices=simplices, vertices=vertices, labels=self.labels)

    def _require_member(self, sigma):
        s = make_simplex(sigma)
        if s not in self:
            raise NotASimplex(f"{s} is not a simplex of this complex")
        return s

    def star(self, sigma):
        """All simplices whose union with ``sigma`` is still a simplex."""
        s = self._require_member(sigma)
        if self.is_flag:
            keep = [
                v
                for v in self._vertices
                if all(v == u or v in self._adj[u] for u in s)
            ]
            return self.restrict(keep)
        members = frozenset(
            mu for mu in self._simplices if make_simplex(mu + s) in self
        )
        vertices = {v for mu in members for v in mu}
        return Complex(simplices=members, vertices=vertices, labels=self.labels)

    def obstruction(self, sigma, subset):
        """Nonempty subsets of ``subset`` whose union with ``sigma`` is a simplex.

        Equals the star of ``sigma`` restricted to ``subset``; may be empty.
        """
        return self.star(sigma).restrict(subset)

    def is_central(self, tau):
        """True when the union of ``tau`` with every simplex stays a simplex."""
        t = self._require_member(tau)
        if self.is_flag:
            rest = set(self._vertices)
            return all(
                all(w == v or w in self._adj[v] for w in rest) for v in t
            )
        return all(make_simplex(s + t) in self for s in self._simplices)

    def skeleton(self, n):
        """All simplices of dimension at most ``n`` (an explicit complex)."""
        if n < 0:
            raise InvalidInput("skeleton degree must be nonnegative")
        return Complex(
            simplices=frozenset(self.simplices(max_dim=n)),
            vertices=self._vertices,
            labels=self.labels,
        )

    def join(self, other):
        """Join of two complexes with disjoint vertex sets."""
        if set(self._vertices) & set(other._vertices):
            raise JoinOverlap("join needs disjoint vertex sets")
        labels = None
        if self.labels or other.labels:
            labels = dict(self.labels or {})
            labels.update(other.labels or {})
        if self.is_flag and other.is_flag:
            adj = {}
            for v in self._vertices:
                adj[v] = self._adj[v] | frozenset(other._vertices)
            for v in other._vertices:
                adj[v] = other._adj[v] | frozenset(self._vertices)
            cap = self.dim_cap + other.dim_cap + 1
            return Complex(
                adj=adj,
                vertices=self._vertices + other._vertices,
                dim_cap=cap,
                labels=labels,
            )
        left = self.to_explicit(full=True)._simplices
        right = other.to_explicit(full=True)._simplices
        joined = set(left) | set(right)
        for s in left:
            for t in right:
                joined.add(make_simplex(s + t))
        return Complex(
            simplices=frozenset(joined),
            vertices=set(self._vertices) | set(other._vertices),
            labels=labels,
        )

    def union(self, other):
        """Union of two complexes (flag inputs are fully materialized)."""
        labels = None
        if self.labels or other.labels:
            labels = dict(other.labels or {})
            labels.update(self.labels or {})
        a = self.to_explicit(full=True)
        b = other.to_explicit(full=True)
        return Complex(
            simplices=a._simplices | b._simplices,
            vertices=set(self._vertices) | set(other._vertices),
            labels=labels,
        )

    def intersect(self, other):
        """Intersection of two complexes.  Flag meets flag stays flag."""
        labels = self.labels or other.labels
        common = sorted(set(self._vertices) & set(other._vertices))
        if self.is_flag and other.is_flag:
            adj = {
                v: self._adj[v] & other._adj[v] & frozenset(common) for v in common
            }
            return Complex(
                adj=adj,
                vertices=common,
                dim_cap=min(self.dim_cap, other.dim_cap),
                labels=labels,
            )
        if self.is_flag:
            return other.intersect(self)
        simplices = frozenset(s for s in self._simplices if s in other)
        vertices = {v for s in simplices for v in s}
        return Complex(simplices=simplices, vertices=vertices, labels=labels)

    def label_of(self, v):
        if self.labels and v in self.labels:
            return self.labels[v]
        return v

    def label_simplex(self, sigma):
        return tuple(self.label_of(v) for v in sigma)


class Cover:
    """A cover of a complex's vertex set by two subsets X and Y."""

    __slots__ = ("x", "y")

    def __init__(self, x, y):
        self.x = frozenset(x)
        self.y = frozenset(y)

    @property
    def a(self):
        return self.x & self.y

    def validate(self, complex_):
        vset = set(complex_.vertices)
        if not (self.x <= vset and self.y <= vset):
            raise CoverError("cover uses vertices the complex does not have")
        if self.x | self.y != vset:
            raise CoverError("cover must use every vertex of the complex")

    def __repr__(self):
        return f"Cover(x={sorted(self.x)}, y={sorted(self.y)})"


def cover_union(complex_, cover):
    """The union of the restrictions to the two sides of a cover.

    For a flag complex the union is again flag on the union of the two
    restricted edge sets: a clique of that graph cannot meet both sides
    outside the intersection, so it lies inside one side entirely.
    """
    kx = complex_.restrict(cover.x)
    ky = complex_.restrict(cover.y)
    if complex_.is_flag:
        edges = set(kx.edges()) | set(ky.edges())
        vertices = set(kx.vertices) | set(ky.vertices)
        return Complex.flag(
            vertices, edges, dim_cap=complex_.dim_cap, labels=complex_.labels
        )
    return kx.union(ky)


STATUS_EMPTY = "empty"
STATUS_CONE = "cone"
STATUS_COLLAPSE = "collapse"       # assigned by homology-aware callers
STATUS_HOMOLOGY_ONLY = "homology-only"


class PComplementItem:
    """One cross simplex (outside the cover's poset) with its obstruction."""

    __slots__ = ("simplex", "obstruction", "status", "certificate", "profile")

    def __init__(self, simplex, obstruction, status, certificate=None, profile=None):
        self.simplex = simplex
        self.obstruction = obstruction
        self.status = status
        self.certificate = certificate   # a central simplex when status == "cone"
        self.profile = profile           # filled in by homology-aware callers

    def __repr__(self):
        return f"PComplementItem({self.simplex}, {self.status})"


def _central_vertex(complex_):
    """Smallest central vertex, or None.  Complete for cone detection since
    any central simplex makes each of its vertices central."""
    if complex_.is_empty:
        return None
    for v in complex_.vertices:
        if complex_.is_central((v,)):
            return v
    return None


def enumerate_p_complement(complex_, cover, dim_cap):
    """All simplices meeting both cover sides while avoiding the intersection.

    Each simplex of dimension <= dim_cap is paired with its obstruction
    complex over the intersection and a status: ``empty``, ``cone`` (with a
    central vertex as certificate), or ``homology-only`` (undecided here).
    Deterministic (dimension, lexicographic) order.
    """
    cover.validate(complex_)
    a = cover.a
    outside = complex_.restrict(set(complex_.vertices) - a)
    x_only = cover.x - a
    y_only = cover.y - a
    items = []
    for sigma in outside.simplices(max_dim=dim_cap):
        sset = set(sigma)
        if sset & x_only and sset & y_only:
            obs = complex_.obstruction(sigma, a)
            if obs.is_empty:
                items.append(PComplementItem(sigma, obs, STATUS_EMPTY))
            else:
                v = _central_vertex(obs)
                if v is not None:
                    items.append(PComplementItem(sigma, obs, STATUS_CONE, certificate=(v,)))
                else:
                    items.append(PComplementItem(sigma, obs, STATUS_HOMOLOGY_ONLY))
    items.sort(key=lambda it: (len(it.simplex), it.simplex))
    return items
