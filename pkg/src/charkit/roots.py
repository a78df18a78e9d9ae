"""Root systems and Weyl groups as permutation groups on roots.

A Weyl group element is canonically the permutation it induces on the root
list; equality, conjugation and length checks are pure permutation
operations, and reduced words are reconstructed on demand by descent
stripping.  Root systems are immutable after construction.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .cartan import CartanDatum, InvalidCartan


class RootSystem:
    """All roots of a finite Cartan datum, positive roots first.

    The roots are integer vectors in the simple-root basis.  Index i + num_pos
    is the negative of index i, so negation is an index shift.
    """

    def __init__(self, datum: CartanDatum):
        self.datum = datum
        n = datum.rank
        simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
        seen = set(simple)
        queue = list(simple)
        while queue:
            beta = queue.pop()
            for i in range(n):
                img = _reflect(datum.cartan, i, beta)
                if img not in seen:
                    seen.add(img)
                    queue.append(img)
        positive = sorted(
            (r for r in seen if all(c >= 0 for c in r)),
            key=lambda r: (sum(r), r),
        )
        if 2 * len(positive) != len(seen):
            raise InvalidCartan("root system closure is not symmetric")
        self.num_positive = len(positive)
        self.roots: list[tuple[int, ...]] = positive + [
            tuple(-c for c in r) for r in positive
        ]
        self._index = {r: i for i, r in enumerate(self.roots)}
        self.simple_indices = [self._index[s] for s in simple]
        # reflection table: generator i as a permutation of root indices
        self.reflections: list[tuple[int, ...]] = [
            tuple(self._index[_reflect(datum.cartan, i, r)] for r in self.roots)
            for i in range(n)
        ]
        self._identity = tuple(range(len(self.roots)))

    @property
    def rank(self) -> int:
        return self.datum.rank

    def identity(self) -> WeylElement:
        return WeylElement(self, self._identity)

    def simple_reflection(self, i: int) -> WeylElement:
        if not 0 <= i < self.rank:
            raise IndexError(f"generator index {i} out of range")
        return WeylElement(self, self.reflections[i])

    def from_word(self, word) -> WeylElement:
        """Product s_{word[0]} s_{word[1]} ... acting on roots on the left."""
        perm = self._identity
        for i in reversed(list(word)):
            if not 0 <= i < self.rank:
                raise IndexError(f"generator index {i} out of range")
            g = self.reflections[i]
            perm = tuple(g[p] for p in perm)
        return WeylElement(self, perm)

    def longest_element(self, J=None) -> WeylElement:
        """The longest element of the parabolic subgroup W_J (all of W by default)."""
        J = list(range(self.rank)) if J is None else sorted(set(J))
        w = self.identity()
        while True:
            for i in J:
                if w.perm[self.simple_indices[i]] < self.num_positive:
                    w = w.mul_gen_right(i)
                    break
            else:
                return w

    def relative_weyl_generators(self, J) -> list[WeylElement]:
        """Involutions w0^(J+{s}) w0^J for s outside J."""
        J = sorted(set(J))
        if len(J) >= self.rank:
            raise ValueError("J must be a proper subset of the generators")
        w0_j = self.longest_element(J)
        out = []
        for s in range(self.rank):
            if s in J:
                continue
            w0_js = self.longest_element(J + [s])
            out.append(w0_js * w0_j)
        return out

    def group_order(self) -> int:
        """|W| by orbit-stabilizer recursion on the root permutation action."""
        return _perm_group_order(tuple(self.reflections), len(self.roots))

    def coxeter_element(self, order=None) -> WeylElement:
        order = list(range(self.rank)) if order is None else list(order)
        if sorted(order) != list(range(self.rank)):
            raise ValueError("ordering must be a permutation of all node indices")
        return self.from_word(order)


@lru_cache(maxsize=32)
def build_root_system(label: str) -> RootSystem:
    return RootSystem(CartanDatum.from_label(label))


def _reflect(cartan, i: int, beta):
    pairing = sum(cartan[i][j] * b for j, b in enumerate(beta) if b)
    if not pairing:
        return beta
    out = list(beta)
    out[i] -= pairing
    return tuple(out)


@dataclass(frozen=True, eq=False)
class WeylElement:
    rs: RootSystem
    perm: tuple[int, ...]

    def __eq__(self, other):
        return isinstance(other, WeylElement) and self.perm == other.perm \
            and self.rs is other.rs

    def __hash__(self):
        return hash(self.perm)

    @property
    def length(self) -> int:
        n = self.rs.num_positive
        return sum(1 for j in range(n) if self.perm[j] >= n)

    def is_identity(self) -> bool:
        return self.perm == self.rs._identity

    def __mul__(self, other: WeylElement) -> WeylElement:
        if self.rs is not other.rs:
            raise ValueError("elements of different Weyl groups")
        g = self.perm
        return WeylElement(self.rs, tuple(g[p] for p in other.perm))

    def mul_gen_right(self, i: int) -> WeylElement:
        g = self.rs.reflections[i]
        return WeylElement(self.rs, tuple(self.perm[p] for p in g))

    def mul_gen_left(self, i: int) -> WeylElement:
        g = self.rs.reflections[i]
        return WeylElement(self.rs, tuple(g[p] for p in self.perm))

    def inverse(self) -> WeylElement:
        inv = [0] * len(self.perm)
        for i, p in enumerate(self.perm):
            inv[p] = i
        return WeylElement(self.rs, tuple(inv))

    def conjugate_by(self, u: WeylElement) -> WeylElement:
        """u * self * u^-1."""
        return u * self * u.inverse()

    def acts_negatively_on_simple(self, i: int) -> bool:
        return self.perm[self.rs.simple_indices[i]] >= self.rs.num_positive

    def reduced_word(self) -> list[int]:
        """A reduced expression, reconstructed by stripping right descents."""
        w = self
        rev = []
        while not w.is_identity():
            for i in range(self.rs.rank):
                if w.acts_negatively_on_simple(i):
                    w = w.mul_gen_right(i)
                    rev.append(i)
                    break
            else:  # pragma: no cover - impossible for a valid permutation
                raise RuntimeError("no descent found")
        return rev[::-1]

    def root_image(self, root_index: int) -> int:
        return self.perm[root_index]

    def __repr__(self):
        word = "".join(str(i + 1) for i in self.reduced_word())
        return f"WeylElement({self.rs.datum.type_label}, s[{word or 'e'}])"


# -- Coxeter element conjugation ----------------------------------------

def coxeter_conjugator(rs: RootSystem, source, target) -> list[int]:
    """A word u with  u . c(source) . u^-1 = c(target)  for Coxeter elements.

    Both orderings list all node indices exactly once.  The word records
    front-to-back shift moves: a source node of the current orientation of
    the Coxeter graph is shifted through the word by conjugating with that
    single generator.  The result is verified by permutation equality.
    """
    source, target = list(source), list(target)
    for order in (source, target):
        if sorted(order) != list(range(rs.rank)):
            raise ValueError("orderings must be permutations of all node indices")
    edges = rs.datum.edges()
    start = _orientation(edges, source)
    goal = _orientation(edges, target)
    moves = _flip_path(rs.rank, edges, start, goal)
    word = list(reversed(moves))
    u = rs.from_word(word)
    got = u * rs.coxeter_element(source) * u.inverse()
    if got != rs.coxeter_element(target):  # pragma: no cover - algorithm guarantee
        raise AssertionError("conjugation certificate failed to verify")
    return word


def _orientation(edges, order) -> frozenset:
    pos = {node: k for k, node in enumerate(order)}
    return frozenset((u, v) if pos[u] < pos[v] else (v, u) for u, v in edges)


def _flip_path(rank: int, edges, start: frozenset, goal: frozenset) -> list[int]:
    """BFS through acyclic orientations, flipping sources to sinks."""
    if start == goal:
        return []
    frontier = {start: []}
    seen = {start}
    while frontier:
        new_frontier = {}
        for state, path in frontier.items():
            for x in range(rank):
                incident = [e for e in state if x in e]
                if not incident or any(e[1] == x for e in incident):
                    continue  # not a source (or isolated with no edges to flip)
                flipped = frozenset(
                    (e[1], e[0]) if x in e else e for e in state
                )
                if flipped in seen:
                    continue
                new_path = path + [x]
                if flipped == goal:
                    return new_path
                seen.add(flipped)
                new_frontier[flipped] = new_path
        frontier = new_frontier
    raise AssertionError("orientation flip search exhausted")  # pragma: no cover


# -- permutation group order (orbit-stabilizer chain) --------------------

def _perm_group_order(gens: tuple, degree: int) -> int:
    """Order of the group generated by permutations, via a stabilizer chain.

    Strong generators carry a level: the deepest stabilizer they are known
    to lie in.  The stabilizer at level i is generated by all strong
    generators of level >= i.  Schreier generators are sifted through the
    chain; a nontrivial residue becomes a new strong generator, which
    re-opens the affected levels' orbit work.  Membership conclusions are
    monotone, so processed (point, generator) pairs never need revisiting.
    """
    identity = tuple(range(degree))

    def compose(f, g):
        return tuple(f[x] for x in g)

    def invert(f):
        out = [0] * degree
        for i, x in enumerate(f):
            out[x] = i
        return tuple(out)

    base: list[int] = []
    trans: list[dict] = []          # trans[i]: orbit point -> coset rep
    sgens: list[tuple] = []         # all strong generators
    sgen_level: list[int] = []      # level of each strong generator
    seen_gens: set = set()
    work: list[tuple[int, int, int]] = []   # (level, point, gen index)

    def strip(h, start):
        for j in range(start, len(base)):
            img = h[base[j]]
            rep = trans[j].get(img)
            if rep is None:
                return h, j
            h = compose(invert(rep), h)
            if h == identity:
                return h, j + 1
        return h, len(base)

    def add_point(i, y, rep):
        trans[i][y] = rep
        work.extend((i, y, k) for k, g in enumerate(sgens) if sgen_level[k] >= i)

    def add_gen(h, j):
        if h in seen_gens:
            return
        seen_gens.add(h)
        if j == len(base):
            point = next(p for p in range(degree) if h[p] != p)
            base.append(point)
            trans.append({point: identity})
        k = len(sgens)
        sgens.append(h)
        sgen_level.append(j)
        for i in range(j + 1):
            work.extend((i, x, k) for x in trans[i])

    for g in gens:
        g = tuple(g)
        if g == identity:
            continue
        h, j = strip(g, 0)
        if h != identity:
            add_gen(h, j)

    while work:
        i, x, k = work.pop()
        g = sgens[k]
        ux = trans[i][x]
        y = g[x]
        rep_y = trans[i].get(y)
        if rep_y is None:
            add_point(i, y, compose(g, ux))
            continue
        schreier = compose(invert(rep_y), compose(g, ux))
        if schreier == identity:
            continue
        h, j = strip(schreier, i + 1)
        if h != identity:
            add_gen(h, j)

    order = 1
    for t in trans:
        order *= len(t)
    return order
