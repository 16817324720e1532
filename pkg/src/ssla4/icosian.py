"""The icosian ring I, its sublattices, root systems and twist maps.

I is spanned over Z[tau] by

    e1 = (1, 0, 0, 0),  e2 = (0, 1, 0, 0),
    e3 = (1, 1, 1, 1)/2,  e4 = (1 - tau, tau, 0, 1)/2,

and over Z by the eight vectors e1, tau*e1, ..., e4, tau*e4.  Elements are
carried as their four Z[tau] coordinates; the eight integers
``(a1, b1, ..., a4, b4)`` with ``c_k = a_k + b_k tau`` are the "Z-coordinates"
used by all integer matrix code here and in :mod:`ssla4.sslgen`.

The twist-fixed part of I is the A4 lattice L with basis

    (1, 0, 0, 0), (-1, 1, 1, 1)/2, (0, -1, 0, 0), (0, 1, tau - 1, -tau)/2.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction

from . import golden, linalg, quatk
from .errors import NoInnerWitness, NotASubmodule, NotInOrder, ZeroVector
from .golden import GoldenInt, KScalar
from .quatk import Quat, bar, inverse, nr, twist

HALF = Fraction(1, 2)

E1 = Quat.of(1, 0, 0, 0)
E2 = Quat.of(0, 1, 0, 0)
E3 = Quat.of(HALF, HALF, HALF, HALF)
E4 = Quat(KScalar.make(HALF, -HALF), KScalar.make(0, HALF), KScalar.coerce(0),
          KScalar.coerce(HALF))
BASIS = (E1, E2, E3, E4)
Z_BASIS = tuple(v for e in BASIS for v in (e, golden.K_TAU * e))

L_BASIS = quatk._L_BASIS

# Gram matrix of L under the Euclidean product: half the A4 Cartan matrix
A4_GRAM = [[Fraction(x, 2) for x in row] for row in
           ([2, -1, 0, 0], [-1, 2, -1, 0], [0, -1, 2, -1], [0, 0, -1, 2])]


@dataclass(frozen=True, slots=True)
class Icosian:
    coords: tuple[GoldenInt, GoldenInt, GoldenInt, GoldenInt]
    quat: Quat = field(compare=False, repr=False, default=None)

    def __post_init__(self):
        if self.quat is None:
            object.__setattr__(self, "quat", _quat_from_coords(self.coords))

    @classmethod
    def from_ints(cls, v) -> "Icosian":
        return cls(tuple(GoldenInt(v[2 * i], v[2 * i + 1]) for i in range(4)))

    def ints(self) -> tuple[int, ...]:
        return tuple(x for c in self.coords for x in (c.a, c.b))

    def __mul__(self, other):
        if isinstance(other, Icosian):
            return to_icosian(self.quat * other.quat)
        return to_icosian(self.quat * other)

    def __neg__(self):
        return Icosian(tuple(-c for c in self.coords), -self.quat)

    def __lt__(self, other):
        return self.ints() < other.ints()

    def __repr__(self):
        return f"Icosian({', '.join(str(c) for c in self.coords)})"

    def to_json(self):
        return list(self.ints())


def _quat_from_coords(c) -> Quat:
    c1, c2, c3, c4 = (KScalar.coerce(x) for x in c)
    half = golden.K_HALF
    tau = golden.K_TAU
    return Quat(
        c1 + half * (c3 + c4 * (1 - tau)),
        c2 + half * (c3 + c4 * tau),
        half * c3,
        half * (c3 + c4),
    )


def coords_in_basis(x: Quat) -> tuple[KScalar, ...]:
    """K-coordinates of x in the basis e1..e4 (always exist)."""
    x0, x1, x2, x3 = x.coords
    c3 = 2 * x2
    c4 = 2 * (x3 - x2)
    c2 = x1 - x2 - golden.K_TAU * (x3 - x2)
    c1 = x0 - x2 - (1 - golden.K_TAU) * (x3 - x2)
    return (c1, c2, c3, c4)


def to_icosian(x: Quat) -> Icosian:
    c = coords_in_basis(x)
    if not all(ci.is_integral() for ci in c):
        raise NotInOrder(f"{x} is not in the icosian ring")
    return Icosian(tuple(ci.num for ci in c), x)


def in_icosian_ring(x: Quat) -> bool:
    return all(ci.is_integral() for ci in coords_in_basis(x))


def as_icosian(x) -> Icosian:
    return x if isinstance(x, Icosian) else to_icosian(x)


def content_I(p) -> GoldenInt:
    p = as_icosian(p)
    if not any(p.coords):
        raise ZeroVector("the zero icosian has no content")
    return golden.content(p.coords)


def is_I_primitive(p) -> bool:
    return golden.is_unit(content_I(p))


def is_unit_icosian(p) -> bool:
    p = as_icosian(p)
    return golden.norm(nr(p.quat).to_golden()) in (1, -1)


def nr_golden(p) -> GoldenInt:
    return nr(as_icosian(p).quat).to_golden()


# ---- integer matrices on Z-coordinates -------------------------------------

def ints_of(x: Quat) -> tuple[int, ...]:
    return to_icosian(x).ints()


def quat_of_ints(v) -> Quat:
    return Icosian.from_ints(v).quat


def map_matrix(f):
    """8x8 integer matrix (acting on Z-coordinate columns) of a Q-linear map of I."""
    cols = [ints_of(f(z)) for z in Z_BASIS]
    return tuple(tuple(cols[j][i] for j in range(8)) for i in range(8))


def left_matrix(a: Quat):
    return map_matrix(lambda x: a * x)


def right_matrix(a: Quat):
    return map_matrix(lambda x: x * a)


def apply(M, v):
    return tuple(sum(m * x for m, x in zip(row, v)) for row in M)


def compose(A, B):
    """Matrix of the map A after B."""
    Bt = list(zip(*B))
    return tuple(tuple(sum(a * b for a, b in zip(row, col)) for col in Bt) for row in A)


IDENTITY8 = tuple(tuple(int(i == j) for j in range(8)) for i in range(8))


def _k_gram():
    """K-valued Euclidean Gram matrix of the Z-basis, doubled and split.

    Returns integer matrices (A2, B2) with 2<z_i, z_j> = A2 + B2 tau, so that
    nr(x) = (x^T A2 x + (x^T B2 x) tau) / 2 for Z-coordinates x.
    """
    A2 = [[0] * 8 for _ in range(8)]
    B2 = [[0] * 8 for _ in range(8)]
    for i, zi in enumerate(Z_BASIS):
        for j, zj in enumerate(Z_BASIS):
            g = (2 * quatk.dot(zi, zj)).to_golden()
            A2[i][j], B2[i][j] = g.a, g.b
    return A2, B2


NR_A2, NR_B2 = _k_gram()


def nr_from_ints(v) -> GoldenInt:
    a = sum(NR_A2[i][j] * v[i] * v[j] for i in range(8) for j in range(8))
    b = sum(NR_B2[i][j] * v[i] * v[j] for i in range(8) for j in range(8))
    return GoldenInt(a // 2, b // 2)


def trace_form_gram(weight=1):
    """Gram matrix of x -> Tr(weight * nr(x)) on the Z-basis (rational)."""
    w = KScalar.coerce(weight)
    G = []
    for i in range(8):
        row = []
        for j in range(8):
            g = KScalar(GoldenInt(NR_A2[i][j], NR_B2[i][j]), 2)
            row.append((w * g).trace())
        G.append(row)
    return G


# ---- root systems ----------------------------------------------------------

def _even_permutations():
    out = []
    for perm in itertools.permutations(range(4)):
        inversions = sum(1 for i in range(4) for j in range(i + 1, 4) if perm[i] > perm[j])
        if inversions % 2 == 0:
            out.append(perm)
    return out


def _signed_variants(coords):
    choices = [(c,) if not c else (c, -c) for c in coords]
    return itertools.product(*choices)


def _positive_real(c: KScalar) -> bool:
    return c.sign() > 0


def _build_h4():
    tau = golden.K_TAU
    half = golden.K_HALF
    seeds = [
        (golden.K_ONE, golden.K_ZERO, golden.K_ZERO, golden.K_ZERO),
        (half, half, half, half),
        (half * (1 - tau), half * tau, golden.K_ZERO, half),
    ]
    roots = set()
    for seed in seeds:
        for signed in _signed_variants(seed):
            for perm in _even_permutations():
                roots.add(Quat(*(signed[perm[i]] for i in range(4))))
    return tuple(sorted(roots, key=quatk.sort_key))


_H4 = _build_h4()


def roots_H4() -> tuple[Quat, ...]:
    return _H4


def roots_A4() -> tuple[Quat, ...]:
    return tuple(r for r in _H4 if twist(r) == r)


def roots_H3() -> tuple[Quat, ...]:
    return tuple(r for r in _H4 if not quatk.tr(r))


def is_positive_root(r: Quat) -> bool:
    first = next(c for c in r.coords if c)
    return _positive_real(first)


def positive_roots_A4() -> tuple[Quat, ...]:
    return tuple(r for r in roots_A4() if is_positive_root(r))


# ---- lattices and modules --------------------------------------------------

@dataclass(frozen=True)
class LatticeBasis:
    name: str
    vectors: tuple[Quat, ...]
    ring: str = "Z"  # "Z" or "Z[tau]"

    def z_basis(self) -> tuple[Quat, ...]:
        if self.ring == "Z":
            return self.vectors
        return tuple(w for v in self.vectors for w in (v, golden.K_TAU * v))

    def scaled(self, c, name=None) -> "LatticeBasis":
        c = KScalar.coerce(c)
        return LatticeBasis(name or f"{c}*{self.name}", tuple(c * v for v in self.vectors), self.ring)

    def gram(self):
        return [[quatk.dot(u, v) for v in self.vectors] for u in self.vectors]

    def contains(self, x: Quat) -> bool:
        cols = linalg.transpose([quatk.embed8(v) for v in self.z_basis()])
        sol = linalg.solve(cols, quatk.embed8(x))
        return sol is not None and all(s.denominator == 1 for s in sol)

    def to_json(self):
        return {"name": self.name, "ring": self.ring, "vectors": [v.to_json() for v in self.vectors]}


def _dual_basis_L():
    cartan = [[2 * x for x in row] for row in A4_GRAM]
    inv = linalg.inverse(cartan)
    return tuple(
        sum((KScalar.coerce(inv[i][j]) * L_BASIS[j] for j in range(4)), quatk.ZERO)
        for i in range(4)
    )


LATTICE_L = LatticeBasis("L", L_BASIS, "Z")
LATTICE_L_TAU = LatticeBasis("L[tau]", L_BASIS, "Z[tau]")
LATTICE_CURLY_L = LatticeBasis("curlyL", (quatk.ONE, quatk.I, quatk.J, quatk.K), "Z[tau]")
LATTICE_I = LatticeBasis("I", BASIS, "Z[tau]")
LATTICE_L_TAU_DUAL = LatticeBasis("L[tau]*", _dual_basis_L(), "Z[tau]")


def z_module_index(sub: LatticeBasis, sup: LatticeBasis) -> int:
    """Index of one Z-module in another of the same rank."""
    sub_b, sup_b = sub.z_basis(), sup.z_basis()
    if len(sub_b) != len(sup_b):
        raise NotASubmodule("modules have different ranks")
    A = linalg.transpose([quatk.embed8(v) for v in sup_b])
    cols = []
    for v in sub_b:
        c = linalg.solve(A, quatk.embed8(v))
        if c is None or any(x.denominator != 1 for x in c):
            raise NotASubmodule(f"{sub.name} is not contained in {sup.name}")
        cols.append(c)
    return abs(int(linalg.det(linalg.transpose(cols))))


def l_coordinates(x: Quat):
    """Integer coordinates of x in the L-basis, or None if x is not in L."""
    c = quatk.coords_in_plus_basis(x)
    if c is None or any(v.denominator != 1 for v in c):
        return None
    return [int(v) for v in c]


def is_in_L(x: Quat) -> bool:
    return l_coordinates(x) is not None


def is_twist_fixed_in_L(x) -> bool:
    """True iff the icosian x lies in L (equivalently, is twist-fixed)."""
    q = x.quat if isinstance(x, Icosian) else x
    return is_in_L(q)


def fixed_point_lattice() -> LatticeBasis:
    return LATTICE_L


# ---- theta map and twist maps ----------------------------------------------

def theta(x):
    q = x.quat if isinstance(x, Icosian) else x
    return to_icosian(q * twist(q))


def theta_fibre_group() -> tuple[Quat, ...]:
    return tuple(e for e in _H4 if e * twist(e) == quatk.ONE)


def theta_fibres() -> dict[Quat, list[Quat]]:
    fibres: dict[Quat, list[Quat]] = {}
    for e in _H4:
        fibres.setdefault(e * twist(e), []).append(e)
    return fibres


def theta_image_check() -> bool:
    fibres = theta_fibres()
    return set(fibres) == set(roots_A4()) and all(len(f) == 6 for f in fibres.values())


def quat_order(q: Quat, limit=200) -> int:
    x = q
    for n in range(1, limit + 1):
        if x == quatk.ONE:
            return n
        x = x * q
    raise ValueError("order exceeds limit")


def conjugation(e: Quat, x: Quat) -> Quat:
    return e * x * inverse(e)


@dataclass(frozen=True)
class TwistMapDescriptor:
    """The twist map x -> a twist(x) a^-1 for a root a of the A4 system.

    ``witness`` is one unit eps of the H4 system with eps twist(eps) = a; the
    map then equals eps twist(eps^-1 x eps) eps^-1.
    """

    a: Quat
    witness: Quat

    def __call__(self, x: Quat) -> Quat:
        return self.a * twist(x) * inverse(self.a)

    def matrix(self):
        return map_matrix(self)

    def to_json(self):
        return {"a": self.a.to_json(), "witness": self.witness.to_json()}


def classify_twist_maps() -> list[TwistMapDescriptor]:
    fibres = theta_fibres()
    maps = []
    for a in positive_roots_A4():
        witness = min(fibres[a], key=quatk.sort_key)
        maps.append(TwistMapDescriptor(a, witness))
    mats = [d.matrix() for d in maps]
    if len(set(mats)) != len(maps):
        raise AssertionError("twist maps are not pairwise distinct")
    for M in mats:
        if compose(M, M) != IDENTITY8:
            raise AssertionError("twist map is not an involution")
    return maps


ETA = TwistMapDescriptor(quatk.ONE, quatk.ONE)


def twist_fixed_lattice(d: TwistMapDescriptor) -> LatticeBasis:
    e = d.witness
    vecs = tuple(conjugation(e, b) for b in L_BASIS)
    for v in vecs:
        if d(v) != v:
            raise AssertionError("fixed-lattice basis vector is not fixed")
    return LatticeBasis(f"T_eps(L) for a={d.a}", vecs, "Z")


def inner_automorphism_matrices() -> dict:
    """Map from 8x8 matrix of T_eps to the list of eps in H4 inducing it."""
    out: dict = {}
    for e in _H4:
        out.setdefault(map_matrix(lambda x, e=e: conjugation(e, x)), []).append(e)
    return out


def twist_product_is_inner(d1: TwistMapDescriptor, d2: TwistMapDescriptor, rng=None) -> Quat:
    """A unit eps with d1 o d2 = T_eps, found by search over the H4 units."""
    target = compose(d1.matrix(), d2.matrix())
    candidates = inner_automorphism_matrices().get(target)
    if not candidates:
        raise NoInnerWitness("composition of twist maps is not inner")
    eps = min(candidates, key=quatk.sort_key)
    rng = rng or random.Random(0)
    for _ in range(10):
        x = Icosian.from_ints([rng.randint(-5, 5) for _ in range(8)]).quat
        if d1(d2(x)) != conjugation(eps, x):
            raise NoInnerWitness("witness fails on a random icosian")
    return eps


def a2_subsystem(d: TwistMapDescriptor) -> tuple[Quat, ...]:
    return tuple(r for r in roots_H3() if d(r) == r)


# ---- group structure -------------------------------------------------------

def matrix_order(M, limit=1000) -> int:
    X = M
    for n in range(1, limit + 1):
        if X == IDENTITY8:
            return n
        X = compose(X, M)
    raise ValueError("order exceeds limit")


def closure(generators):
    gens = list(dict.fromkeys(generators))
    seen = {IDENTITY8}
    frontier = [IDENTITY8]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                x = compose(h, g)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return seen


def lattice_key(vectors_ints):
    """Canonical key (column HNF) for the Z-span of Z-coordinate vectors."""
    M = linalg.transpose([list(v) for v in vectors_ints])
    return tuple(map(tuple, linalg.column_hnf(M)))


def h4_generators() -> tuple[Quat, Quat]:
    """A deterministic pair of H4 roots generating the whole unit group."""
    mats = {e: left_matrix(e) for e in _H4}
    for a, b in itertools.combinations(_H4, 2):
        if len(closure([mats[a], mats[b]])) == 120:
            return a, b
    raise AssertionError("no generating pair found")


def orbit_of_L():
    """All lattices a L b with a, b in the H4 system, keyed canonically."""
    gens = h4_generators()
    movers = [left_matrix(g) for g in gens] + [right_matrix(g) for g in gens]
    start = tuple(ints_of(b) for b in L_BASIS)
    seen = {lattice_key(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for basis in frontier:
            for M in movers:
                image = tuple(apply(M, v) for v in basis)
                key = lattice_key(image)
                if key not in seen:
                    seen[key] = image
                    nxt.append(image)
        frontier = nxt
    return seen


def symmetric_group_order_profile(n=5):
    """Element-order histogram of the symmetric group on n letters."""
    from math import lcm
    hist: dict[int, int] = {}
    for perm in itertools.permutations(range(n)):
        seen, order = set(), 1
        for s in range(n):
            if s in seen:
                continue
            length, t = 0, s
            while t not in seen:
                seen.add(t)
                t = perm[t]
                length += 1
            order = lcm(order, length)
        hist[order] = hist.get(order, 0) + 1
    return hist


def coxeter_element_z() -> Quat:
    """Rotation of order 3 from the A2 root basis (0,-1,0,0), (0,1,tau-1,-tau)/2.

    Computed as -(1/2) i (i + (tau-1) j - tau k) = (1, 0, -tau, 1-tau)/2, whose
    cube is -1.  Its negative (-1, 0, tau, tau-1)/2 induces the same inner
    automorphism but cubes to +1.
    """
    b = Quat(golden.K_ZERO, golden.K_ONE, golden.K_TAU - 1, -golden.K_TAU)
    return KScalar.coerce(Fraction(-1, 2)) * (quatk.I * b)


def symmetry_group_structure() -> dict:
    inner = inner_automorphism_matrices()
    eta = ETA.matrix()
    group = closure(list(inner) + [eta])
    orders: dict[int, int] = {}
    for g in group:
        o = matrix_order(g)
        orders[o] = orders.get(o, 0) + 1
    z = coxeter_element_z()
    z_cubed = z * z * z
    Tz = map_matrix(lambda x: conjugation(z, x))
    orbit = orbit_of_L()
    one = ints_of(quatk.ONE)
    containing_one = [
        basis for basis in orbit.values()
        if LatticeBasis("copy", tuple(quat_of_ints(v) for v in basis)).contains(quat_of_ints(one))
    ]
    return {
        "inner_automorphisms": len(inner),
        "group_order": len(group),
        "element_orders": dict(sorted(orders.items())),
        "has_order_4": 4 in orders,
        "z": z,
        "z_cubed_is_minus_one": z_cubed == -quatk.ONE,
        "T_z_order": matrix_order(Tz),
        "orbit_size": len(orbit),
        "orbit_containing_one": len(containing_one),
    }
