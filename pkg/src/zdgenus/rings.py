"""Finite commutative rings with identity as explicit operation tables.

A ring is described by a RingSpec (modular ring, finite field, direct
product, or a quotient algebra Z_n[x_1..x_k]/(relations)) and realized as a
RingTable holding full addition and multiplication tables over element
indices.  Quotient algebras are built by monomial rewriting: each relation
maps a monomial to a strictly smaller polynomial in a degree-then-lex order,
or pins the additive order of a monomial (d*m -> 0).  Correctness of the
resulting table is not assumed from confluence theory; it is enforced a
posteriori by exhaustive axiom validation plus an expected-order check.

Supported orders are small (hard cap 64), so every check is exhaustive.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from math import gcd

import numpy as np
import sympy
from sympy.parsing.sympy_parser import (
    parse_expr,
    standard_transformations,
    convert_xor,
)

from .errors import InvalidSpec, NonConfluentPresentation

MAX_ORDER = 64

_PARSE_TRANSFORMS = standard_transformations + (convert_xor,)


# === Specs ==================================================================


@dataclass(frozen=True)
class RewriteRule:
    """One relation of a quotient-algebra presentation.

    ``lhs`` is a single monomial term (integer coefficient >= 1, degree >= 1)
    and ``rhs`` a polynomial, both as expression strings, e.g.
    ``RewriteRule("x^2", "2*x + 2")`` or ``RewriteRule("2*x", "0")``.
    A coefficient-1 lhs rewrites the monomial to the (strictly smaller) rhs;
    a non-unit coefficient d with rhs 0 pins the additive order of the
    monomial; a unit coefficient is normalized away by its modular inverse.
    """

    lhs: str
    rhs: str


@dataclass(frozen=True)
class RingSpec:
    """Presentation of a finite commutative ring.

    kind is one of "zmod", "gf", "product", "quotient".  Unused fields stay
    at their defaults.  expected_order, when set, is checked after build.
    """

    kind: str
    name: str
    n: int | None = None
    p: int | None = None
    k: int | None = None
    factors: tuple[RingSpec, ...] = ()
    variables: tuple[str, ...] = ()
    relations: tuple[RewriteRule, ...] = ()
    expected_order: int | None = None


def zmod(n: int, name: str | None = None) -> RingSpec:
    if not isinstance(n, int) or n < 2:
        raise InvalidSpec(f"zmod requires an integer n >= 2, got {n!r}")
    return RingSpec(kind="zmod", name=name or f"Z_{n}", n=n, expected_order=n)


def gf(p: int, k: int, name: str | None = None) -> RingSpec:
    if not isinstance(p, int) or p < 2 or not sympy.isprime(p):
        raise InvalidSpec(f"gf requires a prime p, got {p!r}")
    if not isinstance(k, int) or k < 1:
        raise InvalidSpec(f"gf requires k >= 1, got {k!r}")
    return RingSpec(
        kind="gf", name=name or f"F_{p ** k}", p=p, k=k, expected_order=p**k
    )


def product(*factors: RingSpec, name: str | None = None) -> RingSpec:
    if len(factors) < 2:
        raise InvalidSpec("product requires at least two factors")
    order = 1
    for f in factors:
        if f.expected_order is None:
            raise InvalidSpec("product factors need known expected_order")
        order *= f.expected_order
    return RingSpec(
        kind="product",
        name=name or "×".join(f.name for f in factors),
        factors=tuple(factors),
        expected_order=order,
    )


def quotient_algebra(
    n: int,
    variables: tuple[str, ...] | list[str],
    relations,
    name: str,
    expected_order: int | None = None,
) -> RingSpec:
    rules = tuple(
        r if isinstance(r, RewriteRule) else RewriteRule(*r) for r in relations
    )
    return RingSpec(
        kind="quotient",
        name=name,
        n=n,
        variables=tuple(variables),
        relations=rules,
        expected_order=expected_order,
    )


# === Tables =================================================================


@dataclass(eq=False)
class RingTable:
    """A finite commutative ring as explicit index tables."""

    order: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    labels: tuple[str, ...]
    name: str = ""
    spec: RingSpec | None = None

    def __post_init__(self):
        self.add.setflags(write=False)
        self.mul.setflags(write=False)
        self._label_index = {s: i for i, s in enumerate(self.labels)}

    def neg(self, a: int) -> int:
        return int(np.where(self.add[a] == self.zero)[0][0])

    def power(self, a: int, k: int) -> int:
        out = self.one
        for _ in range(k):
            out = int(self.mul[out, a])
        return out

    def index_of(self, label: str) -> int:
        if label not in self._label_index:
            raise KeyError(f"no element labeled {label!r} in {self.name}")
        return self._label_index[label]

    def __repr__(self):
        return f"RingTable({self.name or 'unnamed'}, order={self.order})"


@dataclass(frozen=True, order=True)
class RingElem:
    index: int


def _idx(a) -> int:
    return a.index if isinstance(a, RingElem) else int(a)


@dataclass
class ValidationReport:
    """Axiom violations found in a table; empty iff the table is a ring."""

    violations: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok


# === Polynomial plumbing for quotient algebras ==============================


def _parse_poly(text: str, variables: tuple[str, ...], n: int):
    """Parse an expression string to {exponent tuple: coefficient mod n}."""
    syms = [sympy.Symbol(v) for v in variables]
    local = dict(zip(variables, syms))
    try:
        expr = parse_expr(
            text, local_dict=local, transformations=_PARSE_TRANSFORMS
        )
    except Exception as exc:
        raise InvalidSpec(f"cannot parse polynomial {text!r}: {exc}") from exc
    expr = sympy.expand(expr)
    extra = expr.free_symbols - set(syms)
    if extra:
        raise InvalidSpec(
            f"undeclared symbols {sorted(map(str, extra))} in {text!r}"
        )
    poly = sympy.Poly(expr, *syms, domain="ZZ") if syms else None
    out: dict[tuple[int, ...], int] = {}
    if poly is None:
        c = int(expr) % n
        if c:
            out[()] = c
        return out
    for exps, coeff in poly.terms():
        c = int(coeff) % n
        if c:
            out[tuple(int(e) for e in exps)] = c
    return out


def _deglex_key(exps: tuple[int, ...]):
    return (sum(exps), exps)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _mono_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


def _poly_label(poly: dict, variables: tuple[str, ...]) -> str:
    if not poly:
        return "0"
    terms = []
    for exps in sorted(poly, key=_deglex_key, reverse=True):
        c = poly[exps]
        parts = []
        for v, e in zip(variables, exps):
            if e == 1:
                parts.append(v)
            elif e > 1:
                parts.append(f"{v}^{e}")
        if not parts:
            terms.append(str(c))
        elif c == 1:
            terms.append("*".join(parts))
        else:
            terms.append(f"{c}*" + "*".join(parts))
    return " + ".join(terms)


class _QuotientEngine:
    """Monomial-rewriting normal forms for Z_n[vars]/(relations)."""

    def __init__(self, spec: RingSpec):
        if spec.n is None or spec.n < 2:
            raise InvalidSpec("quotient base must be zmod n with n >= 2")
        if not spec.variables:
            raise InvalidSpec("quotient algebra needs at least one variable")
        if len(set(spec.variables)) != len(spec.variables):
            raise InvalidSpec("duplicate variable names")
        self.n = spec.n
        self.variables = spec.variables
        self.nv = len(spec.variables)
        self.rules: list[tuple[tuple[int, ...], dict]] = []
        self.modulus_rules: list[tuple[tuple[int, ...], int]] = []
        for rule in spec.relations:
            self._install(rule)
        self._mod_cache: dict[tuple[int, ...], int] = {}

    def _install(self, rule: RewriteRule):
        lhs = _parse_poly(rule.lhs, self.variables, self.n)
        rhs = _parse_poly(rule.rhs, self.variables, self.n)
        if len(lhs) != 1:
            raise InvalidSpec(f"rule lhs must be a single term: {rule.lhs!r}")
        (mono, coeff), = lhs.items()
        if sum(mono) < 1:
            raise InvalidSpec(f"rule lhs must have degree >= 1: {rule.lhs!r}")
        d = gcd(self.n, coeff)
        if d == 1:
            if coeff != 1:
                inv = pow(coeff, -1, self.n)
                rhs = {m: (c * inv) % self.n for m, c in rhs.items()}
                rhs = {m: c for m, c in rhs.items() if c}
            key = _deglex_key(mono)
            for m in rhs:
                if _deglex_key(m) >= key:
                    raise InvalidSpec(
                        f"rule {rule.lhs!r} -> {rule.rhs!r} does not descend "
                        "in degree-then-lex order"
                    )
            self.rules.append((mono, rhs))
        else:
            if rhs:
                raise InvalidSpec(
                    f"non-unit coefficient rule {rule.lhs!r} must have rhs 0"
                )
            self.modulus_rules.append((mono, d))

    def modulus(self, mono: tuple[int, ...]) -> int:
        """Additive order bound of a monomial under the modulus rules."""
        if mono in self._mod_cache:
            return self._mod_cache[mono]
        d = self.n
        for rm, rd in self.modulus_rules:
            if _divides(rm, mono):
                d = gcd(d, rd)
        self._mod_cache[mono] = d
        return d

    def _reducible_by(self, mono: tuple[int, ...]):
        for lhs, rhs in self.rules:
            if _divides(lhs, mono):
                return lhs, rhs
        return None

    def normal_form(self, poly: dict) -> dict:
        p = {}
        for m, c in poly.items():
            c %= self.modulus(m)
            if c:
                p[m] = c
        while True:
            target = None
            for m in sorted(p, key=_deglex_key, reverse=True):
                hit = self._reducible_by(m)
                if hit is not None:
                    target = (m, hit)
                    break
            if target is None:
                return p
            m, (lhs, rhs) = target
            c = p.pop(m)
            q = tuple(a - b for a, b in zip(m, lhs))
            for rm, rc in rhs.items():
                mm = _mono_mul(rm, q)
                v = (p.get(mm, 0) + c * rc) % self.modulus(mm)
                if v:
                    p[mm] = v
                else:
                    p.pop(mm, None)

    def basis(self) -> list[tuple[int, ...]]:
        """All irreducible monomials of additive order >= 2 (BFS closure)."""
        from collections import deque

        start = (0,) * self.nv
        seen = {start}
        queue = deque([start])
        out = []
        live = 1
        while queue:
            m = queue.popleft()
            if self._reducible_by(m) is not None or self.modulus(m) < 2:
                continue
            out.append(m)
            live *= self.modulus(m)
            if live > MAX_ORDER:
                raise InvalidSpec(
                    "quotient algebra order exceeds the supported maximum "
                    f"{MAX_ORDER}"
                )
            for i in range(self.nv):
                child = tuple(
                    e + 1 if j == i else e for j, e in enumerate(m)
                )
                if child not in seen:
                    seen.add(child)
                    queue.append(child)
        out.sort(key=_deglex_key)
        return out


def _build_quotient(spec: RingSpec) -> RingTable:
    eng = _QuotientEngine(spec)
    basis = eng.basis()
    moduli = [eng.modulus(m) for m in basis]
    order = 1
    for d in moduli:
        order *= d
    if order > MAX_ORDER:
        raise InvalidSpec(f"ring order {order} exceeds maximum {MAX_ORDER}")

    weights = [1] * len(basis)
    for i in range(1, len(basis)):
        weights[i] = weights[i - 1] * moduli[i - 1]

    def encode(poly: dict) -> int:
        idx = 0
        for m, c in poly.items():
            i = basis.index(m)
            idx += (c % moduli[i]) * weights[i]
        return idx

    def decode(idx: int) -> dict:
        out = {}
        for i in reversed(range(len(basis))):
            c, idx = divmod(idx, weights[i])
            if c:
                out[basis[i]] = c
        return out

    polys = [decode(i) for i in range(order)]
    add = np.zeros((order, order), dtype=np.int16)
    mul = np.zeros((order, order), dtype=np.int16)
    for a in range(order):
        pa = polys[a]
        for b in range(a, order):
            pb = polys[b]
            s = dict(pa)
            for m, c in pb.items():
                s[m] = s.get(m, 0) + c
            add[a, b] = add[b, a] = encode(eng.normal_form(s))
            prod: dict = {}
            for ma, ca in pa.items():
                for mb, cb in pb.items():
                    mm = _mono_mul(ma, mb)
                    prod[mm] = prod.get(mm, 0) + ca * cb
            nf = eng.normal_form(prod)
            for m in nf:
                if m not in basis:
                    raise NonConfluentPresentation(
                        f"{spec.name}: normal form escapes the monomial basis"
                    )
            mul[a, b] = mul[b, a] = encode(nf)
    labels = tuple(_poly_label(p, spec.variables) for p in polys)
    one = encode(eng.normal_form({(0,) * eng.nv: 1}))
    return RingTable(
        order=order,
        add=add,
        mul=mul,
        zero=0,
        one=one,
        labels=labels,
        name=spec.name,
        spec=spec,
    )


# === Ring construction ======================================================

# Fixed irreducible polynomials for the supported small fields.
_GF_RELATIONS = {
    (2, 2): (("a^2", "a + 1"),),   # a^2 + a + 1
    (2, 3): (("a^3", "a + 1"),),   # a^3 + a + 1
    (3, 2): (("a^2", "a + 1"),),   # a^2 + 2a + 2
}


def _build_zmod(n: int, name: str, spec: RingSpec) -> RingTable:
    if n > MAX_ORDER:
        raise InvalidSpec(f"ring order {n} exceeds maximum {MAX_ORDER}")
    idx = np.arange(n)
    add = np.add.outer(idx, idx) % n
    mul = np.multiply.outer(idx, idx) % n
    return RingTable(
        order=n,
        add=add.astype(np.int16),
        mul=mul.astype(np.int16),
        zero=0,
        one=1 % n,
        labels=tuple(str(i) for i in range(n)),
        name=name,
        spec=spec,
    )


def _build_product(spec: RingSpec) -> RingTable:
    tables = [build_ring(f) for f in spec.factors]
    order = 1
    for t in tables:
        order *= t.order
    if order > MAX_ORDER:
        raise InvalidSpec(f"ring order {order} exceeds maximum {MAX_ORDER}")
    # First factor is the most significant digit.
    strides = [1] * len(tables)
    for i in reversed(range(len(tables) - 1)):
        strides[i] = strides[i + 1] * tables[i + 1].order
    idx = np.arange(order)
    digits = [(idx // strides[i]) % t.order for i, t in enumerate(tables)]
    add = np.zeros((order, order), dtype=np.int64)
    mul = np.zeros((order, order), dtype=np.int64)
    for i, t in enumerate(tables):
        d = digits[i]
        add += t.add[np.ix_(d, d)].astype(np.int64) * strides[i]
        mul += t.mul[np.ix_(d, d)].astype(np.int64) * strides[i]
    zero = sum(t.zero * strides[i] for i, t in enumerate(tables))
    one = sum(t.one * strides[i] for i, t in enumerate(tables))
    labels = []
    for e in range(order):
        parts = [t.labels[digits[i][e]] for i, t in enumerate(tables)]
        labels.append("(" + ", ".join(parts) + ")")
    return RingTable(
        order=order,
        add=add.astype(np.int16),
        mul=mul.astype(np.int16),
        zero=int(zero),
        one=int(one),
        labels=tuple(labels),
        name=spec.name,
        spec=spec,
    )


def product_tables(t1: RingTable, t2: RingTable, name: str = "") -> RingTable:
    """Direct product of two built tables; the first factor is the high digit."""
    order = t1.order * t2.order
    if order > MAX_ORDER:
        raise InvalidSpec(f"ring order {order} exceeds maximum {MAX_ORDER}")
    idx = np.arange(order)
    d1 = idx // t2.order
    d2 = idx % t2.order
    add = t1.add[np.ix_(d1, d1)].astype(np.int64) * t2.order + t2.add[np.ix_(d2, d2)]
    mul = t1.mul[np.ix_(d1, d1)].astype(np.int64) * t2.order + t2.mul[np.ix_(d2, d2)]
    labels = tuple(
        f"({t1.labels[d1[e]]}, {t2.labels[d2[e]]})" for e in range(order)
    )
    return RingTable(
        order=order,
        add=add.astype(np.int16),
        mul=mul.astype(np.int16),
        zero=t1.zero * t2.order + t2.zero,
        one=t1.one * t2.order + t2.one,
        labels=labels,
        name=name or f"{t1.name}×{t2.name}",
        spec=None,
    )


def build_ring(spec: RingSpec) -> RingTable:
    """Construct and validate the table for a ring presentation."""
    if not isinstance(spec, RingSpec):
        raise InvalidSpec(f"expected a RingSpec, got {type(spec).__name__}")
    if spec.kind == "zmod":
        if spec.n is None or spec.n < 2:
            raise InvalidSpec("zmod requires n >= 2")
        table = _build_zmod(spec.n, spec.name, spec)
    elif spec.kind == "gf":
        if spec.p is None or spec.k is None or not sympy.isprime(spec.p):
            raise InvalidSpec("gf requires prime p and k >= 1")
        if spec.k == 1:
            table = _build_zmod(spec.p, spec.name, spec)
        else:
            key = (spec.p, spec.k)
            if key not in _GF_RELATIONS:
                raise InvalidSpec(
                    f"no irreducible polynomial recorded for GF({spec.p}^{spec.k})"
                )
            inner = quotient_algebra(
                spec.p, ("a",), _GF_RELATIONS[key], name=spec.name
            )
            table = _build_quotient(inner)
            table.spec = spec
    elif spec.kind == "product":
        table = _build_product(spec)
    elif spec.kind == "quotient":
        table = _build_quotient(spec)
    else:
        raise InvalidSpec(f"unknown ring kind {spec.kind!r}")

    report = validate_table(table)
    if not report.ok:
        raise NonConfluentPresentation(
            f"{spec.name}: table fails axioms: "
            + "; ".join(name for name, _ in report.violations)
        )
    if spec.expected_order is not None and table.order != spec.expected_order:
        raise NonConfluentPresentation(
            f"{spec.name}: built order {table.order}, "
            f"expected {spec.expected_order}"
        )
    return table


# === Validation =============================================================


def validate_table(t: RingTable) -> ValidationReport:
    """Exhaustively check all commutative-ring-with-1 axioms."""
    report = ValidationReport()
    n = t.order
    A, M = t.add.astype(np.intp), t.mul.astype(np.intp)
    idx = np.arange(n)

    def witness(mask3) -> tuple:
        w = np.argwhere(mask3)[0]
        return tuple(int(x) for x in w)

    if n < 2 or t.zero == t.one:
        report.violations.append(("zero-ne-one", (t.zero, t.one)))
    if not np.array_equal(A, A.T):
        i, j = np.argwhere(A != A.T)[0]
        report.violations.append(("add-commutative", (int(i), int(j))))
    if not np.array_equal(M, M.T):
        i, j = np.argwhere(M != M.T)[0]
        report.violations.append(("mul-commutative", (int(i), int(j))))

    la = A[A, :]
    ra = A[idx[:, None, None], A[None, :, :]]
    if not np.array_equal(la, ra):
        report.violations.append(("add-associative", witness(la != ra)))
    lm = M[M, :]
    rm = M[idx[:, None, None], M[None, :, :]]
    if not np.array_equal(lm, rm):
        report.violations.append(("mul-associative", witness(lm != rm)))

    ld = M[idx[:, None, None], A[None, :, :]]
    rd = A[M[:, :, None], M[:, None, :]]
    if not np.array_equal(ld, rd):
        report.violations.append(("distributive", witness(ld != rd)))

    if not np.array_equal(A[t.zero], idx):
        bad = int(np.argwhere(A[t.zero] != idx)[0][0])
        report.violations.append(("zero-identity", (t.zero, bad)))
    if not np.array_equal(M[t.one], idx):
        bad = int(np.argwhere(M[t.one] != idx)[0][0])
        report.violations.append(("one-identity", (t.one, bad)))
    has_neg = (A == t.zero).any(axis=1)
    if not has_neg.all():
        bad = int(np.argwhere(~has_neg)[0][0])
        report.violations.append(("additive-inverse", (bad,)))
    return report


# === Element-level queries ==================================================


def units(t: RingTable) -> set[RingElem]:
    """Elements with a multiplicative inverse."""
    mask = (t.mul == t.one).any(axis=1)
    return {RingElem(int(i)) for i in np.where(mask)[0]}


def zero_divisors(t: RingTable) -> set[RingElem]:
    """Nonzero elements annihilated by some nonzero element."""
    out = set()
    for i in range(t.order):
        if i == t.zero:
            continue
        row = t.mul[i]
        hits = np.where(row == t.zero)[0]
        if any(j != t.zero for j in hits):
            out.add(RingElem(i))
    return out


def nilpotency_index(t: RingTable, a) -> int | None:
    """Smallest k >= 1 with a^k = 0, or None if a is not nilpotent."""
    x = _idx(a)
    cur = x
    for k in range(1, t.order + 1):
        if cur == t.zero:
            return k
        cur = int(t.mul[cur, x])
    return None


def additive_order(t: RingTable, a) -> int:
    x = _idx(a)
    cur = x
    for k in range(1, t.order + 1):
        if cur == t.zero:
            return k
        cur = int(t.add[cur, x])
    raise AssertionError("additive order not found; table invalid")


def maximal_ideals(t: RingTable) -> list:
    """Proper ideals not contained in any larger proper ideal."""
    from .ideals import enumerate_ideals

    ideals = enumerate_ideals(t)
    proper = [i for i in ideals if i.size < t.order]
    maximal = []
    for i in proper:
        if not any(
            j is not i and j.size > i.size and i.mask & j.mask == i.mask
            for j in proper
        ):
            maximal.append(i)
    return maximal


def is_local(t: RingTable) -> bool:
    """A ring is local when it has a single maximal ideal."""
    return len(maximal_ideals(t)) == 1


# === Isomorphism search =====================================================


def _fingerprint(t: RingTable, unit_set: set[int]):
    fps = []
    for i in range(t.order):
        ann = int((t.mul[i] == t.zero).sum())
        nil = nilpotency_index(t, i) or 0
        idem = int(t.mul[i, i]) == i
        fps.append((additive_order(t, i), nil, i in unit_set, ann, idem))
    return fps


def iso_check(a: RingTable, b: RingTable) -> list[int] | None:
    """Search for a ring isomorphism a -> b.

    Returns the witness index map (image of each element of ``a``) or None.
    Pruning: element fingerprints (additive order, nilpotency index, unit
    flag, annihilator size, idempotency) must match; partial maps are closed
    under both operations before branching.
    """
    if a.order != b.order:
        return None
    ua = {e.index for e in units(a)}
    ub = {e.index for e in units(b)}
    fa, fb = _fingerprint(a, ua), _fingerprint(b, ub)
    if sorted(fa) != sorted(fb):
        return None

    n = a.order
    fwd = [-1] * n
    used = [False] * n
    trail: list[int] = []

    def assign(x: int, y: int) -> bool:
        """Map x -> y and propagate closure; record trail for undo."""
        if fwd[x] == y:
            return True
        if fwd[x] != -1 or used[y] or fa[x] != fb[y]:
            return False
        fwd[x] = y
        used[y] = True
        trail.append(x)
        work = [x]
        while work:
            u = work.pop()
            v = fwd[u]
            for w in range(n):
                if fwd[w] == -1:
                    continue
                for op_a, op_b in ((a.add, b.add), (a.mul, b.mul)):
                    s = int(op_a[u, w])
                    tgt = int(op_b[v, fwd[w]])
                    if fwd[s] == tgt:
                        continue
                    if fwd[s] != -1 or used[tgt] or fa[s] != fb[tgt]:
                        return False
                    fwd[s] = tgt
                    used[tgt] = True
                    trail.append(s)
                    work.append(s)
        return True

    def undo(mark: int):
        while len(trail) > mark:
            x = trail.pop()
            used[fwd[x]] = False
            fwd[x] = -1

    def solve() -> bool:
        best, cands = -1, None
        for x in range(n):
            if fwd[x] != -1:
                continue
            cx = [y for y in range(n) if not used[y] and fb[y] == fa[x]]
            if cands is None or len(cx) < len(cands):
                best, cands = x, cx
                if len(cx) <= 1:
                    break
        if cands is None:
            return True
        for y in cands:
            mark = len(trail)
            if assign(best, y) and solve():
                return True
            undo(mark)
        return False

    mark = len(trail)
    if not assign(a.zero, b.zero) or not assign(a.one, b.one):
        undo(mark)
        return None
    if solve():
        return list(fwd)
    undo(mark)
    return None


# === JSON presentation files ================================================


def spec_to_json(spec: RingSpec) -> str:
    def enc(s: RingSpec):
        if s.kind == "zmod":
            return {"kind": "zmod", "n": s.n, "name": s.name}
        if s.kind == "gf":
            return {"kind": "gf", "p": s.p, "k": s.k, "name": s.name}
        if s.kind == "product":
            return {
                "kind": "product",
                "factors": [enc(f) for f in s.factors],
                "name": s.name,
            }
        return {
            "kind": "quotient",
            "base": s.n,
            "variables": list(s.variables),
            "relations": [[r.lhs, r.rhs] for r in s.relations],
            "name": s.name,
            "expected_order": s.expected_order,
        }

    return json.dumps(enc(spec), indent=2)


def spec_from_json(text: str) -> RingSpec:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidSpec(f"invalid JSON: {exc}") from exc

    def dec(d) -> RingSpec:
        if not isinstance(d, dict) or "kind" not in d:
            raise InvalidSpec("ring spec JSON must be an object with a kind")
        kind = d["kind"]
        if kind == "zmod":
            return zmod(d["n"], d.get("name"))
        if kind == "gf":
            return gf(d["p"], d["k"], d.get("name"))
        if kind == "product":
            return product(*[dec(f) for f in d["factors"]], name=d.get("name"))
        if kind == "quotient":
            return quotient_algebra(
                d["base"],
                d["variables"],
                d["relations"],
                name=d.get("name") or "quotient",
                expected_order=d.get("expected_order"),
            )
        raise InvalidSpec(f"unknown ring kind {kind!r}")

    return dec(data)
