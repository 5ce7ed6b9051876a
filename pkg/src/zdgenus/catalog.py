"""Named ring presentations used by the verifier and the CLI.

Every entry pairs a display name with a buildable RingSpec.  Quotient
presentations store their rewrite systems in completed form: where a listed
ideal generator is not itself a valid rewrite rule (non-unit leading
coefficient), the extra rules carry torsion consequences of the ideal, and
the original generators are kept verbatim on the entry so tests can certify
the completion against them.

Tags group entries for the classification sweeps:
  planar-local     local rings whose zero-divisor graph is planar
  genus-one-local  local rings whose zero-divisor graph has genus one
  two-max          rings with exactly two maximal ideals and planar graph
  zmod             the Z_n sweep
  field            finite fields
  product          direct products
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from sympy import isprime

from .errors import InvalidSpec
from .rings import RingSpec, RingTable, build_ring, gf, product, quotient_algebra, zmod


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    spec: RingSpec
    generators: tuple[str, ...]
    tags: frozenset[str]


def _q(name, n, variables, relations, generators, order, tags):
    spec = quotient_algebra(n, variables, relations, name, expected_order=order)
    return CatalogEntry(name, spec, tuple(generators), frozenset(tags))


def _p(factors, tags, name=None):
    spec = product(*factors, name=name)
    return CatalogEntry(spec.name, spec, (), frozenset(tags | {"product"}))


_PLANAR_ZMOD = {4, 8, 9, 16, 25, 27}
_GENUS_ONE_ZMOD = {32, 49}


def _build_entries() -> tuple[CatalogEntry, ...]:
    entries: list[CatalogEntry] = []

    # Z_n sweep
    for n in list(range(2, 33)) + [49]:
        tags = {"zmod"}
        if isprime(n):
            tags.add("field")
        if n in _PLANAR_ZMOD:
            tags.add("planar-local")
        if n in _GENUS_ONE_ZMOD:
            tags.add("genus-one-local")
        entries.append(CatalogEntry(f"Z_{n}", zmod(n), (), frozenset(tags)))

    # small fields beyond the primes
    for p, k in [(2, 2), (2, 3), (3, 2)]:
        spec = gf(p, k)
        entries.append(CatalogEntry(spec.name, spec, (), frozenset({"field"})))

    pl = {"planar-local"}
    g1 = {"genus-one-local"}

    # local quotient presentations with planar zero-divisor graphs
    entries += [
        _q("Z_2[x]/(x²)", 2, ("x",), [("x^2", "0")], ["x^2"], 4, pl),
        _q("Z_2[x]/(x³)", 2, ("x",), [("x^3", "0")], ["x^3"], 8, pl),
        _q("Z_2[x]/(x⁴)", 2, ("x",), [("x^4", "0")], ["x^4"], 16, pl),
        _q("Z_2[x,y]/(x²,xy,y²)", 2, ("x", "y"),
           [("x^2", "0"), ("x*y", "0"), ("y^2", "0")],
           ["x^2", "x*y", "y^2"], 8, pl),
        _q("Z_2[x,y]/(x²,y²)", 2, ("x", "y"),
           [("x^2", "0"), ("y^2", "0")], ["x^2", "y^2"], 16, pl),
        _q("Z_2[x,y]/(x³,xy,y²-x²)", 2, ("y", "x"),
           [("x^3", "0"), ("x*y", "0"), ("y^2", "x^2")],
           ["x^3", "x*y", "y^2 - x^2"], 16, pl),
        _q("F_4[x]/(x²)", 2, ("a", "x"),
           [("a^2", "a + 1"), ("x^2", "0")],
           ["a^2 + a + 1", "x^2"], 16, pl),
        _q("Z_3[x]/(x²)", 3, ("x",), [("x^2", "0")], ["x^2"], 9, pl),
        _q("Z_3[x]/(x³)", 3, ("x",), [("x^3", "0")], ["x^3"], 27, pl),
        _q("Z_4[x]/(x²)", 4, ("x",), [("x^2", "0")], ["x^2"], 16, pl),
        _q("Z_4[x]/(x²+x+1)", 4, ("x",), [("x^2", "3*x + 3")],
           ["x^2 + x + 1"], 16, pl),
        _q("Z_4[x]/(2x,x²)", 4, ("x",), [("2*x", "0"), ("x^2", "0")],
           ["2*x", "x^2"], 8, pl),
        _q("Z_4[x]/(x²-2,x⁴)", 4, ("x",), [("x^2", "2"), ("x^4", "0")],
           ["x^2 - 2", "x^4"], 16, pl),
        _q("Z_4[x]/(x³-2,x⁴)", 4, ("x",),
           [("x^3", "2"), ("x^4", "0"), ("2*x", "0")],
           ["x^3 - 2", "x^4"], 16, pl),
        _q("Z_4[x]/(x²-2,x³)", 4, ("x",),
           [("x^2", "2"), ("x^3", "0"), ("2*x", "0")],
           ["x^2 - 2", "x^3"], 8, pl),
        _q("Z_4[x]/(x³,x²-2x)", 4, ("x",), [("x^3", "0"), ("x^2", "2*x")],
           ["x^3", "x^2 - 2*x"], 16, pl),
        _q("Z_4[x]/(x³+x²-2,x⁴)", 4, ("x",),
           [("x^2", "2*x + 2"), ("x^4", "0")],
           ["x^3 + x^2 - 2", "x^4"], 16, pl),
        _q("Z_4[x,y]/(x²,y²,xy-2)", 4, ("x", "y"),
           [("x^2", "0"), ("y^2", "0"), ("x*y", "2"),
            ("2*x", "0"), ("2*y", "0")],
           ["x^2", "y^2", "x*y - 2"], 16, pl),
        _q("Z_4[x,y]/(x³,x²-2,xy,y²-2)", 4, ("x", "y"),
           [("x^3", "0"), ("x^2", "2"), ("x*y", "0"), ("y^2", "2"),
            ("2*x", "0"), ("2*y", "0")],
           ["x^3", "x^2 - 2", "x*y", "y^2 - 2"], 16, pl),
        _q("Z_5[x]/(x²)", 5, ("x",), [("x^2", "0")], ["x^2"], 25, pl),
        _q("Z_8[x]/(x²-4,2x)", 8, ("x",), [("x^2", "4"), ("2*x", "0")],
           ["x^2 - 4", "2*x"], 16, pl),
        _q("Z_9[x]/(x²-3,x³)", 9, ("x",),
           [("x^2", "3"), ("x^3", "0"), ("3*x", "0")],
           ["x^2 - 3", "x^3"], 27, pl),
        _q("Z_9[x]/(x²+3,x³)", 9, ("x",),
           [("x^2", "6"), ("x^3", "0"), ("3*x", "0")],
           ["x^2 + 3", "x^3"], 27, pl),
    ]

    # local quotient presentations with genus-one zero-divisor graphs
    entries += [
        _q("Z_2[x]/(x⁵)", 2, ("x",), [("x^5", "0")], ["x^5"], 32, g1),
        _q("F_8[x]/(x²)", 2, ("a", "x"),
           [("a^3", "a + 1"), ("x^2", "0")],
           ["a^3 + a + 1", "x^2"], 64, g1),
        _q("Z_2[x,y]/(x³,xy,y²)", 2, ("x", "y"),
           [("x^3", "0"), ("x*y", "0"), ("y^2", "0")],
           ["x^3", "x*y", "y^2"], 16, g1),
        _q("Z_2[x,y,z]/(x,y,z)²", 2, ("x", "y", "z"),
           [("x^2", "0"), ("x*y", "0"), ("x*z", "0"),
            ("y^2", "0"), ("y*z", "0"), ("z^2", "0")],
           ["x^2", "x*y", "x*z", "y^2", "y*z", "z^2"], 16, g1),
        _q("Z_4[x]/(x³+x+1)", 4, ("x",), [("x^3", "3*x + 3")],
           ["x^3 + x + 1"], 64, g1),
        _q("Z_4[x]/(x³-x+1)", 4, ("x",), [("x^3", "x + 3")],
           ["x^3 - x + 1"], 64, g1),
        _q("Z_4[x]/(x³-2,x⁵)", 4, ("x",),
           [("x^3", "2"), ("x^5", "0"), ("2*x^2", "0")],
           ["x^3 - 2", "x^5"], 32, g1),
        _q("Z_4[x]/(x⁴-2,x⁵)", 4, ("x",),
           [("x^4", "2"), ("x^5", "0"), ("2*x", "0")],
           ["x^4 - 2", "x^5"], 32, g1),
        _q("Z_4[x]/(x⁴+x³-2,x⁵)", 4, ("x",),
           [("x^3", "2*x + 2"), ("x^5", "0"), ("2*x^2", "0")],
           ["x^4 + x^3 - 2", "x^5"], 32, g1),
        _q("Z_4[x]/(x³,2x)", 4, ("x",), [("x^3", "0"), ("2*x", "0")],
           ["x^3", "2*x"], 16, g1),
        _q("Z_4[x,y]/(x³,x²-2,xy,y²)", 4, ("x", "y"),
           [("x^3", "0"), ("x^2", "2"), ("x*y", "0"), ("y^2", "0"),
            ("2*x", "0"), ("2*y", "0")],
           ["x^3", "x^2 - 2", "x*y", "y^2"], 16, g1),
        _q("Z_4[x,y]/(2x,2y,x²,xy,y²)", 4, ("x", "y"),
           [("2*x", "0"), ("2*y", "0"), ("x^2", "0"), ("x*y", "0"),
            ("y^2", "0")],
           ["2*x", "2*y", "x^2", "x*y", "y^2"], 16, g1),
        _q("Z_7[x]/(x²)", 7, ("x",), [("x^2", "0")], ["x^2"], 49, g1),
        _q("Z_8[x]/(x²,2x)", 8, ("x",), [("x^2", "0"), ("2*x", "0")],
           ["x^2", "2*x"], 16, g1),
        _q("Z_8[x]/(x²-2,x⁵)", 8, ("x",),
           [("x^2", "2"), ("x^5", "0"), ("4*x", "0")],
           ["x^2 - 2", "x^5"], 32, g1),
        _q("Z_8[x]/(3x²-2,x⁵)", 8, ("x",),
           [("3*x^2", "2"), ("x^5", "0"), ("4*x", "0")],
           ["3*x^2 - 2", "x^5"], 32, g1),
    ]

    # rings with exactly two maximal ideals and planar graphs at small ideals
    tm = {"two-max"}
    for q in [2, 3, 4, 5, 7, 8, 9]:
        fq = gf(*{4: (2, 2), 8: (2, 3), 9: (3, 2)}[q]) if q in (4, 8, 9) else zmod(q)
        for base in (zmod(2), zmod(3)):
            pair = sorted([base, fq], key=lambda s: (s.n or s.p**s.k, s.name))
            entries.append(_p(pair, tm))
    zx2 = quotient_algebra(2, ("x",), [("x^2", "0")], "Z_2[x]/(x²)",
                           expected_order=4)
    zx3 = quotient_algebra(2, ("x",), [("x^3", "0")], "Z_2[x]/(x³)",
                           expected_order=8)
    z3x2 = quotient_algebra(3, ("x",), [("x^2", "0")], "Z_3[x]/(x²)",
                            expected_order=9)
    z4q = quotient_algebra(4, ("x",),
                           [("x^2", "2"), ("x^3", "0"), ("2*x", "0")],
                           "Z_4[x]/(x²-2,x³)", expected_order=8)
    entries += [
        _p([zmod(2), zmod(9)], tm),
        _p([zmod(2), z3x2], tm),
        _p([zmod(2), zmod(4)], tm),
        _p([zmod(2), zx2], tm),
        _p([zmod(2), zx3], tm),
        _p([zmod(2), z4q], tm),
        _p([zmod(2), zmod(8)], tm),
        _p([zmod(3), zmod(9)], tm),
        _p([zmod(3), z3x2], tm),
        _p([zmod(3), zmod(4)], tm),
        _p([zmod(3), zx2], tm),
        _p([zmod(2), zmod(2), zmod(2)], tm),
        _p([zmod(2), zmod(2), zmod(3)], tm),
    ]

    merged: dict[str, CatalogEntry] = {}
    for e in entries:
        if e.name in merged:
            prev = merged[e.name]
            merged[e.name] = CatalogEntry(
                prev.name, prev.spec, prev.generators, prev.tags | e.tags
            )
        else:
            merged[e.name] = e
    return tuple(merged.values())


@lru_cache(maxsize=1)
def catalog_entries() -> tuple[CatalogEntry, ...]:
    return _build_entries()


def catalog() -> list[tuple[str, RingSpec]]:
    return [(e.name, e.spec) for e in catalog_entries()]


def by_tag(tag: str) -> list[CatalogEntry]:
    return [e for e in catalog_entries() if tag in e.tags]


_SUPERSCRIPTS = str.maketrans(
    {"²": "^2", "³": "^3", "⁴": "^4", "⁵": "^5", "×": "x"}
)


def _normalize(name: str) -> str:
    return name.translate(_SUPERSCRIPTS).replace(" ", "").casefold()


@lru_cache(maxsize=1)
def _name_index() -> dict[str, str]:
    index = {}
    for e in catalog_entries():
        index[_normalize(e.name)] = e.name
    return index


def find_catalog(name: str) -> CatalogEntry:
    key = _normalize(name)
    index = _name_index()
    if key not in index:
        raise InvalidSpec(f"no catalog ring named {name!r}")
    canonical = index[key]
    for e in catalog_entries():
        if e.name == canonical:
            return e
    raise AssertionError("catalog index out of sync")


@lru_cache(maxsize=None)
def catalog_ring(name: str) -> RingTable:
    return build_ring(find_catalog(name).spec)
