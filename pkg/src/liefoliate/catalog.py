"""Catalog of irreducible symmetric spaces of noncompact type.

Each catalog entry records the restricted root system family, the rank, the
multiplicities of the simple roots (and of the doubled root for the
non-reduced family BC), and, where known, the dimension of the centralizer
k0 of a maximal flat inside the isotropy algebra.  The entry table itself is
shipped as ``data/catalog.json``.

Lookups accept either flattened ASCII identifiers such as ``sl(5,R)``,
``SL5``, ``SOo(5,2)``, ``su(3,1)``, ``e6(-14)`` or concrete display names
such as ``SL_5(R)/SO_5`` and ``Sp_{2,2}/Sp_2 Sp_2``.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from importlib import resources

from .errors import LieFoliateError
from .roots import Family, Root, RootSystem, build_root_system, inner


@dataclass(frozen=True)
class CatalogEntry:
    """One record of the shipped catalog table (possibly rank-parameterized)."""

    key: str
    ascii_doc: str
    display_doc: str
    ascii_fmt: str
    display_fmt: str
    family: Family
    rank_doc: str
    fixed_rank: int | None
    mult_pattern: str
    mult_head: tuple[int, int] | None
    mult_last: tuple[int, int] | None
    mult_last_double: tuple[int, int] | None
    mult_explicit: tuple[int, ...] | None
    dim_k0: int | None
    notes: tuple[str, ...]


def _linear(form: tuple[int, int] | None, n: int | None) -> int | None:
    if form is None:
        return None
    a, b = form
    if a != 0 and n is None:
        raise LieFoliateError("entry requires a secondary parameter")
    return a * (n or 0) + b


@lru_cache(maxsize=1)
def catalog_entries() -> tuple[CatalogEntry, ...]:
    """All records of the shipped catalog data file, in file order."""
    raw = json.loads(resources.files("liefoliate.data").joinpath("catalog.json").read_text())

    def linear(form):
        return (form["a"], form["b"]) if form else None

    entries = []
    for rec in raw["entries"]:
        m = rec["mults"]
        entries.append(
            CatalogEntry(
                key=rec["key"],
                ascii_doc=rec["ascii_doc"],
                display_doc=rec["display_doc"],
                ascii_fmt=rec["ascii"],
                display_fmt=rec["display"],
                family=Family(rec["family"]),
                rank_doc=rec["rank_doc"],
                fixed_rank=rec["rank"],
                mult_pattern=m["pattern"],
                mult_head=linear(m["head"]),
                mult_last=linear(m["last"]),
                mult_last_double=linear(m["last_double"]),
                mult_explicit=tuple(m["explicit"]) if m["explicit"] else None,
                dim_k0=rec["dim_k0"],
                notes=tuple(rec["notes"]),
            )
        )
    return tuple(entries)


@lru_cache(maxsize=1)
def _entry_map() -> dict[str, CatalogEntry]:
    return {e.key: e for e in catalog_entries()}


@dataclass(frozen=True)
class SpaceDescriptor:
    """A concrete symmetric space: family, rank, and simple-root multiplicities.

    ``simple_mults`` holds one integer per simple root; for the BC family the
    last entry is the pair (m_alpha, m_2alpha).
    """

    name: str
    display: str
    family: Family
    rank: int
    simple_mults: tuple
    dim_k0: int | None
    entry_key: str
    notes: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if len(self.simple_mults) != self.rank:
            raise LieFoliateError("multiplicity vector length must equal the rank")

    def m_alpha(self, index: int) -> int:
        """Multiplicity of the simple root alpha_index (1-based)."""
        if not 1 <= index <= self.rank:
            raise LieFoliateError(f"simple root index {index} out of range 1..{self.rank}")
        entry = self.simple_mults[index - 1]
        return entry[0] if isinstance(entry, tuple) else entry

    def m_2alpha(self, index: int) -> int:
        """Multiplicity of 2*alpha_index, zero when that is not a root."""
        if not 1 <= index <= self.rank:
            raise LieFoliateError(f"simple root index {index} out of range 1..{self.rank}")
        entry = self.simple_mults[index - 1]
        return entry[1] if isinstance(entry, tuple) else 0

    @cached_property
    def root_system(self) -> RootSystem:
        return build_root_system(self.family, self.rank)

    @cached_property
    def multiplicities(self) -> "MultiplicityFunction":
        return MultiplicityFunction.for_space(self)

    @cached_property
    def dimension(self) -> int:
        return space_dimension(self)

    @property
    def is_split(self) -> bool:
        return self.dim_k0 == 0 and all(self.m_alpha(i) == 1 for i in range(1, self.rank + 1))

    def to_dict(self) -> dict:
        mults = [list(m) if isinstance(m, tuple) else m for m in self.simple_mults]
        return {
            "name": self.name,
            "display": self.display,
            "family": self.family.value,
            "rank": self.rank,
            "simple_mults": mults,
            "dim_k0": self.dim_k0,
            "dimension": self.dimension,
            "entry_key": self.entry_key,
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SpaceDescriptor":
        return catalog_lookup(data["name"])


@dataclass(frozen=True)
class MultiplicityFunction:
    """Root multiplicities, constant on each length class of the root system.

    The catalog provides multiplicities on the simple roots only; the value on
    an arbitrary root is read off from its squared length (length classes and
    Weyl orbits coincide for the ten irreducible families).
    """

    classes: tuple[tuple[Fraction, int], ...]

    @classmethod
    def for_space(cls, space: SpaceDescriptor) -> "MultiplicityFunction":
        rs = space.root_system
        table: dict[Fraction, int] = {}
        for i, alpha in enumerate(rs.simple, start=1):
            length = inner(alpha, alpha)
            m = space.m_alpha(i)
            if table.setdefault(length, m) != m:
                raise LieFoliateError(
                    f"{space.name}: simple roots of equal length carry different multiplicities"
                )
        if space.family is Family.BC:
            alpha_r = rs.simple[-1]
            table[4 * inner(alpha_r, alpha_r)] = space.m_2alpha(space.rank)
        missing = set(rs.length_classes) - set(table)
        if missing:
            raise LieFoliateError(f"{space.name}: no multiplicity for length classes {missing}")
        return cls(tuple(sorted(table.items())))

    @cached_property
    def _table(self) -> dict[Fraction, int]:
        return dict(self.classes)

    def __call__(self, root: Root) -> int:
        length = inner(root, root)
        try:
            return self._table[length]
        except KeyError:
            raise LieFoliateError(f"no multiplicity recorded for a root of squared length {length}")


def root_multiplicity(space: SpaceDescriptor, lam: Root) -> int:
    """Multiplicity of a root of the space's restricted root system."""
    if lam not in space.root_system.roots:
        raise LieFoliateError(f"{lam} is not a restricted root of {space.name}")
    return space.multiplicities(lam)


def space_dimension(space: SpaceDescriptor) -> int:
    """dim M = rank + sum of the multiplicities over the positive roots."""
    mult = space.multiplicities
    return space.rank + sum(mult(lam) for lam in space.root_system.positive)


def _instantiate(key: str, *, r: int | None = None, n: int | None = None, **fmt) -> SpaceDescriptor:
    entry = _entry_map()[key]
    rank = entry.fixed_rank if entry.fixed_rank is not None else r
    fmt = {"r": rank, "n": n, **fmt}
    if entry.mult_explicit is not None:
        mults: list = list(entry.mult_explicit)
    else:
        head = _linear(entry.mult_head, n)
        last = _linear(entry.mult_last, n)
        mults = [head] * rank
        if last is not None:
            mults[-1] = last
    if entry.family is Family.BC:
        m2 = _linear(entry.mult_last_double, n)
        mults[-1] = (mults[-1], m2)
        if m2 not in (1, 3, 7):
            raise LieFoliateError(f"{key}: doubled-root multiplicity must be 1, 3 or 7")
    dim_k0 = entry.dim_k0
    if dim_k0 is None and all(m == 1 for m in mults):
        # All multiplicities one means the split real form, whose flat has a
        # trivial centralizer in the isotropy algebra.
        dim_k0 = 0
    return SpaceDescriptor(
        name=entry.ascii_fmt % fmt,
        display=entry.display_fmt % fmt,
        family=entry.family,
        rank=rank,
        simple_mults=tuple(mults),
        dim_k0=dim_k0,
        entry_key=key,
        notes=entry.notes,
    )


def _normalize(name: str) -> str:
    out = name.lower()
    for ch in (" ", "_", "{", "}", "\\", "^", "\t"):
        out = out.replace(ch, "")
    return out


def _sl(m: int, letter: str) -> SpaceDescriptor:
    if m < 2:
        raise LieFoliateError(f"sl({m},{letter.upper()}): valid for m >= 2")
    key = {"r": "sl_R", "c": "sl_C", "h": "sl_H"}[letter]
    return _instantiate(key, r=m - 1, m=m)


def _so_real(p: int, q: int) -> SpaceDescriptor:
    p, q = max(p, q), min(p, q)
    if q < 1:
        raise LieFoliateError("so(p,q): indices must be positive")
    if q == 1:
        if p < 3:
            raise LieFoliateError(
                "so(p,1): valid for p >= 3 (the hyperbolic plane so(2,1) is carried by sl(2,R))"
            )
        return _instantiate("so_hyp", n=p - 1, m=p)
    if p == q:
        if p < 3:
            raise LieFoliateError("so(r,r): valid for r >= 3")
        return _instantiate("so_rr", r=p)
    if q < 2:
        raise LieFoliateError("so(p,q): valid for p > q >= 2, p = q >= 3, or q = 1 with p >= 3")
    return _instantiate("so_pq", r=q, n=p - q, p=p, q=q)


def _so_complex(m: int) -> SpaceDescriptor:
    if m < 5:
        raise LieFoliateError("so(m,C): valid for m >= 5 (so(3,C) and so(4,C) reduce to other entries)")
    if m % 2:
        return _instantiate("so_C_odd", r=(m - 1) // 2, m=m)
    return _instantiate("so_C_even", r=m // 2, m=m)


def _so_quaternion(m: int) -> SpaceDescriptor:
    if m < 3:
        raise LieFoliateError("so(m,H): valid for m >= 3")
    if m % 2:
        return _instantiate("so_H_odd", r=(m - 1) // 2, m=m)
    return _instantiate("so_H_even", r=m // 2, m=m)


def _sp_real(r: int) -> SpaceDescriptor:
    if r < 2:
        raise LieFoliateError("sp(r,R): valid for r >= 2 (sp(1,R) is carried by sl(2,R))")
    return _instantiate("sp_R", r=r)


def _sp_complex(r: int) -> SpaceDescriptor:
    if r < 2:
        raise LieFoliateError("sp(r,C): valid for r >= 2 (sp(1,C) is carried by sl(2,C))")
    return _instantiate("sp_C", r=r)


def _sp_pq(p: int, q: int) -> SpaceDescriptor:
    p, q = max(p, q), min(p, q)
    if p == q:
        if p < 2:
            raise LieFoliateError("sp(p,q): valid for p = q >= 2 or p > q >= 1")
        return _instantiate("sp_rr", r=p)
    if q < 1:
        raise LieFoliateError("sp(p,q): indices must be positive")
    return _instantiate("sp_pq", r=q, n=p - q, p=p, q=q)


def _su_pq(p: int, q: int) -> SpaceDescriptor:
    p, q = max(p, q), min(p, q)
    if p == q:
        if p < 2:
            raise LieFoliateError("su(p,q): valid for p = q >= 2 or p > q >= 1 (su(1,1) is carried by sl(2,R))")
        return _instantiate("su_rr", r=p)
    if q < 1:
        raise LieFoliateError("su(p,q): indices must be positive")
    return _instantiate("su_pq", r=q, n=p - q, p=p, q=q)


_EXCEPTIONAL_KEYS = {
    ("e6", "6"): "e6_6", ("e6", "2"): "e6_2", ("e6", "-14"): "e6_m14",
    ("e6", "-26"): "e6_m26", ("e6", "c"): "e6_C",
    ("e7", "7"): "e7_7", ("e7", "-5"): "e7_m5", ("e7", "-25"): "e7_m25", ("e7", "c"): "e7_C",
    ("e8", "8"): "e8_8", ("e8", "-24"): "e8_m24", ("e8", "c"): "e8_C",
    ("f4", "4"): "f4_4", ("f4", "-20"): "f4_m20", ("f4", "c"): "f4_C",
    ("g2", "2"): "g2_2", ("g2", "c"): "g2_C",
}


def _exceptional(letter: str, tag: str) -> SpaceDescriptor:
    key = _EXCEPTIONAL_KEYS.get((letter, tag))
    if key is None:
        valid = sorted(t for (l, t) in _EXCEPTIONAL_KEYS if l == letter)
        raise LieFoliateError(f"{letter}({tag}): valid tags are {', '.join(valid)}")
    return _instantiate(key)


# Patterns over the normalized query string.  Display names and flattened
# identifiers both resolve; two-index names may be given in either order.
_PATTERNS: list[tuple[re.Pattern, callable]] = [
    (re.compile(r"^sl(\d+)$"), lambda m: _sl(int(m[1]), "r")),
    (re.compile(r"^sl\((\d+),([rch])\)$"), lambda m: _sl(int(m[1]), m[2])),
    (re.compile(r"^sl(\d+)\(r\)/so(\d+)$"), lambda m: _sl(int(m[1]), "r")),
    (re.compile(r"^sl(\d+)\(c\)/su(\d+)$"), lambda m: _sl(int(m[1]), "c")),
    (re.compile(r"^sl(\d+)\(h\)/sp(\d+)$"), lambda m: _sl(int(m[1]), "h")),
    (re.compile(r"^soo?\((\d+),(\d+)\)$"), lambda m: _so_real(int(m[1]), int(m[2]))),
    (re.compile(r"^soo(\d+),(\d+)(/so\d+(so\d+)?)?$"), lambda m: _so_real(int(m[1]), int(m[2]))),
    (re.compile(r"^so\((\d+),c\)$"), lambda m: _so_complex(int(m[1]))),
    (re.compile(r"^so(\d+)\(c\)/so(\d+)$"), lambda m: _so_complex(int(m[1]))),
    (re.compile(r"^so\((\d+),h\)$"), lambda m: _so_quaternion(int(m[1]))),
    (re.compile(r"^so(\d+)\(h\)/u(\d+)$"), lambda m: _so_quaternion(int(m[1]))),
    (re.compile(r"^sp\((\d+),r\)$"), lambda m: _sp_real(int(m[1]))),
    (re.compile(r"^sp(\d+)\(r\)/u(\d+)$"), lambda m: _sp_real(int(m[1]))),
    (re.compile(r"^sp\((\d+),c\)$"), lambda m: _sp_complex(int(m[1]))),
    (re.compile(r"^sp(\d+)\(c\)/sp(\d+)$"), lambda m: _sp_complex(int(m[1]))),
    (re.compile(r"^sp\((\d+),(\d+)\)$"), lambda m: _sp_pq(int(m[1]), int(m[2]))),
    (re.compile(r"^sp(\d+),(\d+)(/sp\d+sp\d+)?$"), lambda m: _sp_pq(int(m[1]), int(m[2]))),
    (re.compile(r"^su\((\d+),(\d+)\)$"), lambda m: _su_pq(int(m[1]), int(m[2]))),
    (re.compile(r"^su(\d+),(\d+)(/s\(u\d+u\d+\))?$"), lambda m: _su_pq(int(m[1]), int(m[2]))),
    (re.compile(r"^(e6|e7|e8|f4|g2)\((c|-?\d+)\)$"), lambda m: _exceptional(m[1], m[2])),
    (re.compile(r"^(e6|e7|e8|f4|g2)(c|-?\d+)(/[a-z0-9()]+)?$"), lambda m: _exceptional(m[1], m[2])),
]

_GRAMMAR_HELP = (
    "sl(m,R)|SL<m>, sl(m,C), sl(m,H) for m >= 2; so(p,q)|SOo(p,q) with q=1 (p>=3), "
    "p=q>=3, or p>q>=2; so(m,C) m>=5; so(m,H) m>=3; sp(r,R), sp(r,C) r>=2; sp(p,q); "
    "su(p,q); e6(6|2|-14|-26|C), e7(7|-5|-25|C), e8(8|-24|C), f4(4|-20|C), g2(2|C); "
    "display names such as SL_5(R)/SO_5 also resolve"
)


def catalog_lookup(name: str) -> SpaceDescriptor:
    """Resolve a symmetric-space name to its catalog descriptor.

    Unknown names are rejected with a summary of the valid grammar.
    """
    query = _normalize(name)
    for pattern, handler in _PATTERNS:
        m = pattern.match(query)
        if m:
            return handler(m)
    raise LieFoliateError(f"unknown symmetric space {name!r}; valid names: {_GRAMMAR_HELP}")
