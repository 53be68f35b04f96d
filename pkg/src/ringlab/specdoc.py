"""Versioned JSON spec documents describing ring constructions.

A document carries a construction AST (``zmod``, ``algebra``, ``product``,
``quotient``, ``trivial_extension``) plus optional named ideals given by
generator expressions.  Every node validates to a legal table or is rejected
with a diagnostic.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

from . import core
from .core import DEFAULT_GUARDS, GuardConfig, ModuleTable, RingTable
from .errors import SpecError
from .ideals import IdealSet, generate_ideal

SPEC_VERSION = 1


# -- construction AST ----------------------------------------------------------


@dataclass(frozen=True)
class ZmodSpec:
    n: int


@dataclass(frozen=True)
class AlgebraSpec:
    modulus: int
    basis: Tuple[str, ...]
    products: Tuple[Tuple[str, str, str], ...]  # (left, right, value expression)
    name: Optional[str] = None


@dataclass(frozen=True)
class ProductSpec:
    factors: Tuple["RingSpec", ...]


@dataclass(frozen=True)
class QuotientSpec:
    base: "RingSpec"
    gens: Tuple[Any, ...]


@dataclass(frozen=True)
class SelfModuleSpec:
    pass


@dataclass(frozen=True)
class QuotientModuleSpec:
    gens: Tuple[Any, ...]


@dataclass(frozen=True)
class DirectSumSpec:
    parts: Tuple["ModuleSpec", ...]


ModuleSpec = Union[SelfModuleSpec, QuotientModuleSpec, DirectSumSpec]


@dataclass(frozen=True)
class TrivialExtensionSpec:
    base: "RingSpec"
    module: ModuleSpec


RingSpec = Union[ZmodSpec, AlgebraSpec, ProductSpec, QuotientSpec, TrivialExtensionSpec]


@dataclass
class SpecDocument:
    version: int
    ring: RingSpec
    ideals: Dict[str, List[Any]] = field(default_factory=dict)


# -- parsing --------------------------------------------------------------------


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise SpecError(msg)


def parse_ring_spec(obj: Any) -> RingSpec:
    _expect(isinstance(obj, dict), "ring spec node must be an object")
    kind = obj.get("kind")
    if kind == "zmod":
        n = obj.get("n")
        _expect(isinstance(n, int), "zmod spec needs an integer 'n'")
        return ZmodSpec(n=n)
    if kind == "algebra":
        modulus = obj.get("modulus")
        basis = obj.get("basis")
        products = obj.get("products")
        _expect(isinstance(modulus, int), "algebra spec needs an integer 'modulus'")
        _expect(
            isinstance(basis, list) and all(isinstance(b, str) for b in basis),
            "algebra spec needs a list of basis name strings",
        )
        _expect(isinstance(products, dict), "algebra spec needs a 'products' mapping")
        prods = []
        for key, value in sorted(products.items()):
            _expect(isinstance(key, str) and key.count("*") == 1,
                    f"product key {key!r} must look like 'a*b'")
            _expect(isinstance(value, str), f"product value for {key!r} must be a string")
            left, right = key.split("*")
            prods.append((left.strip(), right.strip(), value))
        return AlgebraSpec(
            modulus=modulus, basis=tuple(basis), products=tuple(prods),
            name=obj.get("name"),
        )
    if kind == "product":
        factors = obj.get("factors")
        _expect(isinstance(factors, list) and factors, "product spec needs factors")
        return ProductSpec(factors=tuple(parse_ring_spec(f) for f in factors))
    if kind == "quotient":
        _expect("base" in obj, "quotient spec needs a 'base'")
        gens = obj.get("gens", [])
        _expect(isinstance(gens, list), "quotient 'gens' must be a list")
        return QuotientSpec(base=parse_ring_spec(obj["base"]), gens=_freeze(gens))
    if kind == "trivial_extension":
        _expect("base" in obj, "trivial_extension spec needs a 'base'")
        _expect("module" in obj, "trivial_extension spec needs a 'module'")
        return TrivialExtensionSpec(
            base=parse_ring_spec(obj["base"]),
            module=parse_module_spec(obj["module"]),
        )
    raise SpecError(f"unknown ring spec kind {kind!r}")


def parse_module_spec(obj: Any) -> ModuleSpec:
    _expect(isinstance(obj, dict), "module spec node must be an object")
    kind = obj.get("kind")
    if kind == "self":
        return SelfModuleSpec()
    if kind == "quotient_module":
        gens = obj.get("gens", [])
        _expect(isinstance(gens, list), "quotient_module 'gens' must be a list")
        return QuotientModuleSpec(gens=_freeze(gens))
    if kind == "direct_sum":
        parts = obj.get("parts")
        _expect(isinstance(parts, list) and parts, "direct_sum spec needs parts")
        return DirectSumSpec(parts=tuple(parse_module_spec(p) for p in parts))
    raise SpecError(f"unknown module spec kind {kind!r}")


def _freeze(value: Any) -> Any:
    if isinstance(value, list):
        return tuple(_freeze(v) for v in value)
    return value


def _thaw(value: Any) -> Any:
    if isinstance(value, tuple):
        return [_thaw(v) for v in value]
    return value


def parse_spec_document(text: str) -> SpecDocument:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(
            f"syntax error at line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    _expect(isinstance(obj, dict), "spec document must be a JSON object")
    version = obj.get("version")
    _expect(version == SPEC_VERSION, f"unsupported spec version {version!r}")
    _expect("ring" in obj, "spec document needs a 'ring' node")
    ring = parse_ring_spec(obj["ring"])
    ideals = obj.get("ideals", {})
    _expect(isinstance(ideals, dict), "'ideals' must map names to generator lists")
    for name, gens in ideals.items():
        _expect(isinstance(gens, list), f"ideal {name!r} must list generator expressions")
    return SpecDocument(version=version, ring=ring, ideals=dict(ideals))


# -- serialization ----------------------------------------------------------------


def ring_spec_to_json(spec: RingSpec) -> Dict[str, Any]:
    if isinstance(spec, ZmodSpec):
        return {"kind": "zmod", "n": spec.n}
    if isinstance(spec, AlgebraSpec):
        out: Dict[str, Any] = {
            "kind": "algebra",
            "modulus": spec.modulus,
            "basis": list(spec.basis),
            "products": {f"{l}*{r}": v for l, r, v in spec.products},
        }
        if spec.name:
            out["name"] = spec.name
        return out
    if isinstance(spec, ProductSpec):
        return {"kind": "product", "factors": [ring_spec_to_json(f) for f in spec.factors]}
    if isinstance(spec, QuotientSpec):
        return {
            "kind": "quotient",
            "base": ring_spec_to_json(spec.base),
            "gens": _thaw(list(spec.gens)),
        }
    if isinstance(spec, TrivialExtensionSpec):
        return {
            "kind": "trivial_extension",
            "base": ring_spec_to_json(spec.base),
            "module": module_spec_to_json(spec.module),
        }
    raise SpecError(f"cannot serialize {spec!r}")


def module_spec_to_json(spec: ModuleSpec) -> Dict[str, Any]:
    if isinstance(spec, SelfModuleSpec):
        return {"kind": "self"}
    if isinstance(spec, QuotientModuleSpec):
        return {"kind": "quotient_module", "gens": _thaw(list(spec.gens))}
    if isinstance(spec, DirectSumSpec):
        return {"kind": "direct_sum", "parts": [module_spec_to_json(p) for p in spec.parts]}
    raise SpecError(f"cannot serialize {spec!r}")


# -- element expressions -----------------------------------------------------------

_TERM_RE = re.compile(r"^(?:(\d+)\*)?([A-Za-z_][A-Za-z_0-9]*|\d+)$")


def _algebra_vector(basis: Sequence[str], modulus: int, expr: str) -> Tuple[int, ...]:
    vec = [0] * len(basis)
    expr = expr.replace(" ", "")
    if expr == "0":
        return tuple(vec)
    for term in expr.split("+"):
        match = _TERM_RE.match(term)
        if not match:
            raise SpecError(f"cannot parse term {term!r} in element expression {expr!r}")
        coeff_s, atom = match.groups()
        coeff = int(coeff_s) if coeff_s else 1
        if atom.isdigit():
            if coeff_s:
                raise SpecError(f"term {term!r} mixes two numeric factors")
            coeff, atom = int(atom), "1"
        if atom not in basis:
            raise SpecError(f"unknown basis name {atom!r} in {expr!r}")
        if not 0 <= coeff < modulus:
            raise SpecError(f"coefficient {coeff} out of range [0,{modulus}) in {expr!r}")
        idx = basis.index(atom)
        vec[idx] = (vec[idx] + coeff) % modulus
    return tuple(vec)


def parse_element(ring: RingTable, expr: Any) -> int:
    """Resolve an element expression relative to a constructed ring."""
    kind = ring.kind
    if kind == "zmod":
        _expect(isinstance(expr, int) or (isinstance(expr, str) and expr.lstrip("-").isdigit()),
                f"element of {ring.name} must be an integer, got {expr!r}")
        value = int(expr)
        if not 0 <= value < ring.size:
            raise SpecError(f"element {value} out of range [0,{ring.size}) for {ring.name}")
        return value
    if kind == "algebra":
        if isinstance(expr, int):
            expr = str(expr)
        _expect(isinstance(expr, str), f"element of {ring.name} must be an expression string")
        assert ring.basis is not None and ring.modulus is not None
        vec = _algebra_vector(ring.basis, ring.modulus, expr)
        idx = 0
        for c in vec:
            idx = idx * ring.modulus + c
        return idx
    if kind == "product":
        assert ring.factors is not None
        _expect(
            isinstance(expr, (list, tuple)) and len(expr) == len(ring.factors),
            f"element of {ring.name} must be a tuple of {len(ring.factors)} components",
        )
        idx = 0
        for factor, comp in zip(ring.factors, expr):
            idx = idx * factor.size + parse_element(factor, comp)
        return idx
    if kind == "quotient":
        assert ring.quotient_of is not None
        base, _, projection = ring.quotient_of
        return projection[parse_element(base, expr)]
    if kind == "trivial_extension":
        assert ring.extension is not None
        base, module = ring.extension
        _expect(
            isinstance(expr, (list, tuple)) and len(expr) == 2,
            f"element of {ring.name} must be a pair [ring part, module part]",
        )
        a = parse_element(base, expr[0])
        e = parse_module_element(module, expr[1])
        return a * module.size + e
    # raw / local-factor rings: plain element ids
    _expect(isinstance(expr, int) and 0 <= expr < ring.size,
            f"element of {ring.name} must be an element id")
    return int(expr)


def parse_module_element(module: ModuleTable, expr: Any) -> int:
    kind = module.kind
    if kind == "self":
        return parse_element(module.ring, expr)
    if kind == "quotient":
        projection = getattr(module, "projection", None)
        assert projection is not None
        return projection[parse_element(module.ring, expr)]
    if kind == "direct_sum":
        parts = getattr(module, "parts")
        _expect(
            isinstance(expr, (list, tuple)) and len(expr) == len(parts),
            f"element of {module.name} must be a tuple of {len(parts)} components",
        )
        idx = 0
        for part, comp in zip(parts, expr):
            idx = idx * part.size + parse_module_element(part, comp)
        return idx
    _expect(isinstance(expr, int) and 0 <= expr < module.size,
            f"element of {module.name} must be an element id")
    return int(expr)


# -- building -----------------------------------------------------------------------


def _algebra_table(spec: AlgebraSpec) -> List[List[Tuple[int, ...]]]:
    basis = spec.basis
    d = len(basis)
    _expect(d > 0 and basis[0] == "1", 'algebra basis must start with "1"')
    table: List[List[Optional[Tuple[int, ...]]]] = [[None] * d for _ in range(d)]
    unit = lambda i: tuple(1 if k == i else 0 for k in range(d))
    for j in range(d):
        table[0][j] = unit(j)
        table[j][0] = unit(j)
    for left, right, value in spec.products:
        for atom in (left, right):
            if atom not in basis:
                raise SpecError(f"unknown basis name {atom!r} in product key")
        i, j = basis.index(left), basis.index(right)
        vec = _algebra_vector(basis, spec.modulus, value)
        for a, b in ((i, j), (j, i)):
            if table[a][b] is not None and table[a][b] != vec:
                raise SpecError(
                    f"conflicting products given for {basis[a]}*{basis[b]}"
                )
            table[a][b] = vec
    for i in range(d):
        for j in range(d):
            if table[i][j] is None:
                raise SpecError(f"missing product {basis[i]}*{basis[j]} in algebra spec")
    return [[tuple(v) for v in row] for row in table]  # type: ignore[misc]


def build_module(spec: ModuleSpec, ring: RingTable,
                 guards: GuardConfig = DEFAULT_GUARDS) -> ModuleTable:
    if isinstance(spec, SelfModuleSpec):
        return core.module_from_ring(ring, guards=guards)
    if isinstance(spec, QuotientModuleSpec):
        gens = [parse_element(ring, g) for g in spec.gens]
        module = core.quotient_module(ring, gens, guards=guards)
        return module
    if isinstance(spec, DirectSumSpec):
        parts = [build_module(p, ring, guards) for p in spec.parts]
        return core.direct_sum_module(parts, guards=guards)
    raise SpecError(f"unknown module spec {spec!r}")


def build_ring(spec: RingSpec, guards: GuardConfig = DEFAULT_GUARDS) -> RingTable:
    """Build and validate the ring described by a construction AST node."""
    if isinstance(spec, ZmodSpec):
        return core.build_zmod(spec.n, guards=guards)
    if isinstance(spec, AlgebraSpec):
        table = _algebra_table(spec)
        return core.build_algebra(
            spec.modulus, spec.basis, table, guards=guards, name=spec.name
        )
    if isinstance(spec, ProductSpec):
        return core.build_product([build_ring(f, guards) for f in spec.factors], guards=guards)
    if isinstance(spec, QuotientSpec):
        base = build_ring(spec.base, guards)
        gens = [parse_element(base, g) for g in spec.gens]
        ideal = generate_ideal(base, gens)
        quotient, _ = core.build_quotient(base, ideal, guards=guards)
        return quotient
    if isinstance(spec, TrivialExtensionSpec):
        base = build_ring(spec.base, guards)
        module = build_module(spec.module, base, guards)
        return core.build_trivial_extension(base, module, guards=guards)
    raise SpecError(f"unknown ring spec {spec!r}")


def resolve_ideal(ring: RingTable, gens: Sequence[Any]) -> IdealSet:
    return generate_ideal(ring, [parse_element(ring, g) for g in gens])
