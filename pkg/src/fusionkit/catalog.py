"""The bundled group catalog and group-spec file loading.

A group spec is a JSON object ``{"name": str, "degree": int,
"generators": [cycle strings], optional "prime": int, optional "order":
int}``.  The catalog directory ships one such file per named group;
``load_group_spec`` accepts either a catalog name or a path to a spec
file.
"""

from __future__ import annotations

import json
from pathlib import Path

from .errors import InputError, ParseError, UnknownCatalogName
from .groups import DEFAULT_ORDER_BOUND, Group, is_prime
from .perms import parse_perm

_CATALOG_DIR = Path(__file__).resolve().parent / "catalog"


def catalog_names() -> tuple[str, ...]:
    return tuple(sorted(p.stem for p in _CATALOG_DIR.glob("*.json")))


def load_catalog(name: str) -> dict:
    path = _CATALOG_DIR / f"{name}.json"
    if not path.is_file():
        raise UnknownCatalogName(
            f"unknown catalog group {name!r}; known names: {', '.join(catalog_names())}",
            witness=name,
        )
    return json.loads(path.read_text())


def make_group(spec: dict, *, order_bound: int | None = DEFAULT_ORDER_BOUND) -> Group:
    """Build the permutation group described by a group spec."""
    if not isinstance(spec, dict):
        raise ParseError(f"group spec must be a JSON object, got {type(spec).__name__}")
    missing = [k for k in ("degree", "generators") if k not in spec]
    if missing:
        raise ParseError(f"group spec is missing {', '.join(missing)}", witness=spec)
    degree = spec["degree"]
    if not isinstance(degree, int) or degree < 1:
        raise ParseError(f"degree must be a positive integer, got {degree!r}")
    raw = spec["generators"]
    if not isinstance(raw, list):
        raise ParseError("generators must be a list of permutations", witness=raw)
    gens = [parse_perm(g, degree) for g in raw]
    name = spec.get("name")
    if name is not None and not isinstance(name, str):
        raise ParseError(f"name must be a string, got {name!r}")
    prime = spec.get("prime")
    if prime is not None and (not isinstance(prime, int) or not is_prime(prime)):
        raise ParseError(f"prime must be a prime number, got {prime!r}")
    G = Group(gens, degree, name=name, generators=gens, order_bound=order_bound)
    declared = spec.get("order")
    if declared is not None and declared != len(G):
        raise ParseError(
            f"spec declares order {declared} but the generators produce order {len(G)}"
        )
    return G


def load_group_spec(
    source: str, *, order_bound: int | None = DEFAULT_ORDER_BOUND
) -> tuple[Group, int | None]:
    """Resolve a CLI group argument: a spec-file path or a catalog name.

    Returns the group together with the spec file's preferred prime, if any.
    """
    looks_like_path = source.endswith(".json") or "/" in source
    if looks_like_path or Path(source).is_file():
        path = Path(source)
        if not path.is_file():
            raise InputError(f"no such group spec file: {source}")
        try:
            spec = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON in {source}: {exc}") from None
    else:
        spec = load_catalog(source)
    group = make_group(spec, order_bound=order_bound)
    return group, spec.get("prime")
