"""
Text format for rings, automorphisms and the groups they generate.

    ring <name>
    add d1 ... dk
    mul i j -> c1 ... ck        # 1-based generators; omitted products are zero
    unit c1 ... ck              # optional
    aut <name>
    gen i -> c1 ... ck          # one line per generator
    group <name> = <aut> ...    # empty list for the trivial group

Blank lines and `#` comments are ignored. One block may carry several groups; each
group yields one instance named `<ring>/<group>`.
"""
import json
import logging
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence

from algebra.catalog import Instance, make_instance
from algebra.errors import InvalidAutomorphism, ParseError, RingError, ValidationError
from algebra.groups import RingAutomorphism, validate_automorphism
from algebra.ring_core import FiniteRing, validate_ring
from models.report_models import Caps
from models.ring_models import AutomorphismSpec, GroupSpec, InstanceSummary, RingSpec

logger = logging.getLogger(__name__)


def _ints(tokens: Sequence[str], line: int, what: str) -> List[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(line, f"{what} must be integers, got {' '.join(tokens)!r}")


def _arrow(tokens: Sequence[str], line: int, n_index: int, k: int, keyword: str):
    """Split `i [j] -> c1 ... ck` into 0-based indices and coordinates."""
    if len(tokens) < n_index + 1 or tokens[n_index] != "->":
        raise ParseError(line, f"expected '{keyword} {' '.join('i j'.split()[:n_index])} -> c1 ... ck'")
    indices = _ints(tokens[:n_index], line, "indices")
    coords = _ints(tokens[n_index + 1:], line, "coordinates")
    if len(coords) != k:
        raise ParseError(line, f"expected {k} coordinates, got {len(coords)}")
    if any(not 1 <= i <= k for i in indices):
        raise ParseError(line, f"generator index out of range 1..{k}")
    return [i - 1 for i in indices], coords


def parse_text(text: str) -> List[RingSpec]:
    specs: List[RingSpec] = []
    spec: Optional[RingSpec] = None
    aut: Optional[AutomorphismSpec] = None
    images: Dict[int, List[int]] = {}

    def close_aut(line: int):
        nonlocal aut, images
        if aut is None:
            return
        k = len(spec.orders)
        if sorted(images) != list(range(k)):
            raise ParseError(line, f"automorphism {aut.name!r} needs one gen line per generator")
        aut.images = [images[i] for i in range(k)]
        spec.automorphisms.append(aut)
        aut, images = None, {}

    for number, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        keyword, rest = tokens[0], tokens[1:]
        if keyword == "ring":
            if spec is not None:
                close_aut(number)
            if len(rest) != 1:
                raise ParseError(number, "expected 'ring <name>'")
            spec = RingSpec(name=rest[0], orders=[], table=[], line=number)
            specs.append(spec)
            continue
        if spec is None:
            raise ParseError(number, f"{keyword!r} before any 'ring' header")
        k = len(spec.orders)
        if keyword == "add":
            if spec.orders:
                raise ParseError(number, "duplicate 'add' line")
            orders = _ints(rest, number, "cyclic orders")
            if not orders or any(d < 2 for d in orders):
                raise ParseError(number, "cyclic orders must be integers >= 2")
            spec.orders = orders
            spec.table = [[[0] * len(orders) for _ in orders] for _ in orders]
        elif not spec.orders:
            raise ParseError(number, f"{keyword!r} before the 'add' line")
        elif keyword == "mul":
            (i, j), coords = _arrow(rest, number, 2, k, "mul")
            spec.table[i][j] = coords
        elif keyword == "unit":
            coords = _ints(rest, number, "coordinates")
            if len(coords) != k:
                raise ParseError(number, f"expected {k} coordinates, got {len(coords)}")
            spec.identity = coords
        elif keyword == "aut":
            close_aut(number)
            if len(rest) != 1:
                raise ParseError(number, "expected 'aut <name>'")
            if any(a.name == rest[0] for a in spec.automorphisms):
                raise ParseError(number, f"duplicate automorphism {rest[0]!r}")
            aut = AutomorphismSpec(name=rest[0], images=[])
        elif keyword == "gen":
            if aut is None:
                raise ParseError(number, "'gen' outside an 'aut' block")
            (i,), coords = _arrow(rest, number, 1, k, "gen")
            images[i] = coords
        elif keyword == "group":
            close_aut(number)
            if len(rest) < 2 or rest[1] != "=":
                raise ParseError(number, "expected 'group <name> = <aut> ...'")
            known = {a.name for a in spec.automorphisms}
            missing = [g for g in rest[2:] if g not in known]
            if missing:
                raise ParseError(number, f"unknown automorphism {missing[0]!r}")
            spec.groups.append(GroupSpec(name=rest[0], generators=rest[2:]))
        else:
            raise ParseError(number, f"unknown keyword {keyword!r}")
    if spec is not None:
        close_aut(len(text.splitlines()))
    for s in specs:
        if not s.orders:
            raise ParseError(s.line, f"ring {s.name!r} has no 'add' line")
    return specs


def build(spec: RingSpec, caps: Optional[Caps] = None, tags: bool = True) -> List[Instance]:
    """Instances of one parsed block; structural failures become ValidationError."""
    try:
        ring = validate_ring(spec.name, spec.orders, spec.table, identity=spec.identity)
    except ValidationError:
        raise
    except RingError as exc:
        raise ValidationError(f"ring {spec.name!r} (line {spec.line}): {exc}", witness=getattr(exc, "witness", None))
    automorphisms: Dict[str, RingAutomorphism] = {}
    for aut in spec.automorphisms:
        try:
            automorphisms[aut.name] = validate_automorphism(ring, aut.images, name=aut.name)
        except InvalidAutomorphism as exc:
            raise ValidationError(f"automorphism {aut.name!r} of {spec.name!r}: {exc}", witness=aut.name)
    instances = []
    for group in spec.groups:
        generators = [automorphisms[name] for name in group.generators]
        try:
            instances.append(make_instance(f"{ring.name}/{group.name}", ring, generators, group.name,
                                           provenance="file", caps=caps, tags=tags))
        except RingError as exc:
            raise ValidationError(f"group {group.name!r} of {spec.name!r}: {exc}", witness=group.name)
    return instances


def loads(text: str, caps: Optional[Caps] = None, tags: bool = True) -> List[Instance]:
    instances = []
    for spec in parse_text(text):
        instances.extend(build(spec, caps, tags))
    return instances


def load(path, caps: Optional[Caps] = None) -> List[Instance]:
    instances = loads(Path(path).read_text(), caps)
    logger.info(f"loaded {len(instances)} instances from {path}")
    return instances


def _coords(x: Iterable[int]) -> str:
    return " ".join(str(c) for c in x)


def to_specs(instances: Iterable[Instance]) -> List[RingSpec]:
    """Consecutive instances over the same ring object share one block."""
    specs: List[RingSpec] = []
    current: Optional[FiniteRing] = None
    for instance in instances:
        ring = instance.ring
        if ring is not current:
            current = ring
            specs.append(RingSpec(
                name=ring.name,
                orders=list(ring.orders),
                table=[[list(entry) for entry in row] for row in ring.table],
                identity=list(ring.identity) if ring.is_unital else None,
            ))
        spec = specs[-1]
        names = [_aut_name(spec, g.name, [list(x) for x in g.images]) for g in instance.generators]
        spec.groups.append(GroupSpec(name=instance.group.name, generators=names))
    return specs


def _aut_name(spec: RingSpec, name: str, images: List[List[int]]) -> str:
    """Name of the block's automorphism with these images, adding it (renamed on a clash) if new."""
    for aut in spec.automorphisms:
        if aut.images == images:
            return aut.name
    taken = {aut.name for aut in spec.automorphisms}
    unique, suffix = name, 2
    while unique in taken:
        unique, suffix = f"{name}_{suffix}", suffix + 1
    spec.automorphisms.append(AutomorphismSpec(name=unique, images=images))
    return unique


def render(spec: RingSpec) -> str:
    lines = [f"ring {spec.name}", f"add {_coords(spec.orders)}"]
    for i, row in enumerate(spec.table):
        for j, entry in enumerate(row):
            if any(entry):
                lines.append(f"mul {i + 1} {j + 1} -> {_coords(entry)}")
    if spec.identity is not None:
        lines.append(f"unit {_coords(spec.identity)}")
    for aut in spec.automorphisms:
        lines.append(f"aut {aut.name}")
        lines.extend(f"gen {i + 1} -> {_coords(image)}" for i, image in enumerate(aut.images))
    for group in spec.groups:
        lines.append(" ".join(["group", group.name, "="] + group.generators))
    return "\n".join(lines) + "\n"


def dumps(instances: Iterable[Instance]) -> str:
    return "\n".join(render(spec) for spec in to_specs(instances))


def save(instances: Sequence[Instance], path) -> None:
    Path(path).write_text(dumps(instances))
    logger.info(f"saved {len(instances)} instances to {path}")


def write_manifest(instances: Sequence[Instance], path, caps: Optional[Caps] = None) -> List[InstanceSummary]:
    """JSON manifest of the members of a catalog file, with provenance and tags."""
    summaries = [instance.summary(caps) for instance in instances]
    Path(path).write_text(json.dumps([s.model_dump(mode="json") for s in summaries], indent=2) + "\n")
    return summaries
