"""The surface file format and the bundled semi-Fano surfaces.

Grammar (one declaration per line, ``#`` comments and blank lines ignored)::

    surface NAME
    params K
    ray A B : C1 C2 ... CK

Each ray line contributes the facet inequality <(A, B), x> >= -(C1 t_1 + ...
+ CK t_K); the C's are integers (several bundled surfaces need negative
entries).  Row order is the fan's counterclockwise cyclic order.

Sixteen surfaces ship with the package: the five Fano ones (P2, F0, F1, dP2,
dP3) and the eleven semi-Fano non-Fano ones X1..X11 with ray lists and
polytopes transcribed from the classification tables.
"""

from __future__ import annotations

from importlib import resources

from .errors import SurfaceSyntaxError
from .fan import Fan
from .kahler import KahlerSpec

BUNDLED = (
    "P2", "F0", "F1", "dP2", "dP3",
    "X1", "X2", "X3", "X4", "X5", "X6", "X7", "X8", "X9", "X10", "X11",
)

BUNDLED_NON_FANO = BUNDLED[5:]


def parse_surface(text: str) -> tuple[Fan, KahlerSpec]:
    """Parse a surface file; errors carry 1-based line numbers."""
    name = None
    k = None
    rays: list[tuple[int, int]] = []
    rows: list[tuple[int, ...]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] == "surface":
            if name is not None:
                raise SurfaceSyntaxError("duplicate surface declaration", lineno)
            if len(fields) != 2:
                raise SurfaceSyntaxError("expected: surface NAME", lineno)
            name = fields[1]
        elif fields[0] == "params":
            if k is not None:
                raise SurfaceSyntaxError("duplicate params declaration", lineno)
            if len(fields) != 2 or not fields[1].lstrip("-").isdigit():
                raise SurfaceSyntaxError("expected: params K", lineno)
            k = int(fields[1])
            if k < 0:
                raise SurfaceSyntaxError("params must be nonnegative", lineno)
        elif fields[0] == "ray":
            if k is None:
                raise SurfaceSyntaxError("params must come before rays", lineno)
            if len(fields) < 4 or fields[3] != ":":
                raise SurfaceSyntaxError("expected: ray A B : C1 ... CK", lineno)
            try:
                a, b = int(fields[1]), int(fields[2])
                cs = tuple(int(f) for f in fields[4:])
            except ValueError:
                raise SurfaceSyntaxError("ray entries must be integers", lineno)
            if len(cs) != k:
                raise SurfaceSyntaxError(
                    f"expected {k} constants, got {len(cs)}", lineno
                )
            rays.append((a, b))
            rows.append(cs)
        else:
            raise SurfaceSyntaxError(f"unknown directive {fields[0]!r}", lineno)
    if name is None:
        raise SurfaceSyntaxError("missing surface declaration")
    if k is None:
        raise SurfaceSyntaxError("missing params declaration")
    if not rays:
        raise SurfaceSyntaxError("no rays declared")
    fan = Fan(rays)
    spec = KahlerSpec(fan, k, rows, name=name)
    return fan, spec


def parse_surface_file(path) -> tuple[Fan, KahlerSpec]:
    with open(path, encoding="utf-8") as fh:
        return parse_surface(fh.read())


def bundled_text(name: str) -> str:
    if name not in BUNDLED:
        raise KeyError(f"no bundled surface named {name!r}")
    return resources.files("sftoric").joinpath(f"data/{name}.fan").read_text("utf-8")


def load_bundled(name: str) -> tuple[Fan, KahlerSpec]:
    return parse_surface(bundled_text(name))
