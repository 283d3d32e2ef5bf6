"""Certificate JSON for computed parameter values.

A certificate names the parameter, the claimed value, the original graph in
graph6 and a cover of its complement::

    {"parameter": "box" | "localbox" | "unionbox", "value": int,
     "host_graph6": str,
     "complement_cover": {"class": "C" | "Cbar", "bags": [[[u, v], ...], ...]},
     "stats": {"t": int, "s": int}}
"""

from __future__ import annotations

from .covers import PLAIN, UNION, CoCover, CoverError, CoverStats, verify_cover
from .graph import Graph, complement, parse_graph6, serialize_graph6

PARAMETERS = ("box", "localbox", "unionbox")


def make_certificate(parameter: str, h: Graph, value: int, cover: CoCover) -> dict:
    if parameter not in PARAMETERS:
        raise ValueError(f"unknown parameter {parameter!r}")
    stats = cover.stats()
    return {
        "parameter": parameter,
        "value": value,
        "host_graph6": serialize_graph6(h),
        "complement_cover": cover.to_json(),
        "stats": {"t": stats.t, "s": stats.s},
    }


def read_certificate(data: dict) -> tuple[str, int, Graph, CoCover]:
    """Unpack a certificate; raises ValueError (or KeyError) on malformed input."""
    parameter = data["parameter"]
    if parameter not in PARAMETERS:
        raise ValueError(f"unknown parameter {parameter!r}")
    h = parse_graph6(data["host_graph6"])
    cover = CoCover.from_json(complement(h), data["complement_cover"])
    if cover.class_flag not in (PLAIN, UNION):
        raise ValueError(f"unknown cover class {cover.class_flag!r}")
    return parameter, int(data["value"]), h, cover


def verify_certificate(data: dict) -> CoverStats:
    """Re-check a certificate from scratch.

    The cover must verify, the recorded stats must match, and the value must
    equal the globality (box, unionbox) or locality (localbox).  Raises
    :class:`CoverError` otherwise.  Optimality of the value is not checked.
    """
    parameter, value, h, cover = read_certificate(data)
    if parameter == "unionbox" and cover.class_flag != UNION:
        raise CoverError("unionbox certificate must use class Cbar")
    if parameter == "box" and cover.class_flag != PLAIN:
        raise CoverError("box certificate must use class C")
    stats = verify_cover(cover)
    recorded = data.get("stats")
    if recorded is not None and (recorded.get("t"), recorded.get("s")) != (stats.t, stats.s):
        raise CoverError(f"recorded stats {recorded} differ from actual t={stats.t}, s={stats.s}")
    claimed = stats.s if parameter == "localbox" else stats.t
    if value != claimed:
        raise CoverError(f"value {value} does not match the cover's {'locality' if parameter == 'localbox' else 'globality'} {claimed}")
    return stats
