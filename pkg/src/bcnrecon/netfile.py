"""Plain-text network files.

A file holds five keys, in any order, one per line; blank lines and
lines starting with ``#`` are ignored::

    states  <N>
    inputs  <M>
    outputs <Q>
    L <N*M indices in [1, N], input-major>
    H <N indices in [1, Q]>

Position ``(j-1)*N + i`` of L (1-based) holds the successor of state i
under input j.  All indices are 1-based.
"""

from __future__ import annotations

from .bcn import Bcn
from .stp import LogicalMatrix

__all__ = ["NetworkFormatError", "parse_network", "serialize_network"]

_SCALAR_KEYS = ("states", "inputs", "outputs")
_KEYS = _SCALAR_KEYS + ("L", "H")


class NetworkFormatError(ValueError):
    """Malformed network file; the message carries a line/position hint."""


def _positive_int(token: str, where: str) -> int:
    try:
        value = int(token)
    except ValueError:
        raise NetworkFormatError(f"{where}: expected an integer, got {token!r}") from None
    if value < 1:
        raise NetworkFormatError(f"{where}: expected a positive integer, got {value}")
    return value


def _index_row(tokens: list[str], expected: int, upper: int,
               key: str, line: int, expectation: str) -> tuple[int, ...]:
    if len(tokens) != expected:
        raise NetworkFormatError(
            f"line {line}: {key} needs {expected} entries ({expectation}), "
            f"got {len(tokens)}"
        )
    values = []
    for pos, token in enumerate(tokens, start=1):
        where = f"line {line}: {key} entry {pos}"
        value = _positive_int(token, where)
        if value > upper:
            raise NetworkFormatError(f"{where}: index {value} outside [1, {upper}]")
        values.append(value)
    return tuple(values)


def parse_network(text: str) -> Bcn:
    """Parse a network file into a :class:`Bcn`.

    Rejects unknown keys, duplicate keys, missing keys, wrong entry
    counts and out-of-range indices, naming the offending line and
    position.
    """
    entries: dict[str, tuple[list[str], int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        key, *values = line.split()
        if key not in _KEYS:
            raise NetworkFormatError(f"line {lineno}: unknown key {key!r}")
        if key in entries:
            raise NetworkFormatError(f"line {lineno}: duplicate key {key!r}")
        entries[key] = (values, lineno)
    for key in _KEYS:
        if key not in entries:
            raise NetworkFormatError(f"missing key {key!r}")

    dims = {}
    for key in _SCALAR_KEYS:
        values, lineno = entries[key]
        if len(values) != 1:
            raise NetworkFormatError(
                f"line {lineno}: {key} needs exactly one value, got {len(values)}"
            )
        dims[key] = _positive_int(values[0], f"line {lineno}: {key}")

    n, m, q = dims["states"], dims["inputs"], dims["outputs"]
    l_values, l_line = entries["L"]
    h_values, h_line = entries["H"]
    l_cols = _index_row(l_values, n * m, n, "L", l_line, "states*inputs")
    h_cols = _index_row(h_values, n, q, "H", h_line, "one per state")
    return Bcn(n, m, q, LogicalMatrix(n, l_cols), LogicalMatrix(q, h_cols))


def serialize_network(bcn: Bcn) -> str:
    """Canonical text form; ``parse_network`` inverts it exactly."""
    return "\n".join([
        f"states {bcn.n_states}",
        f"inputs {bcn.n_inputs}",
        f"outputs {bcn.n_outputs}",
        "L " + " ".join(str(c) for c in bcn.transition.col_index),
        "H " + " ".join(str(c) for c in bcn.readout.col_index),
    ]) + "\n"
