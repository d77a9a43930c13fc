"""Plain-text game files and result serialization.

Game file grammar (UTF-8, ``\\n`` or ``\\r\\n`` line ends; ``#`` comment
lines and blank lines are ignored anywhere)::

    bimatrix <m> <n>        or    zerosum <m> <n>
    A
    <m rows of n numbers>
    B                             (bimatrix only)
    <n rows of m numbers>
"""
from __future__ import annotations

import re

from .errors import ParseError
from .game import BimatrixGame, CertificateKind, Method, ZeroSumGame
from .oracle import EquilibriumList
from .solvers import SolveResult, nash_residual

_HEADER = re.compile(r"(bimatrix|zerosum) ([1-9][0-9]*) ([1-9][0-9]*)")
_NUMBER = re.compile(r"[+-]?(?:[0-9]+(?:\.[0-9]*)?|\.[0-9]+)(?:[eE][+-]?[0-9]+)?")


def _significant_lines(text):
    """Return ``(significant (lineno, line) pairs, line number just past the end)``."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(1, f"invalid UTF-8: {exc.reason}") from None
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    out = []
    for lineno, line in enumerate(lines, start=1):
        if line.endswith("\r"):
            line = line[:-1]
        if line.strip() and not line.startswith("#"):
            out.append((lineno, line))
    return out, len(lines) + 1


def _read_matrix(lines, rows, cols, eof):
    out = []
    for _ in range(rows):
        try:
            lineno, line = next(lines)
        except StopIteration:
            raise ParseError(eof, f"missing matrix row: expected {rows} rows") from None
        tokens = line.split()
        if len(tokens) != cols:
            raise ParseError(lineno, f"expected {cols} values, found {len(tokens)}")
        row = []
        for tok in tokens:
            if not _NUMBER.fullmatch(tok):
                raise ParseError(lineno, f"non-numeric token {tok!r}")
            value = float(tok)
            if value in (float("inf"), float("-inf")):
                raise ParseError(lineno, f"value out of range {tok!r}")
            row.append(value)
        out.append(row)
    return out


def _expect_label(lines, label, eof):
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(eof, f"missing section {label}") from None
    if line != label:
        raise ParseError(lineno, f"expected section label {label!r}, found {line!r}")


def parse_game(text):
    """Parse a game file into a :class:`BimatrixGame` or :class:`ZeroSumGame`."""
    significant, eof = _significant_lines(text)
    lines = iter(significant)
    try:
        lineno, line = next(lines)
    except StopIteration:
        raise ParseError(eof, "empty input: missing header") from None
    header = _HEADER.fullmatch(line)
    if header is None:
        raise ParseError(lineno, f"bad header {line!r}")
    kind, m, n = header.group(1), int(header.group(2)), int(header.group(3))
    _expect_label(lines, "A", eof)
    A = _read_matrix(lines, m, n, eof)
    B = None
    if kind == "bimatrix":
        _expect_label(lines, "B", eof)
        B = _read_matrix(lines, n, m, eof)
    for lineno, line in lines:
        raise ParseError(lineno, f"trailing content {line!r}")
    return ZeroSumGame(A) if B is None else BimatrixGame(A, B)


def _shortest(M):
    # repr gives the shortest decimal string that round-trips a double
    return "\n".join(" ".join(repr(float(v)) for v in row) for row in M.tolist())


def serialize_game(game):
    if isinstance(game, ZeroSumGame):
        return f"zerosum {game.m} {game.n}\nA\n{_shortest(game.A)}\n"
    return f"bimatrix {game.m} {game.n}\nA\n{_shortest(game.A)}\nB\n{_shortest(game.B)}\n"


def fmt(x):
    """17 significant digits: enough to reproduce any double."""
    return f"{x:.17g}"


def _block(z, u1, u2, kind, value, iterations, method):
    return (
        f"p: {' '.join(fmt(v) for v in z.p)}\n"
        f"q: {' '.join(fmt(v) for v in z.q)}\n"
        f"u1: {fmt(u1)}\n"
        f"u2: {fmt(u2)}\n"
        f"certificate: {kind.value} {fmt(value)} {iterations} {method.value}\n"
    )


def serialize_result(result):
    """Text form of a :class:`SolveResult` or an :class:`EquilibriumList`.

    Equilibrium entries are certified by their projection residual in the
    game the list was enumerated from.
    """
    if isinstance(result, SolveResult):
        c = result.certificate
        return _block(result.z, result.u1, result.u2, c.kind, c.value, c.iterations, c.method)
    if isinstance(result, EquilibriumList):
        if not result.entries:
            return f"# no equilibria found (degenerate skips: {len(result.degenerate_skips)})\n"
        blocks = []
        for e in result:
            res = nash_residual(result.game, None, e.z)
            blocks.append(_block(e.z, e.u1, e.u2, CertificateKind.NASH_RESIDUAL, res, 0,
                                 Method.SUPPORT_ENUMERATION))
        return "\n".join(blocks)
    raise TypeError(f"cannot serialize {type(result).__name__}")
