"""The problem description language.

    ring Q[x, y];
    center (x^2, x*y);
    cutoff 6;            # optional, default 6
    weight 0..2;         # optional ranges used by table-producing commands
    hdeg 0..2;

An excessive square adds a second ambient, the images of the first ambient's
variables, the second center and the coefficient matrix expressing each
image q(f_i) in terms of the second center:

    target Q[x];
    map (x, 0);
    tcenter (x);
    coeffs [[1], [0]];
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DuplicateVariable, ParseError, UnknownVariable
from .polycore import Ring

DEFAULT_CUTOFF = 6


@dataclass(frozen=True)
class ProblemSpec:
    ambient: tuple[str, ...]
    center: tuple[str, ...]
    cutoff: int = DEFAULT_CUTOFF
    weights: tuple[int, int] | None = None
    hdegs: tuple[int, int] | None = None
    target: tuple[str, ...] | None = None
    ring_map: tuple[str, ...] | None = None
    target_center: tuple[str, ...] | None = None
    coeffs: tuple[tuple[str, ...], ...] | None = None

    @property
    def has_square(self) -> bool:
        return self.target is not None

    def center_presentation(self):
        from .rees import make_center

        return make_center(self.ambient, self.center)

    def square(self):
        """The declared excessive square, or the identity base-change square."""
        from .blowup import base_change_square, make_square
        from .rees import make_center

        src = self.center_presentation()
        if not self.has_square:
            return base_change_square(src, {}, Ring(self.ambient))
        tgt = make_center(self.target, self.target_center)
        return make_square(src, tgt, dict(zip(self.ambient, self.ring_map)), self.coeffs)

    def to_dict(self) -> dict:
        out = {"ambient": list(self.ambient), "center": list(self.center), "cutoff": self.cutoff}
        if self.weights is not None:
            out["weight"] = list(self.weights)
        if self.hdegs is not None:
            out["hdeg"] = list(self.hdegs)
        if self.has_square:
            out["square"] = {"target": list(self.target), "map": list(self.ring_map),
                             "target_center": list(self.target_center),
                             "coeffs": [list(r) for r in self.coeffs]}
        return out


def _range_text(r: tuple[int, int]) -> str:
    return str(r[0]) if r[0] == r[1] else f"{r[0]}..{r[1]}"


def print_problem(spec: ProblemSpec) -> str:
    lines = [f"ring Q[{', '.join(spec.ambient)}];", f"center ({', '.join(spec.center)});",
             f"cutoff {spec.cutoff};"]
    if spec.weights is not None:
        lines.append(f"weight {_range_text(spec.weights)};")
    if spec.hdegs is not None:
        lines.append(f"hdeg {_range_text(spec.hdegs)};")
    if spec.has_square:
        lines.append(f"target Q[{', '.join(spec.target)}];")
        lines.append(f"map ({', '.join(spec.ring_map)});")
        lines.append(f"tcenter ({', '.join(spec.target_center)});")
        rows = ", ".join("[" + ", ".join(r) + "]" for r in spec.coeffs)
        lines.append(f"coeffs [{rows}];")
    return "\n".join(lines) + "\n"


# ---------- parsing ----------

_KEYWORDS = ("ring", "center", "cutoff", "weight", "hdeg", "target", "map", "tcenter", "coeffs")


class _Source:
    def __init__(self, text: str):
        self.text = text

    def where(self, pos: int) -> tuple[int, int]:
        line = self.text.count("\n", 0, pos) + 1
        col = pos - (self.text.rfind("\n", 0, pos) + 1) + 1
        return line, col

    def error(self, message: str, pos: int, cls=ParseError):
        line, col = self.where(pos)
        return cls(message, pos, line, col)


def _strip_comments(text: str) -> str:
    # keep offsets stable by blanking comments instead of deleting them
    return re.sub(r"#[^\n]*", lambda m: " " * len(m.group(0)), text)


def _split_top(body: str, start: int, sep: str = ",") -> list[tuple[str, int]]:
    """Split on separators outside brackets; returns (piece, absolute offset)."""
    out, depth, last = [], 0, 0
    for i, ch in enumerate(body):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == sep and depth == 0:
            out.append((body[last:i], start + last))
            last = i + 1
    out.append((body[last:], start + last))
    return out


def _enclosed(src: _Source, stmt: str, base: int, opener: str, closer: str) -> tuple[str, int]:
    i = stmt.find(opener)
    j = stmt.rfind(closer)
    if i < 0 or j < i:
        raise src.error(f"expected {opener}...{closer}", base)
    if stmt[j + 1:].strip():
        raise src.error("unexpected text after closing bracket", base + j + 1)
    return stmt[i + 1:j], base + i + 1


def _names(src: _Source, body: str, start: int) -> tuple[str, ...]:
    names = []
    for piece, off in _split_top(body, start):
        name = piece.strip()
        if not name and not names and not body.strip():
            return ()
        if not re.fullmatch(r"[A-Za-z_][A-Za-z_0-9]*", name):
            raise src.error(f"invalid variable name {name!r}", off)
        if name in names:
            raise src.error(f"duplicate variable {name!r}", off, DuplicateVariable)
        names.append(name)
    return tuple(names)


def _ring_decl(src: _Source, rest: str, base: int) -> tuple[str, ...]:
    m = re.match(r"\s*Q\s*\[", rest)
    if not m:
        raise src.error("expected Q[...]", base)
    body, off = _enclosed(src, rest, base, "[", "]")
    return _names(src, body, off)


def _poly_list(src: _Source, ring: Ring, body: str, start: int) -> tuple[str, ...]:
    if not body.strip():
        return ()
    out = []
    for piece, off in _split_top(body, start):
        if not piece.strip():
            raise src.error("empty polynomial", off)
        try:
            p = ring.parse(piece)
        except UnknownVariable as exc:
            raise src.error(exc.message, off + exc.pos, UnknownVariable) from None
        except ParseError as exc:
            raise src.error(exc.message, off + exc.pos) from None
        out.append(str(p))
    return tuple(out)


def _int_range(src: _Source, rest: str, base: int) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(-?\d+)\s*(?:\.\.\s*(-?\d+)\s*)?", rest)
    if not m:
        raise src.error("expected an integer or a range a..b", base)
    lo = int(m.group(1))
    hi = int(m.group(2)) if m.group(2) is not None else lo
    if hi < lo:
        raise src.error("empty range", base)
    return lo, hi


def parse_problem(text: str) -> ProblemSpec:
    src = _Source(text)
    clean = _strip_comments(text)
    stmts: dict[str, tuple[str, int]] = {}
    for piece, off in _split_top(clean, 0, ";"):
        stripped = piece.strip()
        if not stripped:
            continue
        lead = off + (len(piece) - len(piece.lstrip()))
        m = re.match(r"[A-Za-z_]+", stripped)
        word = m.group(0) if m else stripped[:1]
        if word not in _KEYWORDS:
            raise src.error(f"unknown statement {word!r}", lead)
        if word in stmts:
            raise src.error(f"repeated statement {word!r}", lead)
        rest_off = lead + len(word)
        stmts[word] = (clean[rest_off:off + len(piece)], rest_off)
    last = _split_top(clean, 0, ";")[-1]
    if last[0].strip():
        raise src.error("missing ';' at end of statement", last[1] + len(last[0].rstrip()))

    if "ring" not in stmts:
        raise src.error("missing ring declaration", 0)
    if "center" not in stmts:
        raise src.error("missing center declaration", 0)
    ambient = _ring_decl(src, *stmts["ring"])
    ring = Ring(ambient)
    body, off = _enclosed(src, *stmts["center"], "(", ")")
    center = _poly_list(src, ring, body, off)

    cutoff = DEFAULT_CUTOFF
    if "cutoff" in stmts:
        rest, off = stmts["cutoff"]
        m = re.fullmatch(r"\s*(\d+)\s*", rest)
        if not m:
            raise src.error("cutoff must be a non-negative integer", off)
        cutoff = int(m.group(1))
    weights = _int_range(src, *stmts["weight"]) if "weight" in stmts else None
    hdegs = _int_range(src, *stmts["hdeg"]) if "hdeg" in stmts else None
    if hdegs is not None and hdegs[0] < 0:
        raise src.error("homological degrees are non-negative", stmts["hdeg"][1])

    square_keys = ("target", "map", "tcenter", "coeffs")
    present = [k for k in square_keys if k in stmts]
    target = ring_map = tcenter = coeffs = None
    if present:
        missing = [k for k in square_keys if k not in stmts]
        if missing:
            raise src.error(f"square description lacks {', '.join(missing)}", stmts[present[0]][1])
        target = _ring_decl(src, *stmts["target"])
        tring = Ring(target)
        body, off = _enclosed(src, *stmts["map"], "(", ")")
        ring_map = _poly_list(src, tring, body, off)
        if len(ring_map) != len(ambient):
            raise src.error("map needs one image per ring variable", off)
        body, off = _enclosed(src, *stmts["tcenter"], "(", ")")
        tcenter = _poly_list(src, tring, body, off)
        body, off = _enclosed(src, *stmts["coeffs"], "[", "]")
        rows = []
        if body.strip():
            for piece, poff in _split_top(body, off):
                rbody, roff = _enclosed(src, piece, poff, "[", "]")
                rows.append(_poly_list(src, tring, rbody, roff))
        if len(rows) != len(center) or any(len(r) != len(tcenter) for r in rows):
            raise src.error("coeffs must have one row per center generator and one entry per target generator", off)
        coeffs = tuple(rows)
    return ProblemSpec(ambient, center, cutoff, weights, hdegs, target, ring_map, tcenter, coeffs)
