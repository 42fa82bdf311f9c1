"""The line-oriented ``.nlie`` text format.

    nlie 1
    # free-text comment lines are kept as metadata
    name A_3
    arity 3
    dim 4
    mu 2 3 4 : 1 = 1          c^1_{234} = 1
    delta 1 : 2 3 4 = 1/2     a_1^{234} = 1/2
    form 1 1 = -1             B(e_1, e_1) = -1

Indices may come in any order and are canonicalized with sign. A bare ``mu``,
``delta`` or ``form`` line declares that part present even when it has no
nonzero entries.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from src.algebra.coalgebra import Comultiplication
from src.algebra.extension import BilinearForm
from src.algebra.structure import StructureConstants
from src.core import linalg
from src.core.tensor import IndexTuple, canonicalize

FORMAT_VERSION = "1"

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")


class NlieParseError(ValueError):
    """Malformed ``.nlie`` input; ``line`` is 1-based (0 when not tied to a line)."""

    def __init__(self, message: str, line: int = 0):
        super().__init__(f"line {line}: {message}" if line else message)
        self.line = line


@dataclass
class NlieDocument:
    """Parsed contents of a ``.nlie`` file."""
    arity: int
    dim: int
    mu: Optional[StructureConstants] = None
    delta: Optional[Comultiplication] = None
    form: Optional[BilinearForm] = None
    name: Optional[str] = None
    comments: List[str] = field(default_factory=list)

    def __post_init__(self):
        for part, label in ((self.mu, "mu"), (self.delta, "delta"), (self.form, "form")):
            if part is None:
                continue
            arity = getattr(part, "arity", self.arity)
            if (arity, part.dim) != (self.arity, self.dim):
                raise ValueError(f"{label} does not match arity {self.arity}, dim {self.dim}")


def _rational(token: str, line: int) -> Fraction:
    if not _RATIONAL.match(token):
        raise NlieParseError(f"malformed rational '{token}'", line)
    try:
        return Fraction(token)
    except ZeroDivisionError:
        raise NlieParseError(f"zero denominator in '{token}'", line) from None


def _ints(tokens: List[str], line: int) -> Tuple[int, ...]:
    try:
        return tuple(int(t) for t in tokens)
    except ValueError:
        raise NlieParseError(f"expected integer indices, got '{' '.join(tokens)}'", line) from None


class _Builder:
    """Accumulates directives while checking ranges and duplicates."""

    def __init__(self):
        self.arity: Optional[int] = None
        self.dim: Optional[int] = None
        self.name: Optional[str] = None
        self.comments: List[str] = []
        self.mu: Optional[Dict[IndexTuple, Dict[int, Fraction]]] = None
        self.delta: Optional[Dict[IndexTuple, Dict[int, Fraction]]] = None
        self.form: Optional[Dict[Tuple[int, int], Fraction]] = None

    def require_shape(self, line: int) -> Tuple[int, int]:
        if self.arity is None or self.dim is None:
            raise NlieParseError("'arity' and 'dim' must precede entries", line)
        return self.arity, self.dim

    def check_range(self, indices, line: int) -> None:
        for i in indices:
            if not 1 <= i <= self.dim:
                raise NlieParseError(f"index {i} out of range 1..{self.dim}", line)

    def set_size(self, directive: str, rest: List[str], line: int) -> None:
        if len(rest) != 1 or not rest[0].isdigit():
            raise NlieParseError(f"'{directive}' takes one positive integer", line)
        if getattr(self, directive) is not None:
            raise NlieParseError(f"duplicate '{directive}'", line)
        value = int(rest[0])
        minimum = 2 if directive == "arity" else 1
        if value < minimum:
            raise NlieParseError(f"'{directive}' must be at least {minimum}", line)
        setattr(self, directive, value)

    def add_constant(self, table: Dict, indices: Tuple[int, ...], k: int, value: Fraction, line: int) -> None:
        n, _ = self.require_shape(line)
        if len(indices) != n:
            raise NlieParseError(f"expected {n} indices, got {len(indices)}", line)
        self.check_range(indices + (k,), line)
        canonical = canonicalize(indices)
        if canonical is None:
            if value != 0:
                raise NlieParseError("repeated index with nonzero coefficient", line)
            return
        key, sign = canonical
        slot = table.setdefault(key, {})
        if k in slot:
            raise NlieParseError(f"duplicate entry for {key} and {k}", line)
        slot[k] = sign * value

    def mu_entry(self, rest: List[str], line: int) -> None:
        # mu i1 … iN : k = p/q
        if self.mu is None:
            self.mu = {}
        if not rest:
            return
        try:
            colon, equals = rest.index(":"), rest.index("=")
        except ValueError:
            raise NlieParseError("expected 'mu i1 ... iN : k = value'", line) from None
        if equals != colon + 2 or len(rest) != equals + 2:
            raise NlieParseError("expected 'mu i1 ... iN : k = value'", line)
        indices = _ints(rest[:colon], line)
        (k,) = _ints([rest[colon + 1]], line)
        self.add_constant(self.mu, indices, k, _rational(rest[-1], line), line)

    def delta_entry(self, rest: List[str], line: int) -> None:
        # delta l : i1 … iN = p/q
        if self.delta is None:
            self.delta = {}
        if not rest:
            return
        if len(rest) < 5 or rest[1] != ":" or rest[-2] != "=":
            raise NlieParseError("expected 'delta l : i1 ... iN = value'", line)
        (l,) = _ints([rest[0]], line)
        indices = _ints(rest[2:-2], line)
        self.add_constant(self.delta, indices, l, _rational(rest[-1], line), line)

    def form_entry(self, rest: List[str], line: int) -> None:
        # form i j = p/q
        if self.form is None:
            self.form = {}
        if not rest:
            return
        if len(rest) != 4 or rest[2] != "=":
            raise NlieParseError("expected 'form i j = value'", line)
        self.require_shape(line)
        i, j = _ints(rest[:2], line)
        self.check_range((i, j), line)
        key = (min(i, j), max(i, j))
        if key in self.form:
            raise NlieParseError(f"duplicate form entry {key}", line)
        self.form[key] = _rational(rest[3], line)

    def build(self) -> NlieDocument:
        if self.arity is None or self.dim is None:
            raise NlieParseError("missing 'arity' or 'dim'")
        n, m = self.arity, self.dim
        form = None
        if self.form is not None:
            matrix = linalg.zeros(m, m)
            for (i, j), value in self.form.items():
                matrix[i - 1, j - 1] = matrix[j - 1, i - 1] = value
            form = BilinearForm(matrix)
        return NlieDocument(
            arity=n,
            dim=m,
            mu=StructureConstants(n, m, self.mu) if self.mu is not None else None,
            delta=Comultiplication(StructureConstants(n, m, self.delta)) if self.delta is not None else None,
            form=form,
            name=self.name,
            comments=self.comments,
        )


def parse(text: str) -> NlieDocument:
    """
    Parse ``.nlie`` text.

    Raises:
        NlieParseError: on an unknown directive, out-of-range or repeated index,
            duplicate entry or malformed rational, with the offending line number
    """
    builder = _Builder()
    seen_header = False
    for number, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if stripped.startswith("#"):
            builder.comments.append(stripped[1:].strip())
            continue
        tokens = stripped.split("#", 1)[0].replace(":", " : ").replace("=", " = ").split()
        directive, rest = tokens[0], tokens[1:]
        if not seen_header:
            if directive != "nlie" or rest != [FORMAT_VERSION]:
                raise NlieParseError(f"expected header 'nlie {FORMAT_VERSION}'", number)
            seen_header = True
            continue
        if directive in ("arity", "dim"):
            builder.set_size(directive, rest, number)
        elif directive == "name":
            builder.name = stripped.split(None, 1)[1].split("#", 1)[0].strip() if rest else ""
        elif directive == "mu":
            builder.mu_entry(rest, number)
        elif directive == "delta":
            builder.delta_entry(rest, number)
        elif directive == "form":
            builder.form_entry(rest, number)
        else:
            raise NlieParseError(f"unknown directive '{directive}'", number)
    if not seen_header:
        raise NlieParseError(f"missing header 'nlie {FORMAT_VERSION}'")
    return builder.build()


def emit(doc: NlieDocument) -> str:
    """Canonical text: sorted increasing tuples, lowest-terms rationals, LF endings."""
    lines = [f"nlie {FORMAT_VERSION}"]
    lines.extend(f"# {comment}".rstrip() for comment in doc.comments)
    if doc.name:
        lines.append(f"name {doc.name}")
    lines.append(f"arity {doc.arity}")
    lines.append(f"dim {doc.dim}")

    if doc.mu is not None:
        entries = [
            f"mu {' '.join(map(str, key))} : {k} = {value}"
            for key, vec in doc.mu.items()
            for k, value in enumerate(vec, start=1)
            if value != 0
        ]
        lines.extend(entries or ["mu"])

    if doc.delta is not None:
        entries = [
            (l, key, value)
            for key, vec in doc.delta.constants.items()
            for l, value in enumerate(vec, start=1)
            if value != 0
        ]
        lines.extend(
            [f"delta {l} : {' '.join(map(str, key))} = {value}" for l, key, value in sorted(entries)]
            or ["delta"]
        )

    if doc.form is not None:
        entries = [
            f"form {i} {j} = {doc.form(i, j)}"
            for i in range(1, doc.dim + 1)
            for j in range(i, doc.dim + 1)
            if doc.form(i, j) != 0
        ]
        lines.extend(entries or ["form"])

    return "\n".join(lines) + "\n"
