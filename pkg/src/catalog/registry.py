"""Registry of named fixtures for the command line."""

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from src.algebra.bialgebra import Bialgebra
from src.algebra.coalgebra import Comultiplication
from src.algebra.structure import StructureConstants
from src.catalog.canonical import CanonicalLabel, canonical_algebra, simple_an
from src.catalog.examples import (
    example_bialgebra,
    example_coalgebra_matrix,
    example_coalgebra_top,
    example_three_deltas,
)
from src.utils.logger import get_logger

logger = get_logger()


@dataclass(frozen=True)
class Fixture:
    """A built fixture: any of μ and Δ, with its display name."""
    name: str
    mu: Optional[StructureConstants] = None
    delta: Optional[Comultiplication] = None

    @property
    def arity(self) -> int:
        return (self.mu or self.delta.constants).arity

    @property
    def dim(self) -> int:
        return (self.mu or self.delta.constants).dim


Builder = Callable[[int, Optional[str]], Fixture]


class FixtureRegistry:
    """
    Maps fixture names to builders taking (n, parameter).

    Names may carry a parameter after a colon, as in ``c2:1/3`` or
    ``three-deltas:2``.
    """

    def __init__(self):
        self._builders: Dict[str, Tuple[Builder, str]] = {}
        self._loaded = False

    def register(self, name: str, builder: Builder, description: str = "") -> None:
        if not callable(builder):
            raise TypeError(f"Builder for '{name}' must be callable")
        self._builders[name] = (builder, description)
        logger.debug(f"Registered fixture: {name}")

    def unregister(self, name: str) -> bool:
        return self._builders.pop(name, None) is not None

    def get_names(self) -> List[str]:
        self._ensure_loaded()
        return list(self._builders.keys())

    def list_fixtures(self) -> List[Dict[str, str]]:
        self._ensure_loaded()
        return [{"name": name, "description": desc} for name, (_, desc) in self._builders.items()]

    def build(self, request: str, n: int) -> Fixture:
        """
        Build a fixture by name.

        Raises:
            ValueError: for unknown names or bad parameters
        """
        self._ensure_loaded()
        name, _, param = request.strip().partition(":")
        entry = self._builders.get(name)
        if entry is None:
            raise ValueError(f"Unknown fixture '{name}'. Known: {', '.join(self.get_names())}")
        fixture = entry[0](n, param or None)
        logger.info(f"Built fixture {request} at n={n}")
        return fixture

    def _ensure_loaded(self) -> None:
        if not self._loaded:
            self._loaded = True
            self.load_builtin()

    def load_builtin(self) -> int:
        """Register every built-in fixture."""

        def label_builder(kind: str) -> Builder:
            def build(n: int, param: Optional[str]) -> Fixture:
                label = CanonicalLabel.parse(f"{kind}:{param}" if param else kind)
                return Fixture(str(label), mu=canonical_algebra(n, label))
            return build

        def no_param(name: str, param: Optional[str]) -> None:
            if param:
                raise ValueError(f"Fixture '{name}' takes no parameter")

        def simple(n: int, param: Optional[str]) -> Fixture:
            no_param("simple", param)
            return Fixture(f"A_{n}", mu=simple_an(n, allow_lie=True))

        def top(n: int, param: Optional[str]) -> Fixture:
            no_param("top", param)
            return Fixture("top coalgebra", delta=example_coalgebra_top(n))

        def example(n: int, param: Optional[str]) -> Fixture:
            no_param("example", param)
            b = example_bialgebra(n)
            return Fixture("worked bialgebra", mu=b.mu, delta=b.delta)

        def three_deltas(n: int, param: Optional[str]) -> Fixture:
            which = int(param) if param and param.isdigit() else None
            if which not in (1, 2, 3):
                raise ValueError("three-deltas needs :1, :2 or :3")
            b: Bialgebra = example_three_deltas(n).bialgebra(which)
            return Fixture(f"three-deltas Δ{which}", mu=b.mu, delta=b.delta)

        def matrix(n: int, param: Optional[str]) -> Fixture:
            no_param("matrix", param)
            return Fixture(f"matrix coalgebra M({n})", delta=example_coalgebra_matrix(n))

        builtin = [
            ("abelian", label_builder("abelian"), "abelian (n+1)-dim algebra"),
            ("b1", label_builder("b1"), "μ(e_2..e_{n+1}) = e_1"),
            ("b2", label_builder("b2"), "μ(e_1..e_n) = e_1"),
            ("c1", label_builder("c1"), "derived dim 2, type c1"),
            ("c2", label_builder("c2"), "derived dim 2, type c2(α); use c2:<α>"),
            ("c3", label_builder("c3"), "derived dim 2, type c3"),
            ("d", label_builder("d"), "derived dim r; use d:<r>"),
            ("simple", simple, "simple algebra A_n"),
            ("top", top, "coalgebra Δ(e_i) = wedge omitting e_i"),
            ("example", example, "worked (n+1)-dim bialgebra"),
            ("three-deltas", three_deltas, "bracket with Δ1/Δ2/Δ3; use three-deltas:<k>"),
            ("matrix", matrix, "3-ary matrix-unit coalgebra on M(n)"),
        ]
        for name, builder, description in builtin:
            self.register(name, builder, description)
        return len(builtin)


_registry: Optional[FixtureRegistry] = None


def get_registry() -> FixtureRegistry:
    """Get the global fixture registry instance."""
    global _registry
    if _registry is None:
        _registry = FixtureRegistry()
    return _registry
