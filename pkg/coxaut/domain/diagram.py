"""The generating set ``Y`` and the Coxeter diagram it satisfies.

``Y = {sigma_12, alpha_(1,2), ..., alpha_(n-1,n)}``. Its elements are
involutions whose pairwise products have the orders read off the diagram
below, so ``Aut(W_n)`` is a quotient of the Coxeter group of that diagram::

    sigma_12 --inf-- (1,2)
        \\            /
         4          /
          \\        /
           (2,3) -- (3,4) -- ... -- (n-1,n)

Unlabelled edges mean 3; pairs without an edge commute (label 2).
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from itertools import combinations
from typing import Final

import networkx as nx

from coxaut.domain.automorphisms import CoxAut, alpha, sigma
from coxaut.domain.exceptions import ValidationError
from coxaut.domain.permutations import Permutation

INFINITY: Final = math.inf

_TAG_PATTERN = re.compile(r"^(?:sigma\(1,2\)|alpha\((\d+),(\d+)\))$")


@dataclass(frozen=True, slots=True, order=True)
class GeneratorTag:
    """Element of ``Y``: index 0 is ``sigma_12``, index ``i >= 1`` is ``alpha_(i,i+1)``.

    The natural ordering (``sigma_12`` first, then the transpositions in
    order) is the lexicographic order used for certificates.
    """

    index: int

    def __post_init__(self) -> None:
        """Reject negative indices."""
        if self.index < 0:
            raise ValidationError(f"generator tag index must be >= 0, got {self.index}")

    @classmethod
    def sigma12(cls) -> GeneratorTag:
        """The partial conjugation ``sigma_12``."""
        return cls(0)

    @classmethod
    def alpha_adj(cls, i: int) -> GeneratorTag:
        """The adjacent transposition ``alpha_(i,i+1)``."""
        if i < 1:
            raise ValidationError(f"adjacent transposition index must be >= 1, got {i}")
        return cls(i)

    @property
    def is_sigma(self) -> bool:
        """Whether this is ``sigma_12``."""
        return self.index == 0

    @property
    def label(self) -> str:
        """Text form, e.g. ``sigma(1,2)`` or ``alpha(3,4)``."""
        if self.is_sigma:
            return "sigma(1,2)"
        return f"alpha({self.index},{self.index + 1})"

    @classmethod
    def parse(cls, text: str) -> GeneratorTag:
        """Inverse of :attr:`label`."""
        match = _TAG_PATTERN.match(text.replace(" ", ""))
        if match is None:
            raise ValidationError(f"not a generator tag: {text!r}")
        if match.group(1) is None:
            return cls.sigma12()
        i, j = int(match.group(1)), int(match.group(2))
        if j != i + 1:
            raise ValidationError(f"only adjacent transpositions belong to Y: {text!r}")
        return cls.alpha_adj(i)

    def automorphism(self, n: int) -> CoxAut:
        """Return the generator as an element of ``Aut(W_n)``."""
        if self.is_sigma:
            return sigma(1, 2, n)
        if self.index >= n:
            raise ValidationError(f"{self.label} is not defined for n = {n}")
        return alpha(Permutation.transposition(n, self.index, self.index + 1))


def generating_set(n: int) -> tuple[GeneratorTag, ...]:
    """Return ``Y`` in certificate order; it has exactly ``n`` elements."""
    return (GeneratorTag.sigma12(), *(GeneratorTag.alpha_adj(i) for i in range(1, n)))


@dataclass(frozen=True)
class CoxeterDiagram:
    """Labelled graph on ``Y``; only pairs with label other than 2 are edges."""

    n: int
    graph: nx.Graph

    @property
    def vertices(self) -> tuple[GeneratorTag, ...]:
        """All generators, sorted."""
        return tuple(sorted(self.graph.nodes))

    def label(self, u: GeneratorTag, v: GeneratorTag) -> float:
        """Coxeter label ``m(u, v)``: 1 on the diagonal, 2 for non-edges."""
        if u == v:
            return 1
        data = self.graph.get_edge_data(u, v)
        return 2 if data is None else float(data["label"])

    def pairs(self) -> list[tuple[GeneratorTag, GeneratorTag, float]]:
        """Every unordered pair of distinct vertices with its label."""
        return [(u, v, self.label(u, v)) for u, v in combinations(self.vertices, 2)]

    def components(self, members: tuple[GeneratorTag, ...]) -> list[tuple[GeneratorTag, ...]]:
        """Connected components of the sub-diagram on ``members``, sorted."""
        sub = self.graph.subgraph(members)
        return sorted(tuple(sorted(part)) for part in nx.connected_components(sub))


def figure1_diagram(n: int) -> CoxeterDiagram:
    """Build the diagram for ``Y`` in rank ``n``.

    Raises:
        ValidationError: If ``n < 3``.

    """
    if n < 3:
        raise ValidationError(f"the diagram needs n >= 3, got {n}")
    graph = nx.Graph()
    tags = generating_set(n)
    graph.add_nodes_from(tags)
    s12 = GeneratorTag.sigma12()
    graph.add_edge(s12, GeneratorTag.alpha_adj(1), label=INFINITY)
    graph.add_edge(s12, GeneratorTag.alpha_adj(2), label=4)
    for i in range(1, n - 1):
        graph.add_edge(GeneratorTag.alpha_adj(i), GeneratorTag.alpha_adj(i + 1), label=3)
    return CoxeterDiagram(n, graph)
