"""Crystal structure on components of the 2x2 commutative grid.

Vertices of the 2x2 grid are numbered 1..4 with arrows 1->2, 1->3, 2->4,
3->4 (so 1 is the source corner, 4 the sink corner).  An irreducible
component of the representation variety for dimension vector d is named
by d together with the generic ranks (r1, r2) of the stacked map out of
vertex 1 and of the stacked map into vertex 4.  Raising operators
decrement a coordinate of d, lowering operators increment it; each case
formula below names candidate rank data, and the candidate is the answer
exactly when it satisfies the component parametrization, otherwise the
operator vanishes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import inf as INFINITY

from .cartan import CrystalFragment, cartan_from_quiver, pairing
from .grid import build_grid

QUIVER = build_grid((2, 2))

# Corner numbering: 1 = (1,1) source, 2 = (2,1), 3 = (1,2), 4 = (2,2) sink.
VERTEX_OF = {1: (1, 1), 2: (2, 1), 3: (1, 2), 4: (2, 2)}
NUMBER_OF = {v: k for k, v in VERTEX_OF.items()}
VERTEX_INVOLUTION = {1: 4, 2: 3, 3: 2, 4: 1}

CARTAN = cartan_from_quiver(
    QUIVER,
    vertex_order=tuple(VERTEX_OF[k] for k in (1, 2, 3, 4)),
    labels=(1, 2, 3, 4),
)

COLORS = (1, 2, 3, 4)


class InvalidComponentError(ValueError):
    """Rank data that does not name an irreducible component."""


def ranks_valid(dims, ranks) -> bool:
    d1, d2, d3, d4 = dims
    r1, r2 = ranks
    if min(dims) < 0 or min(ranks) < 0:
        return False
    if d1 + d4 >= d2 + d3:
        return r1 + r2 == d2 + d3 and r1 <= d1 and r2 <= d4
    return r1 == d1 and r2 == d4


@dataclass(frozen=True)
class Component:
    """An irreducible component (dims; r1, r2); validity is checked on construction."""

    dims: tuple
    ranks: tuple

    def __post_init__(self):
        dims = tuple(int(x) for x in self.dims)
        ranks = tuple(int(x) for x in self.ranks)
        if len(dims) != 4 or len(ranks) != 2:
            raise InvalidComponentError(f"need 4 dims and 2 ranks, got {dims}:{ranks}")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "ranks", ranks)
        if not ranks_valid(dims, ranks):
            raise InvalidComponentError(f"{format_component_data(dims, ranks)} is not a component")

    @property
    def total(self) -> int:
        return sum(self.dims)


ZERO_COMPONENT = Component((0, 0, 0, 0), (0, 0))


def format_component_data(dims, ranks) -> str:
    return ",".join(map(str, dims)) + ":" + ",".join(map(str, ranks))


def format_component(c: Component) -> str:
    return format_component_data(c.dims, c.ranks)


def parse_component(text: str) -> Component:
    try:
        dims_part, ranks_part = text.split(":")
        dims = tuple(int(x) for x in dims_part.split(","))
        ranks = tuple(int(x) for x in ranks_part.split(","))
    except ValueError:
        raise ValueError(f"expected 'd1,d2,d3,d4:r1,r2', got {text!r}") from None
    return Component(dims, ranks)


def component_count(dims) -> int:
    """Number of components for a dimension vector, in closed form."""
    d1, d2, d3, d4 = dims
    s = d2 + d3
    if d1 + d4 < s:
        return 1
    return min(d1, s) - max(0, s - d4) + 1


def enumerate_components(dims):
    """All components on a dimension vector, ordered by increasing r1."""
    d1, d2, d3, d4 = dims
    if min(dims) < 0:
        raise ValueError(f"negative dimension vector {dims}")
    s = d2 + d3
    if d1 + d4 < s:
        return [Component(dims, (d1, d4))]
    return [Component(dims, (r1, s - r1))
            for r1 in range(max(0, s - d4), min(d1, s) + 1)]


def iter_components(bound: int):
    """All components with total dimension at most bound, in graph order."""
    for total in range(bound + 1):
        for d1, d2, d3 in itertools.product(range(total + 1), repeat=3):
            d4 = total - d1 - d2 - d3
            if d4 >= 0:
                yield from enumerate_components((d1, d2, d3, d4))


def weight(c: Component):
    return tuple(-d for d in c.dims)


def _bump(dims, i, delta):
    return tuple(d + (delta if k == i - 1 else 0) for k, d in enumerate(dims))


def _candidate(dims, ranks):
    """The component named by (dims, ranks) if there is one, else None."""
    if ranks_valid(dims, ranks):
        return Component(dims, ranks)
    return None


def apply_e(c: Component, i: int):
    """Raising operator: decrement d_i, with rank data per the case table."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    lhs, rhs = d1 + d4, d2 + d3
    if i == 1:
        if lhs <= rhs:
            return _candidate(_bump(c.dims, 1, -1), (r1 - 1, r2))
        if d1 > r1:
            return _candidate(_bump(c.dims, 1, -1), (r1, r2))
        return None
    if i == 2:
        if d2 <= r1:
            return None
        if lhs < rhs:
            return _candidate(_bump(c.dims, 2, -1), (r1, r2))
        return _candidate(_bump(c.dims, 2, -1), (r1, r2 - 1))
    if i == 3:
        if d3 <= r1:
            return None
        if lhs < rhs:
            return _candidate(_bump(c.dims, 3, -1), (r1, r2))
        return _candidate(_bump(c.dims, 3, -1), (r1, r2 - 1))
    if i == 4:
        if d4 > r2:
            return _candidate(_bump(c.dims, 4, -1), (r1, r2))
        return None
    raise ValueError(f"color {i} out of range")


def apply_f(c: Component, i: int):
    """Lowering operator: increment d_i, with rank data per the case table."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    lhs, rhs = d1 + d4, d2 + d3
    if i == 1:
        if lhs < rhs:
            return _candidate(_bump(c.dims, 1, +1), (r1 + 1, r2))
        return _candidate(_bump(c.dims, 1, +1), (r1, r2))
    if i == 2:
        if d2 < r1:
            return None
        if lhs <= rhs:
            return _candidate(_bump(c.dims, 2, +1), (r1, r2))
        return _candidate(_bump(c.dims, 2, +1), (r1, r2 + 1))
    if i == 3:
        if d3 < r1:
            return None
        if lhs <= rhs:
            return _candidate(_bump(c.dims, 3, +1), (r1, r2))
        return _candidate(_bump(c.dims, 3, +1), (r1, r2 + 1))
    if i == 4:
        if lhs >= rhs:
            return _candidate(_bump(c.dims, 4, +1), (r1, r2))
        return None
    raise ValueError(f"color {i} out of range")


def apply_e_star(c: Component, i: int):
    """Star raising operator (quotient-side structure)."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    lhs, rhs = d1 + d4, d2 + d3
    if i == 1:
        if d1 > r1:
            return _candidate(_bump(c.dims, 1, -1), (r1, r2))
        return None
    if i == 2:
        if d2 <= r2:
            return None
        if lhs < rhs:
            return _candidate(_bump(c.dims, 2, -1), (r1, r2))
        return _candidate(_bump(c.dims, 2, -1), (r1 - 1, r2))
    if i == 3:
        if d3 <= r2:
            return None
        if lhs < rhs:
            return _candidate(_bump(c.dims, 3, -1), (r1, r2))
        return _candidate(_bump(c.dims, 3, -1), (r1 - 1, r2))
    if i == 4:
        if lhs <= rhs:
            return _candidate(_bump(c.dims, 4, -1), (r1, r2 - 1))
        if d4 > r2:
            return _candidate(_bump(c.dims, 4, -1), (r1, r2))
        return None
    raise ValueError(f"color {i} out of range")


def apply_f_star(c: Component, i: int):
    """Star lowering operator (quotient-side structure)."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    lhs, rhs = d1 + d4, d2 + d3
    if i == 1:
        if lhs >= rhs:
            return _candidate(_bump(c.dims, 1, +1), (r1, r2))
        return None
    if i == 2:
        if d2 < r2:
            return None
        if lhs <= rhs:
            return _candidate(_bump(c.dims, 2, +1), (r1, r2))
        return _candidate(_bump(c.dims, 2, +1), (r1 + 1, r2))
    if i == 3:
        if d3 < r2:
            return None
        if lhs <= rhs:
            return _candidate(_bump(c.dims, 3, +1), (r1, r2))
        return _candidate(_bump(c.dims, 3, +1), (r1 + 1, r2))
    if i == 4:
        if lhs < rhs:
            return _candidate(_bump(c.dims, 4, +1), (r1, r2 + 1))
        return _candidate(_bump(c.dims, 4, +1), (r1, r2))
    raise ValueError(f"color {i} out of range")


def epsilon(c: Component, i: int) -> int:
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    if i == 1:
        return d1
    if i == 2:
        return max(0, d2 - r1)
    if i == 3:
        return max(0, d3 - r1)
    if i == 4:
        return d4 - r2
    raise ValueError(f"color {i} out of range")


def phi(c: Component, i: int) -> int:
    return epsilon(c, i) + pairing(CARTAN, i, weight(c))


def epsilon_star(c: Component, i: int) -> int:
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    if i == 1:
        return d1 - r1
    if i == 2:
        return max(0, d2 - r2)
    if i == 3:
        return max(0, d3 - r2)
    if i == 4:
        return d4
    raise ValueError(f"color {i} out of range")


def phi_star(c: Component, i: int) -> int:
    return epsilon_star(c, i) + pairing(CARTAN, i, weight(c))


def epsilon_prime(c: Component, i: int) -> int:
    """Exact number of times the raising operator applies."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    if i == 1:
        return d1 if d4 == r2 else d1 - r1
    if i == 2:
        return max(0, d2 - r1)
    if i == 3:
        return max(0, d3 - r1)
    if i == 4:
        return d4 - r2
    raise ValueError(f"color {i} out of range")


def phi_prime(c: Component, i: int):
    """Exact number of times the lowering operator applies (may be infinite).

    For colors 2 and 3 the count is unbounded only when r1 = d1; otherwise
    the lowering chain absorbs into the sink rank and stops after d4 - r2
    steps.
    """
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    if i == 1:
        return INFINITY
    if i == 2:
        if d2 < r1:
            return 0
        return INFINITY if r1 == d1 else d4 - r2
    if i == 3:
        if d3 < r1:
            return 0
        return INFINITY if r1 == d1 else d4 - r2
    if i == 4:
        return INFINITY if d1 + d4 >= d2 + d3 else 0
    raise ValueError(f"color {i} out of range")


def epsilon_star_prime(c: Component, i: int) -> int:
    """Exact number of times the star raising operator applies."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    if i == 1:
        return d1 - r1
    if i == 2:
        return max(0, d2 - r2)
    if i == 3:
        return max(0, d3 - r2)
    if i == 4:
        return d4 if d1 == r1 else d4 - r2
    raise ValueError(f"color {i} out of range")


def phi_star_prime(c: Component, i: int):
    """Exact number of times the star lowering operator applies (may be infinite)."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    if i == 1:
        return INFINITY if d1 + d4 >= d2 + d3 else 0
    if i == 2:
        if d2 < r2:
            return 0
        return INFINITY if r2 == d4 else d1 - r1
    if i == 3:
        if d3 < r2:
            return 0
        return INFINITY if r2 == d4 else d1 - r1
    if i == 4:
        return INFINITY
    raise ValueError(f"color {i} out of range")


_INVARIANTS = {
    "eps": epsilon,
    "phi": phi,
    "eps_prime": epsilon_prime,
    "phi_prime": phi_prime,
    "eps_star": epsilon_star,
    "phi_star": phi_star,
    "eps_star_prime": epsilon_star_prime,
    "phi_star_prime": phi_star_prime,
}


def invariant(c: Component, i: int, kind: str):
    try:
        fn = _INVARIANTS[kind]
    except KeyError:
        raise ValueError(f"unknown invariant kind {kind!r}") from None
    return fn(c, i)


def dual(c: Component) -> Component:
    """Transpose duality on components: flip dims and swap the two ranks."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    return Component((d4, d3, d2, d1), (r2, r1))


# ---------------------------------------------------------------------------
# Operator words


_STEP_FUNCTIONS = {
    "e": apply_e,
    "f": apply_f,
    "e*": apply_e_star,
    "f*": apply_f_star,
}


def parse_word(text: str):
    """Parse a word like "f3 f1 f1 f3 f4 f4"; rightmost step applies first.

    Color range is not checked here; the operators of the target crystal
    reject colors they do not carry.
    """
    steps = []
    for token in text.split():
        kind = token.rstrip("0123456789")
        digits = token[len(kind):]
        if kind not in _STEP_FUNCTIONS or not digits:
            raise ValueError(f"bad operator token {token!r}")
        color = int(digits)
        if color < 1:
            raise ValueError(f"color {color} out of range in {token!r}")
        steps.append((kind, color))
    return tuple(steps)


def format_word(word) -> str:
    return " ".join(f"{kind}{color}" for kind, color in word)


def apply_step(c, kind: str, i: int):
    if c is None:
        return None
    return _STEP_FUNCTIONS[kind](c, i)


def apply_word(word, c: Component):
    """Apply a word right-to-left; returns (result-or-None, trace of states)."""
    trace = [c]
    current = c
    for kind, color in reversed(word):
        current = apply_step(current, kind, color)
        trace.append(current)
        if current is None:
            break
    return current, trace


def connectivity_word(c: Component):
    """A raising word taking the component to the base point without vanishing."""
    d1, d2, d3, d4 = c.dims
    r1, r2 = c.ranks
    return (("e", 4),) * r2 + (("e", 3),) * d3 + (("e", 2),) * d2 \
        + (("e", 1),) * d1 + (("e", 4),) * (d4 - r2)


def counterexample_words():
    """Two lowering words that collide on components but not in the ambient
    free-crystal model."""
    word_a = parse_word("f3 f1 f1 f3 f4 f4")
    word_b = parse_word("f1 f1 f3 f3 f4 f4")
    return word_a, word_b


# ---------------------------------------------------------------------------
# Fragments for exhaustive checks


def describe(c: Component):
    return c.dims, c.ranks


def fragment(bound: int, star: bool = False) -> CrystalFragment:
    eps, ph = (epsilon_star, phi_star) if star else (epsilon, phi)
    up, down = (apply_e_star, apply_f_star) if star else (apply_e, apply_f)
    return CrystalFragment(
        cartan=CARTAN,
        elements=tuple(iter_components(bound)),
        wt=weight,
        epsilon=eps,
        phi=ph,
        apply_e=up,
        apply_f=down,
    )


def relabeled_fragment(bound: int) -> CrystalFragment:
    """The plain structure with colors composed with the vertex involution.

    The duality map is a strict morphism from the star fragment onto this
    relabeled fragment.
    """
    a = VERTEX_INVOLUTION

    def wt_(c):
        return tuple(-c.dims[a[i] - 1] for i in COLORS)

    return CrystalFragment(
        cartan=CARTAN,
        elements=tuple(iter_components(bound)),
        wt=wt_,
        epsilon=lambda c, i: epsilon(c, a[i]),
        phi=lambda c, i: phi(c, a[i]),
        apply_e=lambda c, i: apply_e(c, a[i]),
        apply_f=lambda c, i: apply_f(c, a[i]),
    )
