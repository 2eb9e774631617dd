"""A few small effect algebras used throughout the examples and tests."""

from .algebra import EffectAlgebra, from_sums


def b2() -> EffectAlgebra:
    return from_sums(2, {}, [1, 0], names=["0", "1"])


def chain(n: int) -> EffectAlgebra:
    """The Lukasiewicz chain with ``n`` elements: ``i + j`` defined iff ``i + j <= n - 1``."""
    top = n - 1
    sums = {(i, j): i + j for i in range(n) for j in range(n) if i + j <= top}
    names = ["0"] + [f"c{i}" for i in range(1, top)] + ["1"] if n > 1 else ["0"]
    return from_sums(n, sums, [top - i for i in range(n)], names=names)


def l3() -> EffectAlgebra:
    return from_sums(3, {(1, 1): 2}, [2, 1, 0], names=["0", "a", "1"])


def l4() -> EffectAlgebra:
    return from_sums(4, {(1, 1): 2, (1, 2): 3}, [3, 2, 1, 0], names=["0", "a", "b", "1"])


def boolean4() -> EffectAlgebra:
    return from_sums(4, {(1, 2): 3}, [3, 2, 1, 0], names=["0", "a", "b", "1"])


def horizontal_sum() -> EffectAlgebra:
    """Two three-element chains glued at their bounds."""
    return from_sums(4, {(1, 1): 3, (2, 2): 3}, [3, 1, 2, 0], names=["0", "a", "b", "1"])


STANDARD = {
    "b2": b2,
    "l3": l3,
    "l4": l4,
    "boolean4": boolean4,
    "hsum": horizontal_sum,
}
