"""Planar binary tree monomials encoded by their preorder serialization."""

from typing import Callable, Sequence, Union

from dicodim.terms.signature import Signature

Tree = Union[int, tuple[int, "Tree", "Tree"]]


class Monomial(tuple):
    """
    A monomial as its canonical preorder code.

    Internal nodes labelled by operation ``k`` are stored as ``-(k + 1)``,
    leaves as their (positive) variable index. A tree with d leaves has a
    code of length 2d - 1, so the code alone determines the tree. The
    canonical total order is (degree, code) lexicographically.
    """

    __slots__ = ()

    @classmethod
    def leaf(cls, i: int) -> "Monomial":
        if i < 1:
            raise ValueError(f"Variable index must be >= 1, got {i}")
        return cls((i,))

    @classmethod
    def node(cls, op: int, left: Sequence[int], right: Sequence[int]) -> "Monomial":
        return cls((-(op + 1), *left, *right))

    @classmethod
    def from_tree(cls, tree: Tree) -> "Monomial":
        out: list[int] = []

        def walk(t: Tree) -> None:
            if isinstance(t, int):
                out.append(t)
            else:
                op, left, right = t
                out.append(-(op + 1))
                walk(left)
                walk(right)

        walk(tree)
        return cls(out)

    @property
    def degree(self) -> int:
        return (len(self) + 1) // 2

    @property
    def is_leaf(self) -> bool:
        return len(self) == 1

    @property
    def op(self) -> int:
        if self.is_leaf:
            raise ValueError("A leaf has no operation")
        return -self[0] - 1

    def split(self) -> tuple[int, "Monomial", "Monomial"]:
        """Return (op, left, right) of an internal root."""
        if self.is_leaf:
            raise ValueError("Cannot split a leaf")
        need = 1
        i = 1
        while need:
            need += 1 if self[i] < 0 else -1
            i += 1
        return self.op, Monomial(self[1:i]), Monomial(self[i:])

    def tree(self) -> Tree:
        if self.is_leaf:
            return self[0]
        op, left, right = self.split()
        return (op, left.tree(), right.tree())

    def leaves(self) -> tuple[int, ...]:
        """Leaf labels in left-to-right order."""
        return tuple(c for c in self if c > 0)

    def ops_used(self) -> tuple[int, ...]:
        return tuple(-c - 1 for c in self if c < 0)

    def is_multilinear(self) -> bool:
        return sorted(self.leaves()) == list(range(1, self.degree + 1))

    def relabel(self, mapping: Callable[[int], int] | Sequence[int]) -> "Monomial":
        """Relabel leaves; a sequence maps i to ``mapping[i - 1]``."""
        if callable(mapping):
            return Monomial(c if c < 0 else mapping(c) for c in self)
        return Monomial(c if c < 0 else mapping[c - 1] for c in self)

    def relabel_ops(self, mapping: Callable[[int], int]) -> "Monomial":
        return Monomial(-(mapping(-c - 1) + 1) if c < 0 else c for c in self)

    def replace_leaf(self, i: int, sub: Sequence[int]) -> "Monomial":
        """Replace the (unique) leaf labelled i by the code ``sub``."""
        pos = self.index(i)
        return Monomial((*self[:pos], *sub, *self[pos + 1 :]))

    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (len(self), tuple(self))

    def render(self, sig: Signature) -> str:
        """Serialize as ``(t1 <op> t2)`` with variables ``x1, x2, ...``."""
        if self.is_leaf:
            return f"x{self[0]}"
        op, left, right = self.split()
        return f"({left.render(sig)} {sig.ops[op]} {right.render(sig)})"

    def __repr__(self) -> str:
        return f"Monomial({tuple(self)!r})"
