"""Machine checks of the symmetrization identity and of dim Z^(n) = n."""

from itertools import permutations

from loguru import logger

from dicodim.linalg import row_space
from dicodim.terms.permutation import all_permutations
from dicodim.zinbiel.words import ZElement, ZWord, product, right_normed, right_normed_word


def symmetrized_sum(n: int) -> ZElement:
    """Sum over S_n of the words (z_σ1 ... z_σn) z_{n+1}, n! unit terms."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return ZElement({ZWord((*perm, n + 1)): 1 for perm in all_permutations(n)})


def lemma3_sides(n: int) -> tuple[ZElement, ZElement]:
    """
    Normal forms of sum_i (z1 ... ẑi ... (zn zi) ...) z_{n+1} and of
    z1 (z2 ( ... (zn z_{n+1}) ... )).
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    last = ZElement.word(n + 1)
    lhs = ZElement.zero()
    for i in range(1, n + 1):
        lhs = lhs + product(right_normed((0, n), i), last)
    rhs = right_normed_word(list(range(1, n + 2)))
    return lhs, rhs


def verify_lemma3(n: int) -> bool:
    """Both sides agree and equal the symmetrized sum."""
    lhs, rhs = lemma3_sides(n)
    target = symmetrized_sum(n)
    ok = lhs == rhs == target
    logger.debug(f"Symmetrization identity n={n}: {len(lhs)} terms, holds={ok}")
    return ok


def zn_dimension(n: int) -> int:
    """Rank of the n! right-normed multilinear monomials in the word basis."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    index = {ZWord(p): k for k, p in enumerate(permutations(range(1, n + 1)))}
    rows = [
        {index[w]: c for w, c in right_normed_word(perm).terms.items()}
        for perm in all_permutations(n)
    ]
    return row_space(rows, len(index)).rank
