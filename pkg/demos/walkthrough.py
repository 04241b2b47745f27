"""A short tour: enumeration, push and pull, one sjdt slide, straightening."""

from supertableaux import (
    HookTableau,
    Signature,
    enumerate_semistandard,
    pull,
    push,
    straighten,
    validate_shape,
)
from supertableaux.extraction import largest_extractable_pair
from supertableaux.tableaux import render_tableau
from supertableaux.taquin import SkewTableau, maxjdt, render_trace, skew_from_pair

sl12 = Signature(1, 2)
lam = validate_shape(sl12, (2,), (1,))
print(f"|SS^{lam}| = {len(enumerate_semistandard(lam))}")
for T in enumerate_semistandard(lam):
    U = push(T)
    assert pull(U, lam) == T
    print(f"  {T!s:>8}  ->  push = {U}")

# classical push by sliding
T = HookTableau(validate_shape(Signature(4, 0), (2, 2, 1, 0), ()), ((1, 1, 2, 2, 3), (2, 3, 4), (4,)), ())
print("\npush by jeu de taquin:")
print("\n".join(render_tableau(maxjdt(skew_from_pair(T, largest_extractable_pair(T))))))

# one slide in sl(2,3), frame by frame
S = SkewTableau(
    Signature(2, 3),
    frozenset({(1, 1), (2, 1)}),
    {(1, 2): 1, (1, 3): 2, (2, 2): 2, (3, 1): 3, (4, 1): 3, (5, 1): 4, (3, 2): 4, (4, 2): 5},
)
print("\nslide from (2,1):")
for frame in render_trace(S, (2, 1)):
    print("\n".join(frame))
    print()

# a non-semistandard row in sl(1,1) written in the basis
W = HookTableau(validate_shape(Signature(1, 1), (2,), ()), ((2, 1),), ())
print(f"straighten({W}) = {straighten(W)}")
