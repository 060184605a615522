"""A walk through Markov strings over nonstandard polynomial models.

Run with ``python3 demos/markov_tour.py``.
"""
from urstrings import markov as mk
from urstrings.errors import NotEuclidean
from urstrings.rings import ModelId, parse_matrix, parse_poly, render_poly

M0, M2 = ModelId.M0, ModelId.M2


def show(title, value):
    print(f"{title:<38} {value}")


def main():
    # finite words are SL2 matrices with non-negative entries
    w = "abba"
    m = mk.encode_string(ModelId.NAT, w)
    show(f"encode {w!r}", m)
    show("decode back", mk.decode_string(m))

    # a matrix in Z[X] whose top row is Bezout but not Euclidean in M0
    a = parse_matrix("[[9,3X+2],[3X+4,X^2+2X+1]]")
    show("bez_euc_check over M0", mk.bez_euc_check(M0, *a))
    show("bez_euc_check over M2", mk.bez_euc_check(M2, *a))

    # in M2 the same matrix has a normal form with nonstandard runs
    alpha = mk.Mat2(M2, *a)
    visited, nf = mk.normal_form_steps(alpha)
    show("normal form", nf)
    show("profile", " ".join(str(r) for r in mk.profile(nf)))
    for step in visited:
        show(f"  norm {mk.ord_norm(step)}", step)

    # cutting the last run: only slope 1/3 stays inside M0
    for off in ("X/5", "X/3"):
        inside = mk.cut_in_model(nf, mk.Cut(3, parse_poly(off)), M0)
        show(f"prefix up to A^({off}) in M0?", inside)

    # the same matrix read as an ur-string does not pop in M0
    try:
        mk.urs_pop(mk.Mat2(M0, *a))
    except NotEuclidean as e:
        show("urs_pop over M0", f"fails: {e}")
    rest, last = mk.urs_pop(alpha)
    show("urs_pop over M2", f"{rest} * [{render_poly(last)}]")


if __name__ == "__main__":
    main()
