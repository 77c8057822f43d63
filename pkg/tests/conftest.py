from fractions import Fraction

from hypothesis import settings, strategies as st

from contactsym.exactpoly import Poly, num_vars

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.builds(Fraction, st.integers(-9, 9), st.integers(1, 4))


@st.composite
def polys(draw, n=1, max_terms=4, max_exp=2, fiber=True):
    nv = num_vars(n)
    width = nv if fiber else nv // 2
    exps = st.lists(st.integers(0, max_exp), min_size=width, max_size=width)
    terms = draw(st.dictionaries(exps.map(tuple), rationals, max_size=max_terms))
    if not fiber:
        terms = {e + (0,) * (nv - width): c for e, c in terms.items()}
    return Poly(n, terms)


@st.composite
def homogeneous_polys(draw, n=1, k=1, max_terms=4, base_deg=2):
    """Fiber degree exactly ``k`` (or zero)."""
    from contactsym.sampling import make_rng, random_poly
    seed = draw(st.integers(0, 2 ** 32))
    return random_poly(make_rng(seed, "hyp"), n, k, base_deg, max_terms)
