"""Verification suites: every identity of the calculus checked exactly on
seeded random symbols.

A run is split into independent cells ``(check id, parameters)``.  Each
cell draws its own random stream from ``(seed, check id, parameters)`` so
results do not depend on execution order or on how cells are fanned out.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from .contact import (
    alpha_coefficients,
    base_monomials,
    contact_field,
    contact_volume_coefficient,
    hamiltonian_density,
    is_contact,
    lagrange_bracket,
    sl_generators,
    sp_generators,
)
from .decomposition import (
    SingularWeightError,
    coeff_b,
    coeff_c,
    decompose,
    filtration_level,
    graded_inverse_check,
    in_filtration,
    iterate,
    projector_p,
    reconstruct,
    section_power,
    section_s,
    singular_report,
    singular_set,
)
from .exactpoly import Poly, base_dim, xi_index
from .linalg import Echelon, in_span, rank, solve_in_span
from .operators import (
    D_poly,
    H_operator,
    StructureConstants,
    X_operator,
    big_X,
    commutator,
    euler_xi_poly,
    i_alpha,
    i_alpha_operator,
    i_alpha_poly,
    lie_operator,
    mul_xi_t,
)
from .sampling import make_rng, random_density, random_poly
from .slices import filter_basis, filter_split_account, slice_weights, surjectivity_on_slice
from .symbolfile import serialize_symbol
from .symbols import (
    PolyVectorField,
    Symbol,
    from_R_grading,
    lie_derivative_density,
    lie_derivative_symbol,
    to_R_grading,
    vector_field_bracket,
)

__all__ = ["SuiteConfig", "CheckResult", "Report", "SUITES", "CHECKS", "run_suite", "plan"]

DEFAULT_DELTAS = (Fraction(1), Fraction(1, 2), Fraction(-1, 3), Fraction(7, 5))


@dataclass(frozen=True)
class SuiteConfig:
    n_list: tuple[int, ...] = (1, 2)
    k_max: int = 4
    deltas: tuple[Fraction, ...] = DEFAULT_DELTAS
    base_deg: int = 3
    trials: int = 25
    seed: int = 0
    suites: tuple[str, ...] = ()
    jobs: int = 1
    # negative-control hook: perturb b_{k,1} so projectors stop being idempotent
    corrupt_b: bool = False

    def selected(self) -> tuple[str, ...]:
        return self.suites or tuple(SUITES)

    def to_dict(self) -> dict:
        return {
            "n": list(self.n_list),
            "k_max": self.k_max,
            "deltas": [str(d) for d in self.deltas],
            "base_deg": self.base_deg,
            "trials": self.trials,
            "seed": self.seed,
            "suites": list(self.selected()),
            "corrupt_b": self.corrupt_b,
        }


@dataclass
class CheckResult:
    id: str
    suite: str
    statement: str
    params: dict
    status: str                       # "pass" | "fail" | "skip"
    detail: str = ""
    counterexample: str | None = None
    seconds: float = 0.0

    def sort_key(self):
        return (self.suite, self.id, json.dumps(self.params, sort_keys=True))


@dataclass
class Report:
    config: dict
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def failed(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail"]

    @property
    def ok(self) -> bool:
        return not self.failed

    def summary(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    def to_json(self, timing: bool = True) -> str:
        checks = []
        for c in self.checks:
            d = asdict(c)
            if not timing:
                d.pop("seconds")
            checks.append(d)
        return json.dumps({"config": self.config, "summary": self.summary(), "checks": checks},
                          indent=2, sort_keys=True)


class Fail(Exception):
    """Raised inside a cell to report a failing identity."""

    def __init__(self, detail: str, witness: Symbol | None = None):
        self.witness = witness
        super().__init__(detail)


class Skip(Exception):
    pass


# -- helpers -----------------------------------------------------------------

def _b_for(cfg: SuiteConfig) -> Callable:
    if not cfg.corrupt_b:
        return coeff_b

    def corrupted(k, l, sc):
        value = coeff_b(k, l, sc)
        return value * 2 if l == 1 else value
    return corrupted


def _rng(cfg: SuiteConfig, check: str, params: dict):
    return make_rng(cfg.seed, check, json.dumps(params, sort_keys=True))


def _rsym(rng, n, k, delta, B, grading="R") -> Symbol:
    return Symbol(random_poly(rng, n, k, B), delta, grading)


def _expect_equal(lhs: Symbol, rhs: Symbol, what: str, witness: Symbol) -> None:
    if lhs != rhs:
        raise Fail(f"{what}: got {lhs.poly.pretty()} expected {rhs.poly.pretty()}", witness)


def _expect_zero(x: Symbol, what: str, witness: Symbol) -> None:
    if not x.is_zero():
        raise Fail(f"{what}: nonzero {x.poly.pretty()}", witness)


def _field_vec(Z: PolyVectorField) -> dict:
    return {(j, e): c for j, comp in enumerate(Z.components) for e, c in comp.terms.items()}


def _random_field(rng, n: int, degree: int) -> PolyVectorField:
    return PolyVectorField(n, [random_poly(rng, n, 0, degree, 3) for _ in range(base_dim(n))])


@lru_cache(maxsize=None)
def _kernel_polys(n: int, k: int, w: int) -> tuple[Poly, ...]:
    # ker i(alpha) on a slice does not depend on delta
    return tuple(b.poly for b in filter_basis(n, k, 1, w, Fraction(0)))


def _random_kernel_member(rng, n, k, delta, B) -> Symbol:
    """Random element of ``R^k ∩ ker i(alpha)`` built by exact linear algebra
    (independent of the projector formula)."""
    out = Poly.zero(n)
    for _ in range(2):
        w = rng.choice(list(slice_weights(k, B)))
        basis = _kernel_polys(n, k, w)
        for b in rng.sample(basis, min(3, len(basis))):
            out = out + b.scale(Fraction(rng.randint(-9, 9), rng.choice((1, 2, 3))))
    return Symbol(out, delta, "R")


# -- check implementations ---------------------------------------------------
# Each takes (cfg, **params) and returns a detail string, or raises Fail/Skip.

def chk_alpha_nondegenerate(cfg, n):
    c = contact_volume_coefficient(n)
    if not c:
        raise Fail("alpha ^ (d alpha)^n vanishes")
    return f"alpha ^ (d alpha)^n = {c.pretty()} dvol"


def chk_sp_generators(cfg, n):
    sp = sp_generators(n)
    want = (n + 1) * (2 * n + 3)
    if len(sp) != want:
        raise Fail(f"{len(sp)} generators, expected {want}")
    for Z, label in zip(sp, sp.labels):
        if not is_contact(Z)[0]:
            raise Fail(f"{label} is not contact", Z.to_symbol())
    r = rank(_field_vec(Z) for Z in sp)
    if r != want:
        raise Fail(f"rank {r}, expected {want}")
    return f"{want} contact generators, rank {r}"


def chk_sp_closure(cfg, n):
    sp = list(sp_generators(n))
    ech = Echelon()
    for Z in sp:
        ech.add(_field_vec(Z))
    for a in range(len(sp)):
        for b in range(a + 1, len(sp)):
            br = vector_field_bracket(sp[a], sp[b])
            residual, _ = ech.reduce(_field_vec(br))
            if residual:
                raise Fail(f"bracket of generators {a},{b} leaves the span", br.to_symbol())
    return f"{len(sp) * (len(sp) - 1) // 2} brackets in span"


def chk_sl_span(cfg, n):
    sl = sl_generators(n)
    vecs = [_field_vec(Z) for Z in sl]
    r = rank(vecs)
    if r != sl.expected_rank:
        raise Fail(f"sl spanning list has rank {r}, expected {sl.expected_rank}")
    for Z, label in zip(sp_generators(n), sp_generators(n).labels):
        if solve_in_span(vecs, _field_vec(Z)) is None:
            raise Fail(f"{label} not in the projective algebra", Z.to_symbol())
    return f"rank {r}; sp inside sl"


def chk_hamiltonian_contact(cfg, n):
    rng = _rng(cfg, "contact.hamiltonian_fields", {"n": n})
    for _ in range(cfg.trials):
        f = random_density(rng, n, 4)
        Z = contact_field(f)
        ok, fz = is_contact(Z)
        if not ok:
            raise Fail(f"X({f.pretty()}) is not contact", Z.to_symbol())
        if fz != f.diff(2 * n).scale(-2):
            # for X(f) at weight -1/(n+1) the conformal factor is -2 df/dt
            raise Fail(f"unexpected conformal factor {fz.pretty()}", Z.to_symbol())
    return f"{cfg.trials} fields"


def chk_representation(cfg, n, k):
    rng = _rng(cfg, "symbols.representation", {"n": n, "k": k})
    for t in range(cfg.trials):
        delta = cfg.deltas[t % len(cfg.deltas)]
        Z, W = _random_field(rng, n, 2), _random_field(rng, n, 2)
        u = _rsym(rng, n, k, delta, cfg.base_deg, "S")
        lhs = lie_derivative_symbol(Z, lie_derivative_symbol(W, u)) - \
            lie_derivative_symbol(W, lie_derivative_symbol(Z, u))
        rhs = lie_derivative_symbol(vector_field_bracket(Z, W), u)
        _expect_equal(lhs, rhs, "[L_Z, L_W] != L_[Z,W]", u)
        lz = lie_derivative_symbol(Z, u)
        if lz.weight != u.weight or not lz.poly.fiber_degrees() <= {k}:
            raise Fail("Lie derivative changed weight or fiber degree", u)
        if k == 0:
            dens = lie_derivative_density(Z, u.poly, delta)
            if dens != lz.poly:
                raise Fail("symbol action on degree 0 differs from the density action", u)
    return f"{cfg.trials} trials"


def chk_X_degree0(cfg, n):
    rng = _rng(cfg, "oracle.X_on_densities", {"n": n})
    for t in range(cfg.trials):
        delta = cfg.deltas[t % len(cfg.deltas)]
        f = random_density(rng, n, 4)
        u = Symbol(f, delta, "S")
        _expect_equal(big_X(u), hamiltonian_density(f, delta), "X on S^0 differs from X(f)", u)
    return f"{cfg.trials} densities"


def chk_hamiltonian_from_bracket(cfg, n):
    """Principal symbol of ``g -> {f, g}`` read off from ``g = x^j`` at weight 0."""
    rng = _rng(cfg, "oracle.hamiltonian_from_bracket", {"n": n})
    m = base_dim(n)
    for t in range(cfg.trials):
        lam = cfg.deltas[t % len(cfg.deltas)]
        f = random_density(rng, n, 4)
        principal = Poly.zero(n)
        for j in range(m):
            coeff, _ = lagrange_bracket(f, lam, Poly.var(n, j), 0)
            principal = principal + coeff * Poly.var(n, xi_index(n, j))
        h = hamiltonian_density(f, lam)
        if h.poly != principal:
            raise Fail("X(f) differs from the principal symbol of the bracket",
                       Symbol(f, lam, "S"))
        if h.weight != lam + Fraction(1, n + 1):
            raise Fail(f"wrong output weight {h.weight}")
    return f"{cfg.trials} densities"


def chk_lagrange_invariance(cfg, n):
    rng = _rng(cfg, "contact.lagrange_invariance", {"n": n})
    fields = list(sp_generators(n))
    fields += [contact_field(random_density(rng, n, 4)) for _ in range(cfg.trials)]
    for i, Z in enumerate(fields):
        lam = cfg.deltas[i % len(cfg.deltas)]
        mu = cfg.deltas[(i + 1) % len(cfg.deltas)] - 1
        f, g = random_density(rng, n, 3), random_density(rng, n, 3)
        br, w = lagrange_bracket(f, lam, g, mu)
        lhs = lie_derivative_density(Z, br, w)
        rhs = lagrange_bracket(lie_derivative_density(Z, f, lam), lam, g, mu)[0] + \
            lagrange_bracket(f, lam, lie_derivative_density(Z, g, mu), mu)[0]
        if lhs != rhs:
            raise Fail(f"Lagrange bracket not invariant under field #{i}", Z.to_symbol())
        anti, _ = lagrange_bracket(g, lam, f, lam)
        if lagrange_bracket(f, lam, g, lam)[0] != -anti:
            raise Fail("bracket is not antisymmetric at equal weights", Symbol(f, lam, "S"))
    return f"{len(fields)} contact fields"


def chk_sl2(cfg, n, k, delta):
    rng = _rng(cfg, "sl2.relations", {"n": n, "k": k, "delta": str(delta)})
    I, X, H = i_alpha_operator(n), X_operator(n), H_operator(n)
    iX, HI, HX = commutator(I, X), commutator(H, I), commutator(H, X)
    for _ in range(cfg.trials):
        u = _rsym(rng, n, k, delta, cfg.base_deg)
        _expect_equal(iX(u), H(u), "[i(alpha), X] != H", u)
        _expect_equal(HI(u), I(u), "[H, i(alpha)] != i(alpha)", u)
        _expect_equal(HX(u), -X(u), "[H, X] != -X", u)
    return f"{cfg.trials} symbols"


def chk_sl2_lemmas(cfg, n, k):
    """``[i, D] = -1/2 E_xi - xi_t i`` and ``[i, xi_t] = -1/2`` as polynomial operators."""
    rng = _rng(cfg, "sl2.proof_commutators", {"n": n, "k": k})
    half = Fraction(1, 2)
    for _ in range(cfg.trials):
        u = random_poly(rng, n, k, cfg.base_deg)
        lhs = i_alpha_poly(D_poly(u)) - D_poly(i_alpha_poly(u))
        rhs = -euler_xi_poly(u).scale(half) - mul_xi_t(i_alpha_poly(u))
        if lhs != rhs:
            raise Fail("[i(alpha), D] identity fails", Symbol(u, 0, "S"))
        if i_alpha_poly(mul_xi_t(u)) - mul_xi_t(i_alpha_poly(u)) != -u.scale(half):
            raise Fail("[i(alpha), xi_t] != -1/2", Symbol(u, 0, "S"))
    return f"{cfg.trials} polynomials"


def chk_powers(cfg, n, k, delta):
    rng = _rng(cfg, "powers.commutators", {"n": n, "k": k, "delta": str(delta)})
    sc = StructureConstants(n, delta)
    for _ in range(cfg.trials):
        u = _rsym(rng, n, k, delta, cfg.base_deg)
        iu = i_alpha(u)
        Xu = [u]                       # X^j u
        Xiu = [iu]                     # X^j i u
        for _ in range(k + 1):
            Xu.append(big_X(Xu[-1]))
            Xiu.append(big_X(Xiu[-1]))
        iu_pows = [u]                  # i^j u
        for _ in range(k + 1):
            iu_pows.append(i_alpha(iu_pows[-1]))
        _expect_zero(iu_pows[k + 1], f"i(alpha)^{k + 1} != 0 on R^{k}", u)
        for l in range(1, k + 2):
            lhs = i_alpha(Xu[l]) - Xiu[l]
            _expect_equal(lhs, Xu[l - 1] * sc.r(l, k), f"i X^{l} - X^{l} i != r({l},{k}) X^{l - 1}", u)
            lhs = big_X(iu_pows[l]) - iterate(i_alpha, Xu[1], l)
            _expect_equal(lhs, iu_pows[l - 1] * -sc.r(l, k - l + 1),
                          f"X i^{l} - i^{l} X != -r({l},{k - l + 1}) i^{l - 1}", u)
    return f"{cfg.trials} symbols, l = 1..{k + 1}"


def chk_i_alpha_invariance(cfg, n, k):
    rng = _rng(cfg, "invariance.i_alpha", {"n": n, "k": k})
    I = i_alpha_operator(n)
    for t in range(cfg.trials):
        f = random_density(rng, n, 4)
        Z = contact_field(f)
        delta = cfg.deltas[t % len(cfg.deltas)]
        u = _rsym(rng, n, k, delta, cfg.base_deg, "S")
        _expect_zero(commutator(lie_operator(Z), I)(u), f"[L_X({f.pretty()}), i(alpha)] != 0", u)
    return f"{cfg.trials} contact fields"


def chk_X_invariance(cfg, n, k, delta):
    rng = _rng(cfg, "invariance.X_sp", {"n": n, "k": k, "delta": str(delta)})
    X = X_operator(n)
    ops = [(label, commutator(lie_operator(Z), X))
           for Z, label in zip(sp_generators(n), sp_generators(n).labels)]
    for _ in range(cfg.trials):
        u = _rsym(rng, n, k, delta, cfg.base_deg)
        for label, op in ops:
            _expect_zero(op(u), f"[L_{label}, X] != 0", u)
    return f"{len(ops)} generators x {cfg.trials} symbols"


def chk_X_noninvariance(cfg, n, k):
    Z = contact_field(Poly.var(n, 0, 3))
    op = commutator(lie_operator(Z), X_operator(n))
    if k == 0:
        # the k = 0 slice is spanned by base monomials, so checking those is exhaustive
        for delta in cfg.deltas:
            for m in base_monomials(n, cfg.base_deg):
                u = Symbol(m, delta, "R")
                _expect_zero(op(u), "[L_X(q^3), X] != 0 on densities", u)
        return "vanishes on the whole k=0 slice"
    rng = _rng(cfg, "invariance.X_not_contact", {"n": n, "k": k})
    for t in range(cfg.trials):
        u = _rsym(rng, n, k, cfg.deltas[t % len(cfg.deltas)], cfg.base_deg)
        if not op(u).is_zero():
            return f"witness found at trial {t}: {serialize_symbol(u).strip()}"
    raise Fail(f"[L_X(q^3), X] vanished on all {cfg.trials} symbols of degree {k}")


def _singular_guard(n, k, delta, needs_union=False):
    ks = range(1, k + 1) if needs_union else [k]
    for j in ks:
        rep = singular_report(j, n, delta)
        if rep.singular:
            raise Skip(f"singular weight: {rep.describe()}")


def chk_projector(cfg, n, k, delta):
    _singular_guard(n, k, delta)
    rng = _rng(cfg, "projector.laws", {"n": n, "k": k, "delta": str(delta)})
    p = projector_p(k, n, delta, b=_b_for(cfg))
    for _ in range(cfg.trials):
        u = _rsym(rng, n, k, delta, cfg.base_deg)
        pu = p(u)
        _expect_equal(p(pu), pu, "p_k(p_k(u)) != p_k(u)", u)
        _expect_zero(i_alpha(pu), "i(alpha) p_k(u) != 0", u)
        v = _random_kernel_member(rng, n, k, delta, cfg.base_deg)
        if not i_alpha(v).is_zero():
            raise AssertionError("kernel sampler produced a non-kernel element")
        _expect_equal(p(v), v, "p_k does not fix ker i(alpha)", v)
    return f"{cfg.trials} symbols"


def chk_singular_errors(cfg, n, k):
    """Constructors raise exactly on ``I_k`` (projector, section) or on the
    union ``I_1..I_k`` (decomposition)."""
    candidates = sorted(set(cfg.deltas) | set(singular_set(k, n))
                        | {d for j in range(1, k + 1) for d in singular_set(j, n)})
    seen = []
    for delta in candidates:
        in_k = delta in singular_set(k, n)
        in_union = any(delta in singular_set(j, n) for j in range(1, k + 1))
        for name, build, expect in (
            ("projector", lambda: projector_p(k, n, delta), in_k),
            ("section", lambda: section_s(k - 1, n, delta), in_k),
            ("decompose", lambda: decompose(Symbol(
                Poly.var(n, xi_index(n, 2 * n), k), delta, "R")), in_union),
        ):
            try:
                build()
                raised = False
            except SingularWeightError:
                raised = True
            if raised != expect:
                raise Fail(f"{name} at delta={delta}: raised={raised}, expected {expect}")
        if in_k:
            seen.append(str(delta))
    return f"raised exactly on I_{k} = {{{', '.join(seen)}}}"


def _raises_singular(build) -> str:
    try:
        build()
    except SingularWeightError as exc:
        return f"error raised: {exc}"
    raise Fail("constructor accepted a singular weight")


def chk_projector_raises(cfg, n, k, delta):
    return _raises_singular(lambda: projector_p(k, n, delta))


def chk_section_raises(cfg, n, k, delta):
    return _raises_singular(lambda: section_s(k - 1, n, delta))


def chk_decompose_raises(cfg, n, k, delta):
    u = Symbol(Poly.var(n, xi_index(n, 2 * n), k), delta, "R")
    return _raises_singular(lambda: decompose(u))


def chk_section(cfg, n, k, delta):
    _singular_guard(n, k, delta)
    rng = _rng(cfg, "section.right_inverse", {"n": n, "k": k, "delta": str(delta)})
    s = section_s(k - 1, n, delta, b=_b_for(cfg))
    for _ in range(cfg.trials):
        u = _rsym(rng, n, k - 1, delta, cfg.base_deg)
        su = s(u)
        if su.poly.fiber_degrees() - {k}:
            raise Fail("section did not land in R^k", u)
        _expect_equal(i_alpha(su), u, "i(alpha) s_(k-1) != Id", u)
    return f"{cfg.trials} symbols"


def chk_surjectivity(cfg, n, k):
    for w in slice_weights(k, cfg.base_deg):
        r, dim = surjectivity_on_slice(n, k, w)
        if r != dim:
            raise Fail(f"i(alpha): R^{k}_[{w}] -> R^{k - 1}_[{w + 2}] has rank {r} < {dim}")
    return f"onto on {len(slice_weights(k, cfg.base_deg))} slices (any delta)"


def chk_decomposition(cfg, n, k, delta):
    _singular_guard(n, k, delta, needs_union=True)
    rng = _rng(cfg, "decomposition.round_trip", {"n": n, "k": k, "delta": str(delta)})
    b = _b_for(cfg)
    sc = StructureConstants(n, delta)
    for _ in range(cfg.trials):
        u = _rsym(rng, n, k, delta, cfg.base_deg)
        d = decompose(u, b=b)
        for l, comp in d.components:
            _expect_zero(i_alpha(comp), f"component u_{l} not in ker i(alpha)", u)
            if comp.poly.fiber_degrees() - {k - l}:
                raise Fail(f"component u_{l} not in R^{k - l}", u)
            sl = section_power(l, k - l, n, delta, b=b)(comp)
            _expect_equal(sl, iterate(big_X, comp, l) * coeff_c(l, k - l, sc),
                          f"s^{l} != c({l},{k - l}) X^{l} on the kernel", comp)
        _expect_equal(reconstruct(d, b=b), u, "reconstruct(decompose(u)) != u", u)
        if k >= 1:
            # uniqueness: u = w + s(v) with w in the kernel forces w = p_k(u), v = i(u)
            w = _random_kernel_member(rng, n, k, delta, cfg.base_deg)
            v = _rsym(rng, n, k - 1, delta, cfg.base_deg)
            built = w + section_s(k - 1, n, delta, b=b)(v)
            _expect_equal(projector_p(k, n, delta, b=b)(built), w, "p_k(w + s(v)) != w", built)
            _expect_equal(i_alpha(built), v, "i(alpha)(w + s(v)) != v", built)
    return f"{cfg.trials} symbols"


def _random_filter_member(rng, n, k, l, delta, B) -> Symbol:
    """Element of ``F^{k,l}`` as ``sum_{j<l} X^j(w_j)`` with ``w_j`` in the kernel."""
    out = Symbol.zero(n, delta, "R")
    for j in range(min(l, k + 1)):
        w = _random_kernel_member(rng, n, k - j, delta, B)
        out = out + iterate(big_X, w, j)
    return out


def chk_filtration(cfg, n, k, delta):
    rng = _rng(cfg, "filtration.graded_maps", {"n": n, "k": k, "delta": str(delta)})
    sc = StructureConstants(n, delta)
    for _ in range(cfg.trials):
        for l in range(1, k + 2):
            u = _random_filter_member(rng, n, k, l, delta, cfg.base_deg)
            if not in_filtration(u, l) or filtration_level(u).l > l:
                raise Fail(f"constructed member is not in F^({k},{l})", u)
            if k >= 1 and not in_filtration(i_alpha(u), l - 1):
                raise Fail(f"i(alpha) F^({k},{l}) not inside F^({k - 1},{l - 1})", u)
            if not in_filtration(big_X(u), l + 1):
                raise Fail(f"X F^({k},{l}) not inside F^({k + 1},{l + 1})", u)
            if not graded_inverse_check(u, sc, l):
                raise Fail(f"X~ i~ != r({l - 1},{k - l + 1}) on gr^({k},{l})", u)
    return f"{cfg.trials} members per level"


def chk_filter_split(cfg, n, k, delta):
    sc = StructureConstants(n, delta)
    tested, skipped = 0, []
    for l in range(2, k + 2):
        prod = Fraction(1)
        for j in range(1, l):
            prod *= sc.r(j, k - l + 1)
        if not prod:
            skipped.append(l)
            continue
        for w in slice_weights(k, cfg.base_deg):
            acc = filter_split_account(n, k, l, w, delta)
            if not acc.ok:
                raise Fail(f"F^({k},{l}) split fails on slice {w}: {acc}")
            tested += 1
    if not tested and skipped:
        raise Skip(f"singular weight: prod r(j, k-l+1) = 0 for l in {skipped}")
    note = f"; l in {skipped} skipped (vanishing r-product)" if skipped else ""
    return f"{tested} (l, slice) rank accounts{note}"


def chk_contact_splitting(cfg, n):
    """Degree-1 symbols at S-weight 0 are vector fields; they split into a
    contact part and a part tangent to the distribution."""
    rng = _rng(cfg, "splitting.vector_fields", {"n": n})
    delta = Fraction(-1, n + 1)
    alpha = alpha_coefficients(n)
    for _ in range(cfg.trials):
        v = _rsym(rng, n, 1, 0, cfg.base_deg, "S")
        if v.is_zero():
            continue
        u = to_R_grading(v)
        if u.weight != delta:
            raise Fail(f"R-weight {u.weight}, expected {delta}", v)
        d = decompose(u)
        tangent = PolyVectorField.from_symbol(from_R_grading(d.component(0)))
        if alpha.contract(tangent):
            raise Fail("kernel component is not tangent to the distribution", v)
        _expect_zero(i_alpha(d.component(0)), "kernel component has i(alpha) != 0", v)
        contact_part = section_s(0, n, delta)(d.component(1))
        if not contact_part.is_zero():
            Z = PolyVectorField.from_symbol(from_R_grading(contact_part))
            if not is_contact(Z)[0]:
                raise Fail("complement component is not a contact field", v)
        _expect_equal(reconstruct(d), u, "splitting does not reassemble", v)
    return f"{cfg.trials} vector fields"


def chk_worked_values(cfg):
    n, delta = 1, Fraction(1)
    sc = StructureConstants(n, delta)
    expect = {
        "b_{1,1}": (coeff_b(1, 1, sc), Fraction(1, 2)),
        "b_{2,1}": (coeff_b(2, 1, sc), Fraction(1, 3)),
        "b_{2,2}": (coeff_b(2, 2, sc), Fraction(1, 15)),
        "c(1,0)": (coeff_c(1, 0, sc), Fraction(-1, 2)),
        "r(1,1)": (sc.r(1, 1), Fraction(-3)),
        "r(2,0)": (sc.r(2, 0), Fraction(-5)),
    }
    for name, (got, want) in expect.items():
        if got != want:
            raise Fail(f"{name} = {got}, expected {want}")
    xi_t = Symbol(Poly.var(1, 5), delta, "R")
    xi_q = Symbol(Poly.var(1, 3), delta, "R")
    p_xi_t = Symbol(Poly.var(1, 1) * Poly.var(1, 5), delta, "R")
    p1 = projector_p(1, n, delta)
    _expect_zero(p1(xi_t), "p_1(xi_t) != 0", xi_t)
    _expect_equal(p1(xi_q), (xi_q + p_xi_t) * Fraction(5, 4), "p_1(xi_q)", xi_q)
    one = Symbol(Poly.const(1, 1), delta, "R")
    _expect_equal(section_s(0, n, delta)(one), xi_t * -2, "s_0(1)", one)
    return "b, c, r values and p_1, s_0 examples reproduced"


# -- registry ----------------------------------------------------------------

@dataclass(frozen=True)
class _Check:
    suite: str
    statement: str
    fn: Callable
    axes: tuple[str, ...]             # which of n, k, delta it is parameterised by
    k_min: int = 0
    when: Callable | None = None      # cell filter on (n, k, delta)


def _in_I_k(n, k, delta):
    return singular_report(k, n, delta).singular


def _in_some_I_j(n, k, delta):
    return any(singular_report(j, n, delta).singular for j in range(1, k + 1))


CHECKS: dict[str, _Check] = {
    "algebra.alpha_nondegenerate": _Check("algebra", "alpha ^ (d alpha)^n != 0", chk_alpha_nondegenerate, ("n",)),
    "algebra.sp_generators": _Check("algebra", "X(deg<=2) are (n+1)(2n+3) independent contact fields", chk_sp_generators, ("n",)),
    "algebra.sp_closure": _Check("algebra", "brackets of sp generators stay in their span", chk_sp_closure, ("n",)),
    "algebra.sp_in_sl": _Check("algebra", "sl spanning list has rank (2n+2)^2-1 and contains sp", chk_sl_span, ("n",)),
    "contact.hamiltonian_fields": _Check("algebra", "X(f) at weight -1/(n+1) is contact", chk_hamiltonian_contact, ("n",)),
    "contact.lagrange_invariance": _Check("oracle", "L_Z {f,g} = {L_Z f, g} + {f, L_Z g} for contact Z", chk_lagrange_invariance, ("n",)),
    "oracle.X_on_densities": _Check("oracle", "X restricted to S^0_delta equals the density Hamiltonian", chk_X_degree0, ("n",)),
    "oracle.hamiltonian_from_bracket": _Check("oracle", "X(f) = principal symbol of g -> {f,g}", chk_hamiltonian_from_bracket, ("n",)),
    "symbols.representation": _Check("representation", "[L_Z, L_W] = L_[Z,W]; L_Z keeps weight and degree", chk_representation, ("n", "k")),
    "sl2.relations": _Check("sl2", "[i,X] = H, [H,i] = i, [H,X] = -X", chk_sl2, ("n", "k", "delta")),
    "sl2.proof_commutators": _Check("sl2", "[i,D] = -E_xi/2 - xi_t i, [i,xi_t] = -1/2", chk_sl2_lemmas, ("n", "k")),
    "powers.commutators": _Check("powers", "i X^l - X^l i = r(l,k) X^(l-1); X i^l - i^l X = -r(l,k-l+1) i^(l-1)", chk_powers, ("n", "k", "delta")),
    "invariance.i_alpha": _Check("invariance", "[L_Z, i(alpha)] = 0 for contact Z", chk_i_alpha_invariance, ("n", "k")),
    "invariance.X_sp": _Check("invariance", "[L_Z, X] = 0 for Z in sp(2n+2)", chk_X_invariance, ("n", "k", "delta")),
    "invariance.X_not_contact": _Check("invariance", "[L_X(q1^3), X] != 0 for k >= 1, = 0 for k = 0", chk_X_noninvariance, ("n", "k")),
    "projector.laws": _Check("projector", "p_k^2 = p_k, i p_k = 0, p_k = Id on ker i", chk_projector, ("n", "k", "delta"), 1),
    "projector.worked_values": _Check("projector", "b, c, r values and p_1, s_0 at n=1, delta=1", chk_worked_values, ()),
    "projector.raises_on_singular": _Check("projector", "p_k raises a singular-weight error for delta in I_k", chk_projector_raises, ("n", "k", "delta"), 1, _in_I_k),
    "section.raises_on_singular": _Check("section", "s_(k-1) raises a singular-weight error for delta in I_k", chk_section_raises, ("n", "k", "delta"), 1, _in_I_k),
    "decomposition.raises_on_singular": _Check("decomposition", "decompose raises for delta in some I_j, j <= k", chk_decompose_raises, ("n", "k", "delta"), 1, _in_some_I_j),
    "singular.errors": _Check("singular", "constructors raise exactly on I_k", chk_singular_errors, ("n", "k"), 1),
    "section.right_inverse": _Check("section", "i(alpha) s_(k-1) = Id", chk_section, ("n", "k", "delta"), 1),
    "section.surjectivity": _Check("section", "i(alpha): R^k -> R^(k-1) onto, every delta", chk_surjectivity, ("n", "k"), 1),
    "decomposition.round_trip": _Check("decomposition", "u = sum_l s^l(u_l), u_l in ker, s^l = c X^l on ker", chk_decomposition, ("n", "k", "delta")),
    "filtration.graded_maps": _Check("filtration", "i F^(k,l) < F^(k-1,l-1), X F^(k,l) < F^(k+1,l+1), X~ i~ = r Id", chk_filtration, ("n", "k", "delta")),
    "filtration.split": _Check("filtration", "F^(k,l) = F^(k,l-1) + X^(l-1) F^(k-l+1,1) by rank", chk_filter_split, ("n", "k", "delta"), 1),
    "splitting.vector_fields": _Check("splitting", "Vect = contact fields + fields tangent to the distribution", chk_contact_splitting, ("n",)),
}

SUITES = ("algebra", "representation", "oracle", "sl2", "powers", "invariance",
          "projector", "section", "decomposition", "filtration", "splitting", "singular")


def plan(cfg: SuiteConfig) -> list[tuple[str, dict]]:
    """All ``(check id, params)`` cells selected by ``cfg``."""
    selected = set(cfg.selected())
    unknown = selected - set(SUITES)
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(sorted(unknown))}")
    cells = []
    for cid, chk in CHECKS.items():
        if chk.suite not in selected:
            continue
        if not chk.axes:
            cells.append((cid, {}))
            continue
        for n in cfg.n_list:
            ks = range(chk.k_min, cfg.k_max + 1) if "k" in chk.axes else [None]
            for k in ks:
                ds = cfg.deltas if "delta" in chk.axes else [None]
                for d in ds:
                    if chk.when is not None and not chk.when(n, k, d):
                        continue
                    params = {"n": n}
                    if k is not None:
                        params["k"] = k
                    if d is not None:
                        params["delta"] = str(d)
                    cells.append((cid, params))
    return cells


def run_cell(cfg: SuiteConfig, cid: str, params: dict) -> CheckResult:
    chk = CHECKS[cid]
    kwargs = dict(params)
    if "delta" in kwargs:
        kwargs["delta"] = Fraction(kwargs["delta"])
    start = time.perf_counter()
    counter = None
    try:
        detail = chk.fn(cfg, **kwargs)
        status = "pass"
    except Fail as exc:
        status, detail = "fail", str(exc)
        if exc.witness is not None:
            counter = serialize_symbol(exc.witness)
    except Skip as exc:
        status, detail = "skip", str(exc)
    except SingularWeightError as exc:
        status, detail = "fail", f"unexpected singular-weight error: {exc}"
    return CheckResult(cid, chk.suite, chk.statement, params, status, detail or "", counter,
                       round(time.perf_counter() - start, 4))


def _run_cell_packed(args):
    return run_cell(*args)


def run_suite(cfg: SuiteConfig) -> Report:
    cells = plan(cfg)
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            results = list(pool.map(_run_cell_packed, [(cfg, c, p) for c, p in cells]))
    else:
        results = [run_cell(cfg, c, p) for c, p in cells]
    results.sort(key=CheckResult.sort_key)
    return Report(cfg.to_dict(), results)
