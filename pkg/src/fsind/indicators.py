"""Frobenius-Schur indicators of the distinguished non-invertible object rho.

Three independent evaluation routes are provided and cross-checked:

* :func:`nu_from_center` sums twists over a center presentation,
* the per-family closed forms (``nu_ng1_closed``, ``nu_ng2_closed``, ...),
* :func:`nu_agl_bruteforce`, the classical character-theoretic indicator of
  the affine group AGL_1(F_q), computed in exact rational arithmetic.

A :class:`CategorySpec` pins down one monoidal-equivalence class; its full
indicator vector over one period is the invariant used for rigidity
comparisons.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .abelian import (
    FiniteAbelianGroup,
    cyclic,
    group_from_json,
    group_to_json,
)
from .center import (
    CenterPresentation,
    center_hi,
    center_ng1,
    center_ng1_exceptional7,
    center_ng2,
    indicator_period,
)
from .fusion import (
    RHO_LABEL,
    FusionRing,
    grho_label,
    make_hi_ring,
    make_near_group_ring,
    near_group_rho_dim,
)
from .qforms import (
    QuadraticForm,
    form_from_json,
    form_to_json,
    gauss_sum,
    jacobi_symbol,
    phase_to_complex,
    qz,
    scale_form,
)

DEFAULT_TOL = 1e-9

FAMILIES = ("NG1", "NG1X", "NG2", "HI")


# ---------------------------------------------------------------------------
# Category specifications


@dataclass(frozen=True)
class CategorySpec:
    """One monoidal-equivalence class of a singly-generated fusion category.

    Families: NG1 (near group, m = |G| - 1), NG1X (the exceptional |G| = 7
    class with s = -1), NG2 (near group, m = |G|), HI (Haagerup-Izumi).
    ``labels`` carries opaque equivalence-class tags (signs, roots of unity,
    matrix names); they never enter any numeric formula.
    """

    family: str
    group: FiniteAbelianGroup
    p: int | None = None
    zeta1: Fraction | None = None
    q: QuadraticForm | None = None
    gp: FiniteAbelianGroup | None = None
    qp: QuadraticForm | None = None
    h: FiniteAbelianGroup | None = None
    qpp: QuadraticForm | None = None
    labels: tuple[tuple[str, str], ...] = ()
    provenance: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        n = self.group.order
        if self.family == "NG1":
            if self.p is None or self.zeta1 is None:
                raise ValueError("NG1 needs p and zeta1")
            object.__setattr__(self, "zeta1", qz(self.zeta1))
        elif self.family == "NG1X":
            if self.group != cyclic(7):
                raise ValueError("the exceptional class lives over Z/7")
        elif self.family == "NG2":
            if self.q is None or self.gp is None or self.qp is None:
                raise ValueError("NG2 needs q, gp, qp")
            if n % 2 == 0:
                raise ValueError("NG2 requires |G| odd")
            if self.gp.order != n + 4:
                raise ValueError(f"|G'| must be {n + 4}, got {self.gp.order}")
        elif self.family == "HI":
            if self.h is None or self.qpp is None:
                raise ValueError("HI needs h and qpp")
            if n % 2 == 0:
                raise ValueError("HI requires |G| odd")
            if self.h.order != n * n + 4:
                raise ValueError(f"|H| must be {n * n + 4}, got {self.h.order}")

    def base_ring(self) -> FusionRing:
        n = self.group.order
        if self.family == "NG1":
            return make_near_group_ring(self.group, n - 1)
        if self.family == "NG1X":
            return make_near_group_ring(self.group, 6)
        if self.family == "NG2":
            return make_near_group_ring(self.group, n)
        return make_hi_ring(self.group)

    def rho_label(self) -> str:
        if self.family == "HI":
            return grho_label(self.group.identity)
        return RHO_LABEL

    def center(self) -> CenterPresentation:
        return _build_center(self)

    def period(self) -> int:
        return indicator_period(self.center())

    def label_map(self) -> dict:
        return dict(self.labels)

    def describe(self) -> str:
        tags = ",".join(f"{k}={v}" for k, v in self.labels)
        suffix = f";{tags}" if tags else ""
        if self.family == "NG1":
            return f"NG1({self.group},p={self.p},zeta1={self.zeta1}{suffix})"
        if self.family == "NG1X":
            return f"NG1X({self.group}{suffix})"
        if self.family == "NG2":
            return (
                f"NG2({self.group},q={_describe_form(self.q)},"
                f"Gp={self.gp},qp={_describe_form(self.qp)}{suffix})"
            )
        return (
            f"HI({self.group},H={self.h},qpp={_describe_form(self.qpp)}{suffix})"
        )


def _describe_form(q: QuadraticForm) -> str:
    data = form_to_json(q)
    if "monomial" in data:
        coeffs = {e["factor"]: e["coeff"] for e in data["monomial"]}
        parts = [
            f"{coeffs.get(i, 0)}/{n}" for i, n in enumerate(q.group.cyclic_factors)
        ]
        return "[" + ",".join(parts) + "]"
    return "<table>"


@lru_cache(maxsize=None)
def _build_center(spec: CategorySpec) -> CenterPresentation:
    if spec.family == "NG1":
        return center_ng1(spec.group, spec.p, spec.zeta1, spec.provenance)
    if spec.family == "NG1X":
        return center_ng1_exceptional7(spec.provenance)
    if spec.family == "NG2":
        return center_ng2(spec.group, spec.q, spec.gp, spec.qp, spec.provenance)
    return center_hi(spec.group, spec.h, spec.qpp, spec.provenance)


def conjugate_spec(spec: CategorySpec) -> CategorySpec:
    """The complex-conjugate class: all forms and zeta1 negated."""
    if spec.family == "NG1":
        return replace(spec, zeta1=(-spec.zeta1) % 1, provenance=())
    if spec.family == "NG1X":
        return spec
    if spec.family == "NG2":
        return replace(spec, q=spec.q.negated(), qp=spec.qp.negated(), provenance=())
    return replace(spec, qpp=spec.qpp.negated(), provenance=())


# ---------------------------------------------------------------------------
# Evaluation routes


def nu_from_center(presentation: CenterPresentation, target: str, k: int) -> complex:
    """The center-summation formula; twist powers are exact phases."""
    if target not in presentation.base_ring.labels:
        raise ValueError(f"unknown base simple {target!r}")
    total = 0j
    for obj in presentation.objects:
        mult = obj.mult.get(target, 0)
        if mult:
            total += phase_to_complex((k * obj.twist) % 1) * obj.qdim * mult
    return total / presentation.global_qdim


def theta_count(group: FiniteAbelianGroup, k: int) -> int:
    """theta_k^G(e), the number of solutions of k*g = e."""
    return group.power_count(k, group.identity)


def nu_ng1_closed(group: FiniteAbelianGroup, p: int, zeta1: Fraction, k: int) -> complex:
    """(theta_k(e) - 1) + conj(zeta1)^k [p | k] for the m = |G| - 1 family."""
    value = complex(theta_count(group, k) - 1)
    if k % p == 0:
        value += phase_to_complex((-k * qz(zeta1)) % 1)
    return value


def nu_ng1x_closed(k: int) -> complex:
    """The |G| = 7, s = -1 closed form."""
    value = theta_count(cyclic(7), k) - 1
    if k % 2 == 0:
        value += (-1) ** (k // 2)
    return complex(value)


def nu_ng2_closed(
    group: FiniteAbelianGroup,
    q: QuadraticForm,
    gp: FiniteAbelianGroup,
    qp: QuadraticForm,
    k: int,
) -> complex:
    """theta_k(e)/2 + Theta(G, 2kq) Theta(G', 2kq')/2 for the m = |G| family."""
    if gp.order != group.order + 4:
        raise ValueError("|G'| must equal |G| + 4")
    theta = theta_count(group, k)
    product = gauss_sum(scale_form(2 * k, q)) * gauss_sum(scale_form(2 * k, qp))
    return theta / 2 + product / 2


def nu_ng2_omega(
    group: FiniteAbelianGroup, q: QuadraticForm, omegas, k: int
) -> complex:
    """Indicator from the raw E-object twists (exact phases) of the center."""
    n = group.order
    expected = n * (n + 3) // 2
    omegas = list(omegas)
    if len(omegas) != expected:
        raise ValueError(f"expected {expected} twists, got {len(omegas)}")
    d = near_group_rho_dim(n, n)
    qdim = n * (2 + d)
    omega_sum = sum(phase_to_complex((k * qz(w)) % 1) for w in omegas)
    theta_term = math.sqrt(n) / 2 * gauss_sum(scale_form(2 * k, q))
    return theta_count(group, k) / 2 + d / qdim * (theta_term + omega_sum)


def nu_ng2_jacobi(group: FiniteAbelianGroup, gp: FiniteAbelianGroup, k: int) -> float:
    """(1 - (k / |G||G'|)) / 2, valid for gcd(k, |G||G'|) = 1."""
    modulus = group.order * gp.order
    if math.gcd(k, modulus) != 1:
        raise ValueError(f"k = {k} is not coprime to {modulus}")
    return (1 - jacobi_symbol(k, modulus)) / 2


def nu_hi_closed(
    group: FiniteAbelianGroup,
    h_group: FiniteAbelianGroup,
    qpp: QuadraticForm,
    k: int,
) -> complex:
    """theta_k(e)/2 + Theta(H, k m q'')/2 with |H| = 2m + 1."""
    if h_group.order != group.order**2 + 4:
        raise ValueError("|H| must equal |G|^2 + 4")
    m = (h_group.order - 1) // 2
    theta = theta_count(group, k)
    return theta / 2 + gauss_sum(scale_form(k * m, qpp)) / 2


def closed_form_nu(spec: CategorySpec, k: int) -> complex:
    if spec.family == "NG1":
        return nu_ng1_closed(spec.group, spec.p, spec.zeta1, k)
    if spec.family == "NG1X":
        return nu_ng1x_closed(k)
    if spec.family == "NG2":
        return nu_ng2_closed(spec.group, spec.q, spec.gp, spec.qp, k)
    return nu_hi_closed(spec.group, spec.h, spec.qpp, k)


# ---------------------------------------------------------------------------
# Indicator vectors and rigidity


@dataclass(frozen=True)
class IndicatorVector:
    spec: CategorySpec
    period: int
    values: tuple[complex, ...]  # values[k - 1] = nu_k(rho), k = 1..period

    def value(self, k: int) -> complex:
        return self.values[(k - 1) % self.period]


def indicator_vector(spec: CategorySpec, path: str = "center") -> IndicatorVector:
    presentation = spec.center()
    period = indicator_period(presentation)
    target = spec.rho_label()
    if path == "center":
        values = tuple(
            nu_from_center(presentation, target, k) for k in range(1, period + 1)
        )
    elif path == "closed":
        values = tuple(closed_form_nu(spec, k) for k in range(1, period + 1))
    else:
        raise ValueError(f"unknown path {path!r}")
    return IndicatorVector(spec, period, values)


@dataclass(frozen=True)
class RigidityReport:
    period: int
    classes: tuple[tuple[int, ...], ...]  # partition of spec indices
    separators: tuple[tuple[int, int, int], ...]  # (i, j, smallest separating k)
    descriptions: tuple[str, ...]

    @property
    def distinguished(self) -> bool:
        return all(len(c) == 1 for c in self.classes)


def rigidity_report(
    specs, ring: FusionRing, tol: float = DEFAULT_TOL
) -> RigidityReport:
    """Partition specs by pointwise equality of full-period indicator vectors.

    All specs must share the given Grothendieck ring; the comparison period is
    the lcm of the individual periods.

    The known inseparable pairs (the two |G| = 13 near-group pairs and the
    Haagerup-Izumi pairs) also share their centers' modular data; it is an
    open question whether Morita-equivalent categories with the same
    Grothendieck ring can ever be separated by indicators.
    """
    specs = list(specs)
    for spec in specs:
        if spec.base_ring() != ring:
            raise ValueError(f"{spec.describe()} does not have the given ring")
    period = math.lcm(*(spec.period() for spec in specs)) if specs else 1
    vectors = []
    for spec in specs:
        presentation = spec.center()
        target = spec.rho_label()
        vectors.append(
            [nu_from_center(presentation, target, k) for k in range(1, period + 1)]
        )

    def first_separator(i: int, j: int) -> int | None:
        for k in range(1, period + 1):
            if abs(vectors[i][k - 1] - vectors[j][k - 1]) > tol:
                return k
        return None

    classes: list[list[int]] = []
    for i in range(len(specs)):
        for cls in classes:
            if first_separator(i, cls[0]) is None:
                cls.append(i)
                break
        else:
            classes.append([i])
    separators = []
    for a, b in itertools.combinations(range(len(specs)), 2):
        k = first_separator(a, b)
        if k is not None:
            separators.append((a, b, k))
    return RigidityReport(
        period,
        tuple(tuple(c) for c in classes),
        tuple(separators),
        tuple(spec.describe() for spec in specs),
    )


def ng1_equivalence_classes(order: int) -> list[CategorySpec]:
    """The known monoidal-equivalence classes of NG(G, |G| - 1) for small G.

    Only |G| in {1, 2, 3, 7} admits classes beyond the affine-group one.  The
    s = -1 classes (|G| = 1, 3, 7) have zeta1^2 = s, realized as phase 1/4;
    for |G| = 7 that class carries the exceptional center.  The two extra
    |G| = 2 classes are tagged by a primitive third root of unity mu with
    nu_3(rho) = mu, forcing conj(zeta1)^3 = mu (phase -1/9 for mu = zeta_3).
    """
    if order not in (1, 2, 3, 7):
        raise ValueError("extra equivalence classes exist only for |G| in {1,2,3,7}")
    group = cyclic(order)
    p = {1: 2, 2: 3, 3: 2, 7: 2}[order]
    base = CategorySpec(
        "NG1", group, p=p, zeta1=Fraction(0), labels=(("class", "AGL"),)
    )
    if order == 2:
        return [
            base,
            CategorySpec("NG1", group, p=3, zeta1=Fraction(8, 9), labels=(("mu", "zeta3"),)),
            CategorySpec("NG1", group, p=3, zeta1=Fraction(1, 9), labels=(("mu", "zeta3bar"),)),
        ]
    base = replace(base, labels=(("s", "+1"),))
    if order == 7:
        minus = CategorySpec("NG1X", group, labels=(("s", "-1"),))
    else:
        minus = CategorySpec("NG1", group, p=p, zeta1=Fraction(1, 4), labels=(("s", "-1"),))
    return [base, minus]


# ---------------------------------------------------------------------------
# Classical brute force over AGL_1(F_q)


@dataclass(frozen=True)
class AGLGroup:
    """AGL_1(F_q) = F_q x| F_q^*, elements (a, b) with (a,b)(c,d) = (a+bc, bd)."""

    q: int
    p: int
    ell: int
    modulus: tuple[int, ...]  # lower coefficients of the monic defining polynomial
    field_elements: tuple[tuple[int, ...], ...]
    elements: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    @property
    def order(self) -> int:
        return self.q * (self.q - 1)

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.ell

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.ell - 1)

    def field_add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def field_mul(self, a, b):
        prod = [0] * (2 * self.ell - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        # reduce modulo the defining polynomial
        for i in range(len(prod) - 1, self.ell - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                for j in range(self.ell):
                    prod[i - self.ell + j] = (prod[i - self.ell + j] - c * self.modulus[j]) % self.p
        return tuple(prod[: self.ell])

    def mul(self, x, y):
        (a, b), (c, d) = x, y
        return (self.field_add(a, self.field_mul(b, c)), self.field_mul(b, d))

    def identity_element(self):
        return (self.zero, self.one)

    def power(self, x, k: int):
        result = self.identity_element()
        base = x
        while k > 0:
            if k & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            k >>= 1
        return result

    def element_order(self, x) -> int:
        e = self.identity_element()
        y = x
        order = 1
        while y != e:
            y = self.mul(y, x)
            order += 1
        return order


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % k for k in range(2, math.isqrt(n) + 1))


def factor_prime_power(q: int) -> tuple[int, int]:
    """Return (p, l) with q = p^l, or raise if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    for p in range(2, q + 1):
        if q % p == 0:
            if not _is_prime(p):
                break
            ell = 0
            value = q
            while value % p == 0:
                value //= p
                ell += 1
            if value != 1:
                raise ValueError(f"{q} is not a prime power")
            return p, ell
    raise ValueError(f"{q} is not a prime power")


def _poly_mod(num: list[int], den: list[int], p: int) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i] * inv_lead % p
        if c:
            for j in range(dn + 1):
                num[i - dn + j] = (num[i - dn + j] - c * den[j]) % p
    while len(num) > 1 and num[-1] == 0:
        num.pop()
    return num


def _is_irreducible(poly: list[int], p: int) -> bool:
    degree = len(poly) - 1
    for d in range(1, degree // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            divisor = list(lower) + [1]
            remainder = _poly_mod(poly, divisor, p)
            if remainder == [0]:
                return False
    return True


@lru_cache(maxsize=None)
def build_agl(q: int) -> AGLGroup:
    """Explicit AGL_1(F_q) for a prime power q <= 64."""
    if q > 64:
        raise ValueError("q is capped at 64")
    p, ell = factor_prime_power(q)
    modulus: tuple[int, ...]
    if ell == 1:
        modulus = (0, 1)
    else:
        for lower in itertools.product(range(p), repeat=ell):
            candidate = list(lower) + [1]
            if _is_irreducible(candidate, p):
                modulus = tuple(candidate[:-1] + [1])
                break
        else:  # pragma: no cover - every F_p admits irreducibles of any degree
            raise AssertionError("no irreducible polynomial found")
    field_elements = tuple(itertools.product(range(p), repeat=ell))
    zero = (0,) * ell
    elements = tuple(
        (a, b) for a in field_elements for b in field_elements if b != zero
    )
    return AGLGroup(q, p, ell, tuple(modulus[:ell]), field_elements, elements)


def agl_rho_character(agl: AGLGroup, x) -> int:
    """The degree q-1 irreducible character, integer valued."""
    a, b = x
    if b != agl.one:
        return 0
    return agl.q - 1 if a == agl.zero else -1


def agl_rho_via_eta(agl: AGLGroup, x, u) -> complex:
    """Same character from its additive-character formula, for any eta != 1.

    eta_u(c) = e^{2 pi i (u*c)_0 / p}; the result must not depend on u.
    """
    a, b = x
    if b != agl.one:
        return 0j
    total = 0j
    for y in agl.field_elements:
        if y == agl.zero:
            continue
        # eta(y^{-1} a) summed over y is eta(y a) summed over y
        c = agl.field_mul(u, agl.field_mul(y, a))
        total += phase_to_complex(Fraction(c[0], agl.p))
    return total


def nu_agl_bruteforce(q: int, k: int) -> Fraction:
    """Classical indicator sum (1/|Gamma|) sum_gamma rho(gamma^k), exactly."""
    agl = build_agl(q)
    total = sum(agl_rho_character(agl, agl.power(x, k)) for x in agl.elements)
    return Fraction(total, agl.order)


def nu_agl_closed_exact(q: int, k: int) -> int:
    """gcd(k, q-1) - 1 + [p | k], the closed form in exact arithmetic."""
    p, _ = factor_prime_power(q)
    return math.gcd(k, q - 1) - 1 + (1 if k % p == 0 else 0)


# ---------------------------------------------------------------------------
# JSON serialization of specs


def spec_to_json(spec: CategorySpec) -> dict:
    data: dict = {"family": spec.family, "group": group_to_json(spec.group)}
    if spec.family == "NG1":
        data["p"] = spec.p
        data["zeta1"] = f"{spec.zeta1.numerator}/{spec.zeta1.denominator}"
    elif spec.family == "NG2":
        data["q"] = form_to_json(spec.q)
        data["gp"] = group_to_json(spec.gp)
        data["qp"] = form_to_json(spec.qp)
    elif spec.family == "HI":
        data["h"] = group_to_json(spec.h)
        data["qpp"] = form_to_json(spec.qpp)
    if spec.labels:
        data["labels"] = dict(spec.labels)
    return data


def spec_from_json(data: dict) -> CategorySpec:
    family = data["family"]
    if family not in FAMILIES:
        raise ValueError(f"unknown family {family!r}")
    group = group_from_json(data["group"]) if "group" in data else cyclic(7)
    labels = tuple(sorted((str(k), str(v)) for k, v in data.get("labels", {}).items()))
    if family == "NG1":
        return CategorySpec(
            "NG1", group, p=int(data["p"]), zeta1=Fraction(data["zeta1"]), labels=labels
        )
    if family == "NG1X":
        return CategorySpec("NG1X", group, labels=labels)
    if family == "NG2":
        gp = group_from_json(data["gp"])
        return CategorySpec(
            "NG2",
            group,
            q=form_from_json(data["q"], group),
            gp=gp,
            qp=form_from_json(data["qp"], gp),
            labels=labels,
        )
    h = group_from_json(data["h"])
    return CategorySpec(
        "HI", group, h=h, qpp=form_from_json(data["qpp"], h), labels=labels
    )
