"""Built-in catalog data: one entry per displayed cyclic identity.

Entries are transcribed as printed, including suspected misprints; the
verifier decides which entries hold.  An entry that fails as printed keeps
its literal form with an erratum status and gains a corrected sibling (id
suffix "c") that must verify.  Ids are family prefix plus the stable
equation label, e.g. "MI2-53"; offsets are in units of the base shift
delta = T/p (so a printed argument 2r*pi/p with period 2*pi is offset r).
"""

from __future__ import annotations

from .catalog import (
    Chain,
    Constraints,
    CyclicSum,
    IdentitySpec,
    MeanValueIntegral,
    PConstant,
    RatioFactor,
    Status,
    TransformRelation,
    TransformSpec,
    WeightedSum,
    ZeroTerm,
)
from .coeffexpr import (
    Abs,
    Const,
    IndexedProd,
    IndexedSum,
    IntPoly,
    SignPow,
    ThetaAt,
)
from fractions import Fraction


def th(i, off=0, d=0):
    return ThetaAt(i, IntPoly.parse(off), d)


def F(i, off=0, pw=1, dpw=None):
    return RatioFactor("ratio", i, pw, IntPoly.parse(off), 4, dpw)


def LD():
    return RatioFactor("logderiv", 4, 1, IntPoly.const(0))


def S(*factors, alt=False):
    return CyclicSum(tuple(factors), None, alt, False)


def SP(*factors):
    return CyclicSum(tuple(factors), None, False, True)


def CH(num, length, step, alt=False):
    return CyclicSum((), Chain(num, IntPoly.parse(length), IntPoly.parse(step)), alt, False)


def mirror(factors):
    return tuple(
        RatioFactor(f.kind, f.num, f.power, f.offset.scale(-1), f.den, f.den_power, f.prefactor)
        for f in factors
    )


def brkt(body, arm, alt=False):
    """Bracketed left side: body(z_j) * [arm(z_{j+..}) + arm(z_{j-..})]."""
    body = tuple(body)
    arm = tuple(arm)
    return (
        CyclicSum(body + arm, None, alt, False),
        CyclicSum(body + mirror(arm), None, alt, False),
    )


def W(coeff, s):
    return WeightedSum(coeff, s)


def PC(coeff):
    return PConstant(coeff)


Z = ZeroTerm()

# Right-hand-side cyclic sums that recur across the catalog.
R34 = S(F(3))
R34a = S(F(3), alt=True)
R12 = S(F(1), F(2))
R12a = S(F(1), F(2), alt=True)
R33 = S(F(3, 0, 2))
R33a = S(F(3, 0, 2), alt=True)
R333 = S(F(3, 0, 3))
R123 = S(F(1), F(2), F(3))
R123a = S(F(1), F(2), F(3), alt=True)
R1233 = S(F(1), F(2), F(3, 0, 2))
R14 = S(F(1))
R24 = S(F(2))
R23 = S(F(2), F(3))
R13 = S(F(1), F(3))
R111 = S(F(1, 0, 3))
R222 = S(F(2, 0, 3))
R1123 = S(F(1, 0, 2), F(2), F(3))
LDa = S(LD(), alt=True)

_PREFIX = {
    "MI-I": "MI1",
    "MI-I-alt": "MI1",
    "MI-II": "MI2",
    "MI-II-alt": "MI2",
    "MI-III": "MI3",
    "MI-IV": "MI4",
    "Transform": "TR",
}

_ENTRIES: list[IdentitySpec] = []


def ident(
    eq,
    family,
    lhs,
    rhs,
    *,
    syms=(),
    ordered=True,
    pmin=None,
    ppar=None,
    lpar=None,
    lmin=0,
    lmax=None,
    status=None,
    id_suffix="",
    note=None,
):
    period = "2pi" if family in ("MI-III", "MI-IV") else "pi"
    if family in ("MI-I-alt", "MI-II-alt"):
        p_parity = "even"
        default_pmin = 2
    elif family in ("MI-III", "MI-IV"):
        p_parity = "odd"
        default_pmin = 3
    else:
        p_parity = ppar or "any"
        default_pmin = 2
    label = eq if isinstance(eq, str) else str(eq)
    num = "".join(ch for ch in label if ch.isdigit())
    tag = num.zfill(2) + label[len(num):]
    if status is None:
        status = Status("unchecked", note=note)
    spec = IdentitySpec(
        id=f"{_PREFIX[family]}-{tag}{id_suffix}",
        paper_eq=label,
        family=family,
        period=period,
        lhs=tuple(lhs),
        rhs=tuple(rhs),
        constraints=Constraints(
            p_parity=p_parity,
            p_min=default_pmin if pmin is None else pmin,
            symbols=tuple(syms),
            ordered=ordered,
            l_parity=lpar,
            l_min=lmin,
            l_max=lmax,
        ),
        status=status,
    )
    _ENTRIES.append(spec)
    return spec


def ident_odd_p(*args, **kwargs):
    return ident(*args, **kwargs)


VERIFIED = Status("verified")


def _err(corrected_id, note):
    return Status("erratum", corrected=corrected_id, note=note)


# ---------------------------------------------------------------------------
# Family MI-I (period pi)
# ---------------------------------------------------------------------------

ident(
    5,
    "MI-I",
    [S(F(3, 0), F(3, 1), F(3, 2))],
    [W(th(2, 1) / th(1, 1) * (th(2, 1) / th(1, 1) - 2 * th(2, 2) / th(1, 2)), R34)],
    pmin=3,
    status=VERIFIED,
)

ident(
    6,
    "MI-I",
    [*brkt([F(1), F(2), F(3)], [F(3, "r")])],
    [W(th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2), R12)],
    syms=("r",),
    status=VERIFIED,
)

ident(7, "MI-I", [*brkt([F(1)], [F(2, "r")])], [Z], syms=("r",), status=VERIFIED)

_eq8_coeff = IndexedProd(
    "k", 1, "(l-1)/2", (th(2, "r*k") / th(1, "r*k")) ** 2
) + 2 * SignPow("(l-1)/2") * (th(4) / th(3)) ** "(l-1)*(l-3)/2" * IndexedSum(
    "k",
    1,
    "(l-1)/2",
    IndexedProd("n", 1, "l", th(2, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
)
ident(
    8,
    "MI-I",
    [CH(3, "l", "r")],
    [W(_eq8_coeff, R34)],
    syms=("r",),
    lpar="odd",
    lmin=3,
    lmax="p",
    pmin=3,
    status=VERIFIED,
)

ident(
    9,
    "MI-I",
    [SP(F(3))],
    [W(IndexedProd("n", 1, "(p-1)/2", (th(2, "n") / th(1, "n")) ** 2), R34)],
    pmin=3,
    ppar="odd",
    status=VERIFIED,
)

ident(
    10,
    "MI-I",
    [*brkt([F(3, 0, 2)], [F(3, "r")])],
    [
        W(
            2
            * (
                th(2) ** 2 / (th(3) * th(4)) * th(3, "r") * th(4, "r") / th(1, "r") ** 2
                - th(2, "r") ** 2 / th(1, "r") ** 2
            ),
            R34,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    11,
    "MI-I",
    [*brkt([F(2)], [F(2, "r"), F(3, "r")])],
    [
        W(
            -2
            * (th(3) / th(2))
            * (th(2, "r") / th(1, "r"))
            * (th(3, "r") / th(1, "r") - th(3) / th(4) * th(4, "r") / th(1, "r")),
            R34,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    12,
    "MI-I",
    [*brkt([F(1)], [F(1, "r"), F(3, "r")])],
    [
        W(
            -2
            * (th(4) ** 2 / (th(2) * th(3)))
            * (th(2, "r") / th(1, "r"))
            * (th(3, "r") / th(1, "r") - th(3) / th(4) * th(4, "r") / th(1, "r")),
            R34,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    13,
    "MI-I",
    [*brkt([F(3)], [F(3, "r"), F(3, "s")])],
    [
        W(
            -2
            * (
                th(2, "r") * th(2, "s") / (th(1, "r") * th(1, "s"))
                + th(2, "r-s")
                / th(1, "r-s")
                * (th(2, "r") / th(1, "r") - th(2, "s") / th(1, "s"))
            ),
            R34,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    14,
    "MI-I",
    [*brkt([F(3)], [F(2, "r"), F(2, "s")])],
    [
        W(
            -2
            * (
                th(3, "r") * th(3, "s") / (th(1, "r") * th(1, "s"))
                + th(3, "r-s")
                * th(3)
                / (th(1, "r-s") * th(2))
                * (th(2, "r") / th(1, "r") - th(2, "s") / th(1, "s"))
            ),
            R34,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    15,
    "MI-I",
    [*brkt([F(3)], [F(1, "r"), F(1, "s")])],
    [
        W(
            2
            * (
                th(4, "r") * th(4, "s") / (th(1, "r") * th(1, "s"))
                + th(4, "r-s")
                * th(4)
                / (th(1, "r-s") * th(2))
                * (th(2, "r") / th(1, "r") - th(2, "s") / th(1, "s"))
            ),
            R34,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    16,
    "MI-I",
    [*brkt([F(2)], [F(3, "r"), F(2, "s")])],
    [
        W(
            -2
            * (
                th(3, "r")
                * th(3)
                / (th(1, "r") * th(2))
                * (th(2, "s") / th(1, "s") + th(2, "r-s") / th(1, "r-s"))
                - th(3, "r-s") * th(3, "s") / (th(1, "r-s") * th(1, "s"))
            ),
            R34,
        )
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    17,
    "MI-I",
    [*brkt([F(1)], [F(3, "r"), F(1, "s")])],
    [
        W(
            2
            * (
                th(4, "r")
                * th(4)
                / (th(1, "r") * th(2))
                * (th(2, "s") / th(1, "s") + th(2, "r-s") / th(1, "r-s"))
                - th(4, "r-s") * th(4, "s") / (th(1, "r-s") * th(1, "s"))
            ),
            R34,
        )
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

_eq18_coeff = 2 * (
    th(3)
    * th(4)
    / th(2) ** 2
    * (
        th(2, "r") * th(2, "t") * th(3, "s") * th(4, "r")
        / (th(1, "r") ** 2 * th(1, "t") * th(1, "s"))
        + th(2, "s") * th(2, "t") * th(3, "r") * th(4, "s")
        / (th(1, "s") ** 2 * th(1, "t") * th(1, "r"))
    )
    + th(4)
    / th(3)
    * th(3, "r")
    * th(3, "s")
    * th(3, "t")
    * th(4, "t")
    / (th(1, "t") ** 2 * th(1, "r") * th(1, "s"))
    - th(3, "r-t")
    * th(3, "s-t")
    * th(4, "s") ** 2
    / (th(1, "s") ** 2 * th(1, "r-t") * th(1, "s-t"))
    - th(3)
    / th(2)
    * (
        th(2, "r-t")
        * th(3, "r-s")
        * th(4, "r") ** 2
        / (th(1, "r") ** 2 * th(1, "r-t") * th(1, "r-s"))
        + th(2, "t-s")
        * th(3, "r-s")
        * th(4, "s") ** 2
        / (th(1, "s") ** 2 * th(1, "t-s") * th(1, "r-s"))
    )
)
ident(
    18,
    "MI-I",
    [*brkt([F(1, 0, 2)], [F(2, "r"), F(2, "s"), F(3, "t")])],
    [W(_eq18_coeff, R34)],
    syms=("r", "s", "t"),
    status=VERIFIED,
)

ident(
    19,
    "MI-I",
    [*brkt([F(3, 0, 2)], [F(2, "r"), F(1, "r")])],
    [
        W(
            -2
            * (th(2, "r") ** 2 / th(1, "r") ** 2)
            * (1 + th(2) ** 2 * th(3, "r") * th(4, "r") / (th(2, "r") ** 2 * th(3) * th(4))),
            R12,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    20,
    "MI-I",
    [*brkt([F(1), F(3)], [F(2, "r"), F(3, "r")])],
    [
        W(
            -2
            * (th(2) * th(2, "r") / th(1, "r") ** 2)
            * (th(4, "r") / th(4) + th(3, "r") / th(3)),
            R12,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    "20a",
    "MI-I",
    [*brkt([F(2)], [F(1, "r", 3)])],
    [W(-2 * th(4) * th(2, "r") * th(4, "r") / (th(2) * th(1, "r") ** 2), R12)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    "20b",
    "MI-I",
    [*brkt([F(1)], [F(2, "r", 3)])],
    [W(2 * th(3) * th(2, "r") * th(3, "r") / (th(2) * th(1, "r") ** 2), R12)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    21,
    "MI-I",
    [*brkt([F(1), F(2)], [F(3, "r"), F(3, "s")])],
    [W(-2 * th(2, "r") * th(2, "s") / (th(1, "r") * th(1, "s")), R12)],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    22,
    "MI-I",
    [*brkt([F(1), F(2)], [F(2, "r"), F(2, "s")])],
    [W(-2 * th(3, "r") * th(3, "s") / (th(1, "r") * th(1, "s")), R12)],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    23,
    "MI-I",
    [*brkt([F(1), F(2)], [F(1, "r"), F(1, "s")])],
    [W(2 * th(4, "r") * th(4, "s") / (th(1, "r") * th(1, "s")), R12)],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    24,
    "MI-I",
    [*brkt([F(2), F(3)], [F(1, "r"), F(3, "s")])],
    [W(-2 * th(2) * th(4, "r") * th(2, "s") / (th(4) * th(1, "r") * th(1, "s")), R12)],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    "24a",
    "MI-I",
    [*brkt([F(1), F(3)], [F(2, "r"), F(3, "s")])],
    [W(-2 * th(2) * th(3, "r") * th(2, "s") / (th(3) * th(1, "r") * th(1, "s")), R12)],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    25,
    "MI-I",
    [*brkt([F(1), F(2), F(3)], [F(3, "r", 3)])],
    [
        W(
            Const(Fraction(-2, 3))
            * th(2) ** 2
            * th(2, "r") ** 2
            / th(1, "r") ** 4
            * (
                th(4, "r") ** 2 / th(4) ** 2
                + th(2) ** 2
                * th(3, "r") ** 2
                * th(4, "r") ** 2
                / (th(2, "r") ** 2 * th(3) ** 2 * th(4) ** 2)
                + th(3, "r") ** 2 / th(3) ** 2
                + 3 * th(3, "r") * th(4, "r") / (th(3) * th(4))
            ),
            R12,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    26,
    "MI-I",
    [*brkt([F(3, 0, 4)], [F(3, "r")])],
    [
        W(2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2), R333),
        W(
            2
            * th(2, "r") ** 4
            / th(1, "r") ** 4
            * (1 - th(2) ** 2 * th(3, "r") * th(4, "r") / (th(2, "r") ** 2 * th(3) * th(4))),
            R34,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    27,
    "MI-I",
    [*brkt([F(3, 0, 3)], [F(3, "r", 2)])],
    [
        W(-2 * th(2, "r") ** 2 / th(1, "r") ** 2, R333),
        W(
            2
            * th(2) ** 2
            * th(2, "r") ** 2
            / th(1, "r") ** 4
            * (
                th(4, "r") ** 2 / th(4) ** 2
                + th(3, "r") ** 2 / th(3) ** 2
                + th(2) ** 2
                * th(3, "r") ** 2
                * th(4, "r") ** 2
                / (th(2, "r") ** 2 * th(3) ** 2 * th(4) ** 2)
                - 3 * th(3, "r") * th(4, "r") / (th(3) * th(4))
            ),
            R34,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    28,
    "MI-I",
    [*brkt([F(3, 0, 4)], [F(1, "r"), F(2, "r")])],
    [
        W(
            -2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2),
            R1233,
        ),
        W(
            2
            * th(2, "r") ** 4
            / th(1, "r") ** 4
            * (1 + 3 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(2, "r") ** 2 * th(3) * th(4))),
            R12,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    29,
    "MI-I",
    [*brkt([F(3, 0, 4)], [F(1, "r"), F(2, "s")])],
    [
        W(
            -2
            * th(2) ** 2
            * th(4, "r")
            * th(3, "s")
            / (th(3) * th(4) * th(1, "r") * th(1, "s")),
            R1233,
        ),
        W(
            2
            * th(2) ** 2
            / (th(3) * th(4))
            * (
                th(2, "r")
                * th(2, "s")
                * th(3, "r")
                * th(4, "s")
                / (th(1, "r") ** 2 * th(1, "s") ** 2)
                + th(3, "s")
                * th(4, "r")
                / (th(1, "r") * th(1, "s"))
                * (th(2, "r") ** 2 / th(1, "r") ** 2 + th(2, "s") ** 2 / th(1, "s") ** 2)
            ),
            R12,
        ),
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

# ---------------------------------------------------------------------------
# Family MI-I-alt (period pi, alternating signs, even p)
# ---------------------------------------------------------------------------

ident(32, "MI-I-alt", [*brkt([F(1)], [F(2, 1)], alt=True)], [Z], status=VERIFIED)

ident(
    34,
    "MI-I-alt",
    [S(F(3, 0), F(3, "r"), F(3, "2*r"), alt=True)],
    [
        W(
            -(
                th(2, "r") ** 2 / th(1, "r") ** 2
                + 2 * th(2, "r") * th(2, "2*r") / (th(1, "r") * th(1, "2*r"))
            ),
            R34a,
        )
    ],
    syms=("r",),
    pmin=4,
    status=VERIFIED,
)

ident(
    35,
    "MI-I-alt",
    [S(F(3, 0), F(3, "r"), F(3, "s"), alt=True)],
    [
        W(
            -(
                th(2, "r") * th(2, "s") / (th(1, "r") * th(1, "s"))
                - th(2, "r") * th(2, "r-s") / (th(1, "r") * th(1, "r-s"))
                - th(2, "s") * th(2, "s-r") / (th(1, "s") * th(1, "s-r"))
            ),
            R34a,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    31,
    "MI-I-alt",
    [*brkt([F(3, 0, 2)], [F(3, "r")], alt=True)],
    [
        W(
            2
            * th(2) ** 2
            / th(1, "r") ** 2
            * (th(3, "r") * th(4, "r") / (th(3) * th(4)) + th(2, "r") ** 2 / th(2) ** 2),
            R34a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    "36a",
    "MI-I-alt",
    [*brkt([F(2)], [F(2, "r"), F(3, "r")], alt=True)],
    [
        W(
            -2
            * th(3) ** 2
            * th(2, "r")
            / (th(2) * th(1, "r") ** 2)
            * (th(3, "r") / th(3) + th(4, "r") / th(4)),
            R34a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    37,
    "MI-I-alt",
    [*brkt([F(1)], [F(1, "r"), F(3, "r")], alt=True)],
    [
        W(
            2
            * th(3) ** 2
            * th(2, "r")
            / (th(2) * th(1, "r") ** 2)
            * (th(3, "r") / th(3) + th(4, "r") / th(4)),
            R34a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    38,
    "MI-I-alt",
    [*brkt([F(3, 0, 2)], [F(1, "r"), F(2, "r")], alt=True)],
    [
        W(
            2
            * th(2) ** 2
            / th(1, "r") ** 2
            * (th(2, "r") ** 2 / th(2) ** 2 - th(3, "r") * th(4, "r") / (th(3) * th(4))),
            R12a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    "38a",
    "MI-I-alt",
    [*brkt([F(1), F(3)], [F(2, "r"), F(3, "r")], alt=True)],
    [
        W(
            -2
            * th(2)
            * th(2, "r")
            / th(1, "r") ** 2
            * (th(3, "r") / th(3) + th(4, "r") / th(4)),
            R12a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    33,
    "MI-I-alt",
    [*brkt([F(1), F(2), F(3)], [F(3, 1)], alt=True)],
    [W(2 * th(2) ** 2 * th(3, 1) * th(4, 1) / (th(3) * th(4) * th(1, 1) ** 2), R12a)],
    status=VERIFIED,
)

# ---------------------------------------------------------------------------
# Family MI-II (period pi)
# ---------------------------------------------------------------------------

ident(
    39,
    "MI-II",
    [S(F(3, 0), F(3, "r"))],
    [
        PC(
            th(3)
            * th(3, "r")
            / (th(4) * th(4, "r"))
            * (
                1
                - th(4, "r", 1)
                * Abs(th(2, "r"))
                / (th(3) ** 2 * th(3, "r") * Abs(th(1, "r")))
            )
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    40,
    "MI-II",
    [S(F(1, 0), F(1, "r"))],
    [PC(th(4, "r", 1) * th(2, "r") / (th(2) * th(3) * Abs(th(1, "r") * th(2, "r"))))],
    syms=("r",),
    status=VERIFIED,
)

ident(
    41,
    "MI-II",
    [S(F(2, 0), F(2, "r"))],
    [
        PC(
            th(2)
            * th(2, "r")
            / (th(4) * th(4, "r"))
            * (1 - th(3, "r") * th(4, "r", 1) / (th(2) ** 2 * Abs(th(1, "r") * th(2, "r"))))
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

# The chain sum is z-independent (equal to its mean value) only for l <= p:
# measured z-spread ~1e-15 for l <= p versus ~1e-3 for l > p.
ident(
    42,
    "MI-II",
    [CH(3, "l", 1)],
    [MeanValueIntegral(CyclicSum(chain=Chain(3, IntPoly.parse("l"), IntPoly.const(1))))],
    lpar="even",
    lmin=2,
    lmax="p",
    status=VERIFIED,
)

ident(43, "MI-II", [*brkt([F(2), F(3)], [F(1, "r")])], [Z], syms=("r",), status=VERIFIED)
ident(44, "MI-II", [*brkt([F(1), F(3)], [F(2, "r")])], [Z], syms=("r",), status=VERIFIED)
ident(46, "MI-II", [*brkt([F(1), F(2)], [F(3, "r")])], [Z], syms=("r",), status=VERIFIED)
ident(
    45,
    "MI-II",
    [*brkt([F(2)], [F(1, "s"), F(3, "r")])],
    [Z],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    47,
    "MI-II",
    [S(F(3, 0, 2), F(3, "r", 2))],
    [
        W(-2 * th(2, "r") ** 2 / th(1, "r") ** 2, R33),
        PC(
            th(3) ** 2 * th(2, "r") ** 2 / (th(4) ** 2 * th(1, "r") ** 2)
            + th(3) ** 4 * th(3, "r") ** 2 / (th(2) ** 2 * th(4) ** 2 * th(1, "r") ** 2)
            - 2
            * th(2) ** 2
            * th(2, "r")
            * th(3, "r")
            * th(4, "r", 1)
            / (th(3) ** 2 * th(4) ** 2 * th(1, "r") ** 3)
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    48,
    "MI-II",
    [*brkt([F(1), F(2)], [F(1, "r"), F(2, "r")])],
    [
        W(4 * th(3) * th(4) * th(3, "r") * th(4, "r") / (th(2) ** 2 * th(1, "r") ** 2), R33),
        PC(
            -2
            * th(3) ** 4
            * th(4, "r")
            / (th(2) ** 2 * th(4) * th(1, "r") ** 2)
            * (1 + th(4) ** 2 * th(3, "r") ** 2 / (th(3) ** 2 * th(4, "r") ** 2))
            * (th(3, "r") / th(3) - th(2, "r") * th(4, "r", 1) / (th(3) ** 3 * th(1, "r")))
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    49,
    "MI-II",
    [*brkt([F(2), F(3)], [F(2, "r"), F(3, "r")])],
    [
        W(-4 * th(3) * th(2, "r") * th(3, "r") / (th(2) * th(1, "r") ** 2), R33),
        PC(
            2
            * th(3) ** 4
            / (th(4) ** 2 * th(1, "r") ** 2)
            * (
                2 * th(3, "r") * th(2, "r") / (th(2) * th(3))
                - th(4, "r", 1)
                * th(2)
                / (th(1, "r") * th(3) ** 3)
                * (th(3, "r") ** 2 / th(3) ** 2 + th(2, "r") ** 2 / th(2) ** 2)
            )
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    50,
    "MI-II",
    [*brkt([F(1), F(3)], [F(1, "r"), F(3, "r")])],
    [
        W(4 * th(4) * th(2, "r") * th(4, "r") / (th(2) * th(1, "r") ** 2), R33),
        PC(
            -2
            * th(4) ** 3
            * th(2)
            * th(2, "r")
            / (th(3) ** 2 * th(1, "r") ** 2 * th(4, "r"))
            * (
                (th(3, "r") ** 2 / th(3) ** 2 + th(4, "r") ** 2 / th(4) ** 2)
                - th(4, "r", 1)
                * th(2) ** 2
                * th(3, "r")
                / (th(1, "r") * th(3) ** 4 * th(2, "r"))
                * (th(2, "r") ** 2 / th(2) ** 2 + th(4, "r") ** 2 / th(4) ** 2)
            )
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    53,
    "MI-II",
    [*brkt([F(3, 0, 3)], [F(3, "r")])],
    [
        W(2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2), R33),
        PC(
            -2
            * th(3) ** 2
            * th(2, "r") ** 2
            / (th(4) * th(4, "r") * th(1, 4) ** 2)
            * (th(3, "r") / th(3) - th(2, "r") * th(4, "r", 1) / (th(3) ** 3 * th(1, "r")))
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    54,
    "MI-II",
    [*brkt([F(1, 0, 3)], [F(1, "r")])],
    [
        W(
            2 * th(4) ** 4 * th(2, "r") * th(3, "r") / (th(2) ** 3 * th(3) * th(1, "r") ** 2),
            R33,
        ),
        PC(
            -2
            * th(3) ** 2
            * th(4) ** 2
            / (th(2) ** 2 * th(1, "r") ** 2)
            * (
                th(3, "r") * th(2, "r") / (th(3) * th(2))
                - th(4, "r") ** 2
                * th(4, "r", 1)
                * th(2)
                / (th(4) ** 2 * th(3) ** 3 * th(1, "r"))
            )
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    55,
    "MI-II",
    [*brkt([F(2, 0, 3)], [F(2, "r")])],
    [
        W(
            2 * th(3) ** 4 * th(2, "r") * th(4, "r") / (th(2) ** 3 * th(4) * th(1, "r") ** 2),
            R33,
        ),
        PC(
            2
            * th(2) ** 3
            * th(4)
            * th(2, "r")
            / (th(3) ** 4 * th(4, "r"))
            * (
                1
                - th(3) ** 6 * th(4, "r") ** 2 / (th(2) ** 6 * th(1, "r") ** 2)
                + th(3, "r") ** 3
                * th(4, "r", 1)
                * th(4) ** 2
                / (th(2) ** 4 * th(2, "r") * th(1, "r") ** 3)
            )
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    59,
    "MI-II",
    [*brkt([F(1), F(2), F(3)], [F(3, "r", 2)])],
    [W(-2 * th(3) ** 2 * th(2, "r") ** 2 / (th(4) ** 2 * th(1, "r") ** 2), R123)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    60,
    "MI-II",
    [*brkt([F(1, 0, 2), F(2), F(3)], [F(1, "r")])],
    [W(-2 * th(4) ** 2 * th(2, "r") * th(3, "r") / (th(2) * th(3) * th(1, "r") ** 2), R123)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    61,
    "MI-II",
    [*brkt([F(2, 0, 2), F(1), F(3)], [F(2, "r")])],
    [W(2 * th(3) ** 2 * th(2, "r") * th(4, "r") / (th(2) * th(4) * th(1, "r") ** 2), R123)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    62,
    "MI-II",
    [*brkt([F(3, 0, 2), F(1), F(2)], [F(3, "r", 3)])],
    [
        W(
            -4
            * th(2) ** 2
            * th(2, "r") ** 2
            * th(3, "r")
            * th(4, "r")
            / (th(3) * th(4) * th(1, "r") ** 4),
            R123,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    63,
    "MI-II",
    [*brkt([F(1, 0, 2), F(2), F(3)], [F(1, "r", 3)])],
    [
        W(
            -4
            * th(4) ** 2
            * th(4, "r") ** 2
            * th(3, "r")
            * th(2, "r")
            / (th(2) * th(3) * th(1, "r") ** 4),
            R123,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    64,
    "MI-II",
    [*brkt([F(2, 0, 2), F(1), F(3)], [F(2, "r", 3)])],
    [
        W(
            -4
            * th(3) ** 2
            * th(3, "r") ** 2
            * th(2, "r")
            * th(4, "r")
            / (th(2) * th(4) * th(1, "r") ** 4),
            R123,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    65,
    "MI-II",
    [*brkt([F(1), F(2), F(3)], [F(3, "r", 4)])],
    [
        W(
            2
            * th(2) ** 2
            * th(2, "r") ** 2
            / th(1, 4) ** 4
            * (
                th(2, "r") ** 2 / th(2) ** 2
                - th(2) ** 2
                * th(3, "r") ** 2
                * th(4, "r") ** 2
                / (th(3) ** 2 * th(4) ** 2 * th(2, "r") ** 2)
                - th(3, "r") ** 2 / th(3) ** 2
                - th(4, "r") ** 2 / th(4) ** 2
            ),
            R123,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

# ---------------------------------------------------------------------------
# Family MI-II-alt (period pi, alternating signs, even p)
# ---------------------------------------------------------------------------

ident(
    66,
    "MI-II-alt",
    [S(F(3, 0), F(3, "r"), alt=True)],
    [W(2 / (th(3) * th(4)) * th(2, "r") / th(1, "r"), LDa)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    67,
    "MI-II-alt",
    [S(F(1, 0), F(1, "r"), alt=True)],
    [W(2 / (th(2) * th(3)) * th(4, "r") / th(1, "r"), LDa)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    68,
    "MI-II-alt",
    [S(F(2, 0), F(2, "r"), alt=True)],
    [W(-2 / (th(2) * th(4)) * th(3, "r") / th(1, "r"), LDa)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    69,
    "MI-II-alt",
    [S(F(3, 0), F(3, "r"), F(3, "2*r"), F(3, "3*r"), alt=True)],
    [
        W(
            2
            / (th(3) * th(4))
            * (
                th(2, "r")
                * th(2, "2*r")
                * th(2, "3*r")
                / (th(1, "r") * th(1, "2*r") * th(1, "3*r"))
                + th(2, "r") ** 2 * th(2, "2*r") / (th(1, "r") ** 2 * th(1, "2*r"))
            ),
            LDa,
        )
    ],
    syms=("r",),
    pmin=6,
    status=VERIFIED,
)

_eq70_coeff = (
    SignPow("l/2")
    * (2 / th(3) ** 2)
    * IndexedSum(
        "k",
        1,
        "l/2",
        SignPow("k-1")
        * IndexedProd("n", 1, "l", th(2, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
    )
)
ident(
    70,
    "MI-II-alt",
    [CH(3, "l", "r", alt=True)],
    [W(_eq70_coeff, LDa)],
    syms=("r",),
    lpar="even",
    lmin=2,
    lmax="p-1",
    pmin=4,
    status=VERIFIED,
)

_eq71_coeff = (2 / th(3) ** 2) * IndexedSum(
    "k",
    1,
    "l/2",
    SignPow("k-1")
    * IndexedProd("n", 1, "l", th(4, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
)
ident(
    71,
    "MI-II-alt",
    [CH(1, "l", "r", alt=True)],
    [W(_eq71_coeff, LDa)],
    syms=("r",),
    lpar="even",
    lmin=2,
    lmax="p",
    pmin=4,
    status=VERIFIED,
)

_eq72_coeff = (
    SignPow("l/2")
    * (2 / th(3) ** 2)
    * (th(3) / th(2)) ** "2*l"
    * IndexedSum(
        "k",
        1,
        "l/2",
        SignPow("k-1")
        * IndexedProd("n", 1, "l", th(3, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
    )
)
ident(
    72,
    "MI-II-alt",
    [CH(2, "l", "r", alt=True)],
    [W(_eq72_coeff, LDa)],
    syms=("r",),
    lpar="even",
    lmin=2,
    lmax="p",
    pmin=4,
    status=VERIFIED,
)

ident(
    73,
    "MI-II-alt",
    [SP(F(1))],
    [
        W(
            (1 / th(2) ** 2)
            * IndexedProd("n", 1, "(p-2)/2", (th(4, "n") / th(1, "n")) ** 2),
            LDa,
        )
    ],
    pmin=4,
    status=VERIFIED,
)

ident(
    74,
    "MI-II-alt",
    [SP(F(2))],
    [
        W(
            SignPow("p/2")
            * (1 / th(2) ** 2)
            * IndexedProd("n", 1, "(p-2)/2", (th(3, "n") / th(1, "n")) ** 2),
            LDa,
        )
    ],
    pmin=4,
    status=VERIFIED,
)

ident(
    75,
    "MI-II-alt",
    [*brkt([F(3)], [F(1, "r"), F(2, "r")], alt=True)],
    [W(-4 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2), LDa)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    76,
    "MI-II-alt",
    [*brkt([F(1)], [F(2, "r"), F(3, "r")], alt=True)],
    [W(-4 * th(2, "r") * th(3, "r") / (th(2) * th(3) * th(1, "r") ** 2), LDa)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    77,
    "MI-II-alt",
    [*brkt([F(2)], [F(1, "r"), F(3, "r")], alt=True)],
    [W(-4 * th(2, "r") * th(4, "r") / (th(2) * th(4) * th(1, "r") ** 2), LDa)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    78,
    "MI-II-alt",
    [*brkt([F(3, 0, 3)], [F(3, "r")], alt=True)],
    [
        W(
            2 * th(2) ** 2 * th(3) * th(3, "r") * th(4, "r") / (th(4) ** 3 * th(1, "r") ** 2),
            R33a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    "78a",
    "MI-II-alt",
    [*brkt([F(2, 0, 3)], [F(2, "r")], alt=True)],
    [
        W(
            2 * th(3) ** 4 * th(2, "r") * th(4, "r") / (th(2) ** 3 * th(4) * th(1, "r") ** 2),
            R33a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    79,
    "MI-II-alt",
    [*brkt([F(1, 0, 3)], [F(1, "r")], alt=True)],
    [
        W(
            2 * th(4) ** 4 * th(2, "r") * th(3, "r") / (th(2) ** 3 * th(3) * th(1, "r") ** 2),
            R33a,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    80,
    "MI-II-alt",
    [*brkt([F(3, 0, 3)], [F(1, "r"), F(2, "r")], alt=True)],
    [
        W(
            -2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2),
            R123a,
        ),
        W(
            -12
            * th(2, "r") ** 2
            * th(3, "r")
            * th(4, "r")
            / (th(3) * th(4) * th(1, "r") ** 4),
            LDa,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    81,
    "MI-II-alt",
    [*brkt([F(2, 0, 2), F(1), F(3)], [F(2, "r")], alt=True)],
    [
        W(
            2 * th(3) ** 2 * th(2, "r") * th(4, "r") / (th(2) * th(4) * th(1, "r") ** 2),
            R123a,
        ),
        W(
            -4
            * th(3, "r") ** 2
            * th(2, "r")
            * th(4, "r")
            / (th(2) * th(4) * th(1, "r") ** 4),
            LDa,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

# ---------------------------------------------------------------------------
# Family MI-III (period 2pi, odd p); printed arguments 2k*pi/p are offset k
# ---------------------------------------------------------------------------

ident(83, "MI-III", [*brkt([F(2)], [F(3, "r")])], [Z], syms=("r",), status=VERIFIED)

_eq84_coeff = SignPow("(l-1)/2") * IndexedProd(
    "k", 1, "(l-1)/2", (th(4, "r*k") / th(1, "r*k")) ** 2
) + 2 * IndexedSum(
    "k",
    1,
    "(l-1)/2",
    IndexedProd("n", 1, "l", th(4, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
)
ident(
    84,
    "MI-III",
    [CH(1, "l", "r")],
    [W(_eq84_coeff, R14)],
    syms=("r",),
    lpar="odd",
    lmin=3,
    lmax="p",
    status=VERIFIED,
)

ident(
    85,
    "MI-III",
    [SP(F(1))],
    [
        W(
            SignPow("(p-1)/2")
            * IndexedProd("n", 1, "(p-1)/2", (th(4, "n") / th(1, "n")) ** 2),
            R14,
        )
    ],
    status=VERIFIED,
)

ident(
    86,
    "MI-III",
    [*brkt([F(1, 0, 2)], [F(1, "r")])],
    [
        W(
            -2
            * th(4) ** 2
            / th(1, "r") ** 2
            * (th(2, "r") * th(3, "r") / (th(2) * th(3)) - th(4, "r") ** 2 / th(4) ** 2),
            R14,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    87,
    "MI-III",
    [*brkt([F(2)], [F(1, "r"), F(2, "r")])],
    [
        W(
            2
            * th(3) ** 2
            * th(4, "r")
            / (th(4) * th(1, "r") ** 2)
            * (th(2, "r") / th(2) - th(3, "r") / th(3)),
            R14,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    88,
    "MI-III",
    [*brkt([F(3)], [F(1, "r"), F(3, "r")])],
    [
        W(
            2
            * th(2) ** 2
            * th(4, "r")
            / (th(4) * th(1, "r") ** 2)
            * (th(3, "r") / th(3) - th(2, "r") / th(2)),
            R14,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    89,
    "MI-III",
    [*brkt([F(1)], [F(2, "r"), F(2, "s")])],
    [
        W(
            -2
            * (
                th(3, "r") * th(3, "s") / (th(1, "r") * th(1, "s"))
                + th(3)
                / th(4)
                * th(3, "r-s")
                / th(1, "r-s")
                * (th(4, "r") / th(1, "r") - th(4, "s") / th(1, "s"))
            ),
            R14,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    90,
    "MI-III",
    [*brkt([F(1)], [F(3, "r"), F(3, "s")])],
    [
        W(
            -2
            * (
                th(2, "r") * th(2, "s") / (th(1, "r") * th(1, "s"))
                + th(2)
                / th(4)
                * th(2, "r-s")
                / th(1, "r-s")
                * (th(4, "r") / th(1, "r") - th(4, "s") / th(1, "s"))
            ),
            R14,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    91,
    "MI-III",
    [*brkt([F(3)], [F(3, "r"), F(1, "s")])],
    [
        W(
            -2
            * th(2, "r")
            / th(1, "r")
            * (
                th(2, "r-s") / th(1, "r-s")
                + th(2, "s")
                * th(2)
                / (th(1, "s") * th(3))
                * (th(4, "r") / th(1, "r") - th(4, "r-s") / th(1, "r-s"))
            ),
            R14,
        )
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    92,
    "MI-III",
    [*brkt([F(2), F(3)], [F(1, "r", 2)])],
    [
        W(
            2
            * th(4, "r") ** 2
            / th(1, "r") ** 2
            * (1 + th(4) ** 2 * th(2, "r") * th(3, "r") / (th(2) * th(3) * th(4, "r") ** 2)),
            R23,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    93,
    "MI-III",
    [*brkt([F(1), F(3)], [F(1, "r"), F(2, "r")])],
    [W(2 * th(4) / th(1, "r") * (th(2, "r") / th(2) + th(3, "r") / th(3)), R23)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    94,
    "MI-III",
    [*brkt([F(2), F(3)], [F(1, "r"), F(1, "s")])],
    [W(2 * th(4, "r") * th(4, "s") / (th(1, "r") * th(1, "s")), R23)],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    95,
    "MI-III",
    [*brkt([F(2), F(3)], [F(2, "r"), F(2, "s")])],
    [
        W(
            -2
            * th(2) ** 2
            * th(3, "r")
            * th(3, "s")
            / (th(3) ** 2 * th(1, "r") * th(1, "s")),
            R23,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    96,
    "MI-III",
    [*brkt([F(2), F(3)], [F(3, "r"), F(3, "s")])],
    [W(-2 * th(2, "r") * th(2, "s") / (th(1, "r") * th(1, "s")), R23)],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    97,
    "MI-III",
    [*brkt([F(1), F(2)], [F(3, "r"), F(1, "s")])],
    [W(2 * th(4) * th(2, "r") * th(4, "s") / (th(2) * th(1, "r") * th(1, "s")), R23)],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    82,
    "MI-III",
    [*brkt([F(1), F(2), F(3)], [F(1, "r")])],
    [
        W(
            -2
            * th(4) ** 2
            / (th(2) * th(3))
            * th(2, "r")
            * th(3, "r")
            / th(1, "r") ** 2,
            R23,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    98,
    "MI-III",
    [*brkt([F(1), F(2), F(3)], [F(1, "r", 3)])],
    [
        W(
            -2
            * th(4) ** 2
            * th(4, "r") ** 2
            / th(1, "r") ** 4
            * (
                th(2, "r") ** 2 / th(2) ** 2
                + th(4) ** 2
                * th(2, "r") ** 2
                * th(3, "r") ** 2
                / (th(4, "r") ** 2 * th(2) ** 2 * th(3) ** 2)
                + th(3, "r") ** 2 / th(3) ** 2
                + 3 * th(2, "r") * th(3, "r") / (th(2) * th(3))
            ),
            R23,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    99,
    "MI-III",
    [*brkt([F(1, 0, 4)], [F(1, "r")])],
    [
        W(
            -2 * th(4) ** 2 * th(2, "r") * th(3, "r") / (th(2) * th(3) * th(1, "r") ** 2),
            R111,
        ),
        W(
            2
            * th(2, "r") ** 2
            * th(4) ** 2
            / th(1, "r") ** 4
            * (th(4, "r") ** 2 / th(4) ** 2 - th(2, "r") * th(3, "r") / (th(2) * th(3))),
            R14,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    100,
    "MI-III",
    [*brkt([F(1, 0, 3)], [F(1, "r", 2)])],
    [
        W(2 * th(4, "r") ** 2 / th(1, "r") ** 2, R111),
        W(
            2
            * th(4) ** 2
            * th(4, "r") ** 2
            / th(1, "r") ** 4
            * (
                th(2, "r") ** 2 / th(2) ** 2
                + th(3, "r") ** 2 / th(3) ** 2
                + th(4) ** 2
                * th(2, "r") ** 2
                * th(3, "r") ** 2
                / (th(4, "r") ** 2 * th(2) ** 2 * th(3) ** 2)
                - 3 * th(2, "r") * th(3, "r") / (th(2) * th(3))
            ),
            R14,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    "100a",
    "MI-III",
    [*brkt([F(1, 0, 4)], [F(2, "r"), F(3, "r")])],
    [
        W(
            2 * th(4) ** 2 * th(2, "r") * th(3, "r") / (th(2) * th(3) * th(1, "r") ** 2),
            R1123,
        ),
        W(
            2
            * th(4) ** 2
            * th(4, "r") ** 2
            / th(1, "r") ** 4
            * (th(4, "r") ** 2 / th(4) ** 2 + 3 * th(2, "r") * th(3, "r") / (th(2) * th(3))),
            R23,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    "100b",
    "MI-III",
    [*brkt([F(1, 0, 4)], [F(2, "s"), F(3, "r")])],
    [
        W(
            2
            * th(4) ** 2
            * th(2, "r")
            * th(3, "s")
            / (th(2) * th(3) * th(1, "r") * th(1, "s")),
            R1123,
        ),
        W(
            2
            * th(4) ** 2
            / (th(2) * th(3))
            * (
                th(3, "r")
                * th(4, "r")
                * th(2, "s")
                * th(4, "s")
                / (th(1, "r") ** 2 * th(1, "s") ** 2)
                + th(2, "r")
                * th(3, "s")
                / (th(1, "r") * th(3, "s"))
                * (th(4, "r") ** 2 / th(1, "r") ** 2 + th(4, "s") ** 2 / th(1, "s") ** 2)
            ),
            R23,
        ),
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

# ---------------------------------------------------------------------------
# Family MI-IV (period 2pi, odd p)
# ---------------------------------------------------------------------------

ident(
    102,
    "MI-IV",
    [*brkt([F(1), F(2), F(3)], [F(2, "r")])],
    [W(2 * (th(4) / th(3)) * th(2, 1) * th(3, 1) / th(1, 1) ** 2, R13)],
    syms=("r",),
    status=VERIFIED,
)

ident(103, "MI-IV", [*brkt([F(3)], [F(1, "r")])], [Z], syms=("r",), status=VERIFIED)

_eq104_coeff = IndexedProd(
    "k", 1, "(l-1)/2", (th(3, "r*k") / th(1, "r*k")) ** 2
) + 2 * SignPow("(l-1)/2") * IndexedSum(
    "k",
    1,
    "(l-1)/2",
    IndexedProd("n", 1, "l", th(3, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
)
ident(
    104,
    "MI-IV",
    [CH(2, "l", "r")],
    [W(_eq104_coeff, R24)],
    syms=("r",),
    lpar="odd",
    lmin=3,
    lmax="p",
    status=VERIFIED,
)

ident(
    105,
    "MI-IV",
    [SP(F(2))],
    [W(IndexedProd("n", 1, "(p-1)/2", (th(3, "n") / th(1, "n")) ** 2), R24)],
    status=VERIFIED,
)

ident(
    101,
    "MI-IV",
    [*brkt([F(2, 0, 2)], [F(2, "r")])],
    [
        W(
            2
            * th(4)
            * th(2, "r")
            * th(4, "r")
            / th(1, "r") ** 2
            * (th(2, "r") / th(2) - th(4) * th(3, "r") ** 2 / (th(3) ** 2 * th(4, "r"))),
            R24,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    106,
    "MI-IV",
    [*brkt([F(3)], [F(2, "r"), F(3, "r")])],
    [
        W(
            -2
            * th(2) ** 2
            * th(3, "r")
            / (th(3) * th(1, "r") ** 2)
            * (th(2, "r") / th(2) - th(4, "r") / th(4)),
            R24,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    107,
    "MI-IV",
    [*brkt([F(1)], [F(1, "r"), F(2, "r")])],
    [
        W(
            -2
            * th(4) ** 2
            * th(3, "r")
            / (th(3) * th(1, "r") ** 2)
            * (th(2, "r") / th(2) - th(4, "r") / th(4)),
            R24,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    108,
    "MI-IV",
    [*brkt([F(3)], [F(2, "s"), F(3, "r")])],
    [
        W(
            -2
            * (
                th(2, "r-s") * th(2, "r") / (th(1, "r") * th(1, "r-s"))
                + th(2)
                / th(3)
                * th(2, "s")
                / th(1, "s")
                * (th(3, "r") / th(1, "r") - th(3, "r-s") / th(1, "r-s"))
            ),
            R24,
        )
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    109,
    "MI-IV",
    [*brkt([F(1)], [F(1, "r"), F(2, "s")])],
    [
        W(
            2
            * (
                th(4, "r") * th(4, "r-s") / (th(1, "r") * th(1, "r-s"))
                + th(4)
                / th(3)
                * th(4, "s")
                / th(1, "s")
                * (th(3, "r") / th(1, "r") - th(3, "r-s") / th(1, "r-s"))
            ),
            R24,
        )
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    110,
    "MI-IV",
    [*brkt([F(2)], [F(1, "r"), F(1, "s")])],
    [
        W(
            2
            * (
                th(4, "r") * th(4, "s") / (th(1, "r") * th(1, "s"))
                + th(4, "r-s")
                * th(4)
                / (th(1, "r-s") * th(3))
                * (th(3, "r") / th(1, "r") - th(3, "s") / th(1, "s"))
            ),
            R24,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    111,
    "MI-IV",
    [*brkt([F(2)], [F(3, "r"), F(3, "s")])],
    [
        W(
            -2
            * (
                th(2, "r") * th(2, "s") / (th(1, "r") * th(1, "s"))
                + th(2, "r-s")
                * th(2)
                / (th(1, "r-s") * th(3))
                * (th(3, "r") / th(1, "r") - th(3, "s") / th(1, "s"))
            ),
            R24,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

# The printed minus branch reads theta1(z_{j-r}) theta3(z_{j+r}) / theta4^2(z_{j-r}).
ident(
    112,
    "MI-IV",
    [
        S(F(2, 0, 2), F(1, "r"), F(3, "r")),
        S(F(2, 0, 2), F(1, "-r", 1, 2), F(3, "r", 1, 0)),
    ],
    [
        W(
            -2
            * th(2) ** 3
            * th(2, "r")
            / (th(3) ** 2 * th(1, "r") ** 2)
            * (th(4, "r") / th(4) + th(2) * th(3, "r") ** 2 / (th(3) ** 2 * th(2, "r"))),
            R13,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    113,
    "MI-IV",
    [*brkt([F(1), F(2)], [F(2, "r"), F(3, "r")])],
    [
        W(
            -2
            * th(2) ** 2
            * th(3, "r")
            / (th(3) * th(1, "r") ** 2)
            * (th(4, "r") / th(4) + th(2, "r") / th(2)),
            R13,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    114,
    "MI-IV",
    [*brkt([F(2, 0, 2), F(3)], [F(1, "r")])],
    [W(2 * th(2) ** 3 * th(2, "r") * th(3, "r") / (th(3) ** 3 * th(1, "r") ** 2), R13)],
    syms=("r",),
    status=VERIFIED,
)

ident(
    115,
    "MI-IV",
    [*brkt([F(1), F(2), F(3)], [F(2, "r", 3)])],
    [
        W(
            2
            * th(2) ** 2
            * th(2, "r") ** 2
            / th(1, "r") ** 4
            * (
                th(4, "r") ** 2 / th(4) ** 2
                + th(2) ** 2
                * th(3, "r") ** 2
                * th(4, "r") ** 2
                / (th(3) ** 2 * th(4) ** 2 * th(2, "r") ** 2)
                + th(3, "r") ** 2 / th(3) ** 2
                + 3
                * th(2)
                * th(4, "r")
                * th(3, "r") ** 2
                / (th(3) ** 2 * th(2, "r") * th(4))
            ),
            R13,
        )
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    116,
    "MI-IV",
    [*brkt([F(1), F(3)], [F(2, "r"), F(2, "s")])],
    [
        W(
            -2
            * th(2) ** 4
            * th(3, "r")
            * th(3, "s")
            / (th(3) ** 4 * th(1, "r") * th(1, "s")),
            R13,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    117,
    "MI-IV",
    [*brkt([F(1), F(3)], [F(3, "r"), F(3, "s")])],
    [
        W(
            -2
            * (th(2) ** 4 / th(3) ** 4)
            * th(2, "r")
            * th(2, "s")
            / (th(1, "r") * th(1, "s")),
            R13,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    118,
    "MI-IV",
    [*brkt([F(1), F(3)], [F(1, "r"), F(1, "s")])],
    [
        W(
            2
            * th(2) ** 4
            * th(4, "r")
            * th(4, "s")
            / (th(3) ** 4 * th(1, "r") * th(1, "s")),
            R13,
        )
    ],
    syms=("r", "s"),
    status=VERIFIED,
)

ident(
    119,
    "MI-IV",
    [*brkt([F(2), F(3)], [F(1, "r"), F(2, "s")])],
    [
        W(
            -2
            * th(2) ** 4
            * th(4)
            * th(4, "r")
            * th(3, "s")
            / (th(3) ** 5 * th(1, "r") * th(1, "s")),
            R13,
        )
    ],
    syms=("r", "s"),
    ordered=False,
    status=VERIFIED,
)

ident(
    120,
    "MI-IV",
    [*brkt([F(1, 0, 2), F(3, 0, 2)], [F(2, "r")])],
    [
        W(-2 * th(2, "r") * th(4, "r") / th(1, "r") ** 2, R222),
        W(
            2
            * th(2) ** 3
            * th(2, "r")
            * th(4, "r")
            / (th(4) * th(3) ** 2 * th(1, "r") ** 2)
            * (
                1
                + th(3) ** 2 * th(4) ** 2 * th(2, "r") ** 2 / (th(1, "r") ** 2 * th(2) ** 4)
                - th(3) ** 2
                * th(4)
                * th(2, "r")
                * th(4, "r")
                / (th(1, "r") ** 2 * th(2) ** 3)
            ),
            R24,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

ident(
    121,
    "MI-IV",
    [*brkt([F(2, 0, 3)], [F(2, "r", 2)])],
    [
        W(-2 * th(4) ** 2 * th(3, "r") ** 2 / (th(3) ** 2 * th(1, "r") ** 2), R222),
        W(
            2
            * th(3) ** 4
            * th(4, "r") ** 2
            / (th(4) ** 2 * th(1, "r") ** 4)
            * (
                th(2, "r") ** 2 / th(2) ** 2
                + th(3, "r") ** 2 / th(3) ** 2
                + th(4) ** 2
                * th(2, "r") ** 2
                * th(3, "r") ** 2
                / (th(4, "r") ** 2 * th(2) ** 2 * th(3) ** 2)
                - 3
                * th(2, "r")
                * th(4)
                * th(3, "r") ** 2
                / (th(3) ** 2 * th(2) * th(4, "r"))
            ),
            R24,
        ),
    ],
    syms=("r",),
    status=VERIFIED,
)

# ---------------------------------------------------------------------------
# Transform relations
# ---------------------------------------------------------------------------


def transform_entry(eq, payload, *, status=None, id_suffix=""):
    label = str(eq)
    spec = IdentitySpec(
        id=f"TR-{label}{id_suffix}",
        paper_eq=label,
        family="Transform",
        period="pi",
        transform=payload,
        status=status or Status("unchecked"),
    )
    _ENTRIES.append(spec)
    return spec


transform_entry(122, TransformSpec("half_period"), status=VERIFIED)

transform_entry(
    123,
    TransformSpec(
        "modular",
        map="minus_inverse",
        relations=(
            TransformRelation(1, 4, 1, 2, "-i"),
            TransformRelation(2, 4, 4, 2, "1"),
            TransformRelation(3, 4, 3, 2, "-i"),
        ),
    ),
)

transform_entry(
    124,
    TransformSpec(
        "modular",
        map="over_one_minus",
        relations=(
            TransformRelation(1, 4, 1, 4, "1"),
            TransformRelation(2, 4, 3, 4, "inv_sqrt_i"),
            TransformRelation(3, 4, 2, 4, "inv_sqrt_i"),
        ),
    ),
    status=VERIFIED,
)

for _which, _eq in enumerate((125, 126, 127, 128, 129, 130), start=1):
    transform_entry(_eq, TransformSpec("product_ratio", which=_which))


# ---------------------------------------------------------------------------
# Erratum protocol: entries that fail numerical verification as printed keep
# their literal form above (status flipped to erratum below) and gain a
# corrected sibling (id suffix "c") that must verify.  Every correction was
# located by coefficient fitting and holds at 1e-12 or better across the
# full (m, p, r, s, t, l) verification grid.
# ---------------------------------------------------------------------------

from dataclasses import replace as _replace

_BY_ID = {spec.id: i for i, spec in enumerate(_ENTRIES)}


def correct(orig_id, note, lhs=None, rhs=None, constraints=None, transform=None):
    i = _BY_ID[orig_id]
    orig = _ENTRIES[i]
    sibling = _replace(
        orig,
        id=orig.id + "c",
        lhs=orig.lhs if lhs is None else tuple(lhs),
        rhs=orig.rhs if rhs is None else tuple(rhs),
        constraints=orig.constraints if constraints is None else constraints,
        transform=orig.transform if transform is None else transform,
        status=Status("verified", note=f"corrects {orig.id}: {note}"),
    )
    _ENTRIES[i] = _replace(orig, status=Status("erratum", corrected=sibling.id, note=note))
    _ENTRIES.append(sibling)
    _BY_ID[sibling.id] = len(_ENTRIES) - 1
    return sibling


correct(
    "MI1-06",
    "printed coefficient is missing the overall factor 2",
    rhs=[W(2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2), R12)],
)

_eq8c_coeff = IndexedProd(
    "k", 1, "(l-1)/2", (th(2, "r*k") / th(1, "r*k")) ** 2
) + 2 * SignPow("(l-1)/2") * IndexedSum(
    "k",
    1,
    "(l-1)/2",
    IndexedProd("n", 1, "l", th(2, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
)
correct(
    "MI1-08",
    "the factor (theta4(0)/theta3(0))^((l-1)(l-3)/2) must not be there "
    "(its exponent vanishes at l=3, where the printed form works)",
    rhs=[W(_eq8c_coeff, R34)],
)

correct(
    "MI1-16",
    "coefficient arguments scrambled; the sum equals the theta3-pair identity "
    "at shifts (r, r-s), so its verified coefficient applies with s -> r-s",
    rhs=[
        W(
            -2
            * (
                th(3, "r") * th(3, "r-s") / (th(1, "r") * th(1, "r-s"))
                + th(3, "s")
                * th(3)
                / (th(1, "s") * th(2))
                * (th(2, "r") / th(1, "r") - th(2, "r-s") / th(1, "r-s"))
            ),
            R34,
        )
    ],
)

correct(
    "MI1-17",
    "coefficient arguments scrambled; same relabeling as the theta1-pair identity",
    rhs=[
        W(
            2
            * (
                th(4, "r") * th(4, "r-s") / (th(1, "r") * th(1, "r-s"))
                + th(4, "s")
                * th(4)
                / (th(1, "s") * th(2))
                * (th(2, "r") / th(1, "r") - th(2, "r-s") / th(1, "r-s"))
            ),
            R34,
        )
    ],
)

_eq18c_coeff = 2 * (
    th(3)
    * th(4)
    / th(2) ** 2
    * (
        th(2, "r") * th(2, "t") * th(3, "s") * th(4, "r")
        / (th(1, "r") ** 2 * th(1, "t") * th(1, "s"))
        + th(2, "s") * th(2, "t") * th(3, "r") * th(4, "s")
        / (th(1, "s") ** 2 * th(1, "t") * th(1, "r"))
    )
    + th(4)
    / th(3)
    * th(3, "r")
    * th(3, "s")
    * th(3, "t")
    * th(4, "t")
    / (th(1, "t") ** 2 * th(1, "r") * th(1, "s"))
    - th(3, "r-t")
    * th(3, "s-t")
    * th(4, "t") ** 2
    / (th(1, "t") ** 2 * th(1, "r-t") * th(1, "s-t"))
    - th(3)
    / th(2)
    * (
        th(2, "r-t")
        * th(3, "r-s")
        * th(4, "r") ** 2
        / (th(1, "r") ** 2 * th(1, "r-t") * th(1, "r-s"))
        + th(2, "t-s")
        * th(3, "r-s")
        * th(4, "s") ** 2
        / (th(1, "s") ** 2 * th(1, "t-s") * th(1, "r-s"))
    )
)
correct(
    "MI1-18",
    "fourth coefficient monomial must carry theta4^2(t pi/p)/theta1^2(t pi/p), "
    "not theta4^2(s pi/p)/theta1^2(s pi/p)",
    rhs=[W(_eq18c_coeff, R34)],
)

correct(
    "MI1-25",
    "printed -2/3 should be -2",
    rhs=[
        W(
            -2
            * th(2) ** 2
            * th(2, "r") ** 2
            / th(1, "r") ** 4
            * (
                th(4, "r") ** 2 / th(4) ** 2
                + th(2) ** 2
                * th(3, "r") ** 2
                * th(4, "r") ** 2
                / (th(2, "r") ** 2 * th(3) ** 2 * th(4) ** 2)
                + th(3, "r") ** 2 / th(3) ** 2
                + 3 * th(3, "r") * th(4, "r") / (th(3) * th(4))
            ),
            R12,
        )
    ],
)

correct(
    "MI1-37",
    "constant theta3^2(0) should be theta4^2(0)",
    rhs=[
        W(
            2
            * th(4) ** 2
            * th(2, "r")
            / (th(2) * th(1, "r") ** 2)
            * (th(3, "r") / th(3) + th(4, "r") / th(4)),
            R34a,
        )
    ],
)

correct(
    "MI1-38a",
    "bracket sign: theta3(r pi/p)/theta3(0) minus theta4(r pi/p)/theta4(0)",
    rhs=[
        W(
            -2
            * th(2)
            * th(2, "r")
            / th(1, "r") ** 2
            * (th(3, "r") / th(3) - th(4, "r") / th(4)),
            R12a,
        )
    ],
)

correct(
    "MI2-39",
    "the absolute values must be dropped (they break the r -> p-r antisymmetry)",
    rhs=[
        PC(
            th(3)
            * th(3, "r")
            / (th(4) * th(4, "r"))
            * (1 - th(4, "r", 1) * th(2, "r") / (th(3) ** 2 * th(3, "r") * th(1, "r")))
        )
    ],
)

correct(
    "MI2-40",
    "the absolute values must be dropped",
    rhs=[PC(th(4, "r", 1) / (th(2) * th(3) * th(1, "r")))],
)

correct(
    "MI2-41",
    "the absolute values must be dropped",
    rhs=[
        PC(
            th(2)
            * th(2, "r")
            / (th(4) * th(4, "r"))
            * (1 - th(3, "r") * th(4, "r", 1) / (th(2) ** 2 * th(1, "r") * th(2, "r")))
        )
    ],
)

correct(
    "MI2-47",
    "second p-term monomial: theta3^4(0) should be theta2^4(0)",
    rhs=[
        W(-2 * th(2, "r") ** 2 / th(1, "r") ** 2, R33),
        PC(
            th(3) ** 2 * th(2, "r") ** 2 / (th(4) ** 2 * th(1, "r") ** 2)
            + th(2) ** 4 * th(3, "r") ** 2 / (th(2) ** 2 * th(4) ** 2 * th(1, "r") ** 2)
            - 2
            * th(2) ** 2
            * th(2, "r")
            * th(3, "r")
            * th(4, "r", 1)
            / (th(3) ** 2 * th(4) ** 2 * th(1, "r") ** 3)
        ),
    ],
)

correct(
    "MI2-50",
    "p-term missing the factor theta3^4(0)/(theta2^2(0) theta4^2(0))",
    rhs=[
        W(4 * th(4) * th(2, "r") * th(4, "r") / (th(2) * th(1, "r") ** 2), R33),
        PC(
            -2
            * th(3) ** 2
            * th(4)
            * th(2, "r")
            / (th(2) * th(1, "r") ** 2 * th(4, "r"))
            * (
                (th(3, "r") ** 2 / th(3) ** 2 + th(4, "r") ** 2 / th(4) ** 2)
                - th(4, "r", 1)
                * th(2) ** 2
                * th(3, "r")
                / (th(1, "r") * th(3) ** 4 * th(2, "r"))
                * (th(2, "r") ** 2 / th(2) ** 2 + th(4, "r") ** 2 / th(4) ** 2)
            )
        ),
    ],
)

correct(
    "MI2-53",
    "denominator theta1^2(4 pi/p) should be theta1^2(r pi/p)",
    rhs=[
        W(2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2), R33),
        PC(
            -2
            * th(3) ** 2
            * th(2, "r") ** 2
            / (th(4) * th(4, "r") * th(1, "r") ** 2)
            * (th(3, "r") / th(3) - th(2, "r") * th(4, "r", 1) / (th(3) ** 3 * th(1, "r")))
        ),
    ],
)

correct(
    "MI2-55",
    "p-term missing the factor theta3^4(0)/theta4^4(0)",
    rhs=[
        W(
            2 * th(3) ** 4 * th(2, "r") * th(4, "r") / (th(2) ** 3 * th(4) * th(1, "r") ** 2),
            R33,
        ),
        PC(
            2
            * th(2) ** 3
            * th(2, "r")
            / (th(4) ** 3 * th(4, "r"))
            * (
                1
                - th(3) ** 6 * th(4, "r") ** 2 / (th(2) ** 6 * th(1, "r") ** 2)
                + th(3, "r") ** 3
                * th(4, "r", 1)
                * th(4) ** 2
                / (th(2) ** 4 * th(2, "r") * th(1, "r") ** 3)
            )
        ),
    ],
)

correct(
    "MI2-59",
    "coefficient carries a spurious theta3^2(0)/theta4^2(0); the correct "
    "coefficient is -2 theta2^2(r pi/p)/theta1^2(r pi/p)",
    rhs=[W(-2 * th(2, "r") ** 2 / th(1, "r") ** 2, R123)],
)

correct(
    "MI2-65",
    "denominator theta1^4(4 pi/p) should be theta1^4(r pi/p)",
    rhs=[
        W(
            2
            * th(2) ** 2
            * th(2, "r") ** 2
            / th(1, "r") ** 4
            * (
                th(2, "r") ** 2 / th(2) ** 2
                - th(2) ** 2
                * th(3, "r") ** 2
                * th(4, "r") ** 2
                / (th(3) ** 2 * th(4) ** 2 * th(2, "r") ** 2)
                - th(3, "r") ** 2 / th(3) ** 2
                - th(4, "r") ** 2 / th(4) ** 2
            ),
            R123,
        )
    ],
)

correct(
    "MI2-66",
    "overall sign is wrong (ratio exactly -1 across all bindings)",
    rhs=[W(-2 / (th(3) * th(4)) * th(2, "r") / th(1, "r"), LDa)],
)

_eq70c_coeff = (
    SignPow("l/2")
    * (2 / (th(3) * th(4)))
    * IndexedSum(
        "k",
        1,
        "l/2",
        SignPow("k-1")
        * IndexedProd("n", 1, "l", th(2, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
    )
)
correct(
    "MI2-70",
    "prefactor 2/theta3^2(0) should be 2/(theta3(0) theta4(0))",
    rhs=[W(_eq70c_coeff, LDa)],
)

_eq71c_coeff = (2 / (th(2) * th(3))) * IndexedSum(
    "k",
    1,
    "l/2",
    SignPow("k-1")
    * IndexedProd("n", 1, "l", th(4, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
)
correct(
    "MI2-71",
    "prefactor 2/theta3^2(0) should be 2/(theta2(0) theta3(0))",
    rhs=[W(_eq71c_coeff, LDa)],
)

_eq72c_coeff = (
    SignPow("l/2")
    * (2 / (th(2) * th(4)))
    * IndexedSum(
        "k",
        1,
        "l/2",
        SignPow("k-1")
        * IndexedProd("n", 1, "l", th(3, "(n-k)*r") / th(1, "(n-k)*r"), exclude="k"),
    )
)
correct(
    "MI2-72",
    "prefactor (2/theta3^2(0))(theta3(0)/theta2(0))^(2l) should be the "
    "l-independent 2/(theta2(0) theta4(0))",
    rhs=[W(_eq72c_coeff, LDa)],
)

correct(
    "MI2-78",
    "coefficient missing the factor (theta4(0)/theta3(0))^2",
    rhs=[
        W(
            2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2),
            R33a,
        )
    ],
)

correct(
    "MI2-80",
    "second (log-derivative) term has the wrong sign: -12 should be +12",
    rhs=[
        W(
            -2 * th(2) ** 2 * th(3, "r") * th(4, "r") / (th(3) * th(4) * th(1, "r") ** 2),
            R123a,
        ),
        W(
            12
            * th(2, "r") ** 2
            * th(3, "r")
            * th(4, "r")
            / (th(3) * th(4) * th(1, "r") ** 4),
            LDa,
        ),
    ],
)

correct(
    "MI3-91",
    "coefficient is the theta3-theta3 pair identity's coefficient at "
    "relabelled shifts (the sum equals that identity's sum at (s, s-r))",
    rhs=[
        W(
            -2
            * (
                -th(2, "s") * th(2, "r-s") / (th(1, "s") * th(1, "r-s"))
                + th(2)
                * th(2, "r")
                / (th(4) * th(1, "r"))
                * (th(4, "s") / th(1, "s") + th(4, "r-s") / th(1, "r-s"))
            ),
            R14,
        )
    ],
)

correct(
    "MI3-93",
    "theta4(0)/theta1(2r pi/p) should be theta4(0) theta4(2r pi/p)/theta1^2(2r pi/p)",
    rhs=[
        W(
            2
            * th(4)
            * th(4, "r")
            / th(1, "r") ** 2
            * (th(2, "r") / th(2) + th(3, "r") / th(3)),
            R23,
        )
    ],
)

correct(
    "MI3-95",
    "spurious factor theta2^2(0)/theta3^2(0)",
    rhs=[W(-2 * th(3, "r") * th(3, "s") / (th(1, "r") * th(1, "s")), R23)],
)

correct(
    "MI3-99",
    "second-term prefactor theta2^2(2r pi/p) should be theta4^2(2r pi/p)",
    rhs=[
        W(
            -2 * th(4) ** 2 * th(2, "r") * th(3, "r") / (th(2) * th(3) * th(1, "r") ** 2),
            R111,
        ),
        W(
            2
            * th(4, "r") ** 2
            * th(4) ** 2
            / th(1, "r") ** 4
            * (th(4, "r") ** 2 / th(4) ** 2 - th(2, "r") * th(3, "r") / (th(2) * th(3))),
            R14,
        ),
    ],
)

correct(
    "MI3-100b",
    "second term's inner denominator theta3(2s pi/p) should be theta1(2s pi/p)",
    rhs=[
        W(
            2
            * th(4) ** 2
            * th(2, "r")
            * th(3, "s")
            / (th(2) * th(3) * th(1, "r") * th(1, "s")),
            R1123,
        ),
        W(
            2
            * th(4) ** 2
            / (th(2) * th(3))
            * (
                th(3, "r")
                * th(4, "r")
                * th(2, "s")
                * th(4, "s")
                / (th(1, "r") ** 2 * th(1, "s") ** 2)
                + th(2, "r")
                * th(3, "s")
                / (th(1, "r") * th(1, "s"))
                * (th(4, "r") ** 2 / th(1, "r") ** 2 + th(4, "s") ** 2 / th(1, "s") ** 2)
            ),
            R23,
        ),
    ],
)

correct(
    "MI4-101",
    "coefficient restructured: 2[theta3^2(0) theta2 theta4(2r pi/p)/"
    "(theta2(0) theta4(0)) - theta3^2(2r pi/p)]/theta1^2(2r pi/p)",
    rhs=[
        W(
            2
            * (
                th(3) ** 2 * th(2, "r") * th(4, "r") / (th(2) * th(4))
                - th(3, "r") ** 2
            )
            / th(1, "r") ** 2,
            R24,
        )
    ],
)

correct(
    "MI4-102",
    "coefficient is 2 theta3^2(0) theta2(2r pi/p) theta4(2r pi/p)/"
    "(theta2(0) theta4(0) theta1^2(2r pi/p)); printed constant, one theta "
    "index, and the shift offsets are all wrong",
    rhs=[
        W(
            2 * th(3) ** 2 * th(2, "r") * th(4, "r") / (th(2) * th(4) * th(1, "r") ** 2),
            R13,
        )
    ],
)

correct(
    "MI4-108",
    "coefficient is the theta3-theta3 pair identity's coefficient at "
    "relabelled shifts (r-s, -s)",
    rhs=[
        W(
            -2
            * (
                -th(2, "r-s") * th(2, "s") / (th(1, "r-s") * th(1, "s"))
                + th(2, "r")
                * th(2)
                / (th(1, "r") * th(3))
                * (th(3, "r-s") / th(1, "r-s") + th(3, "s") / th(1, "s"))
            ),
            R24,
        )
    ],
)

correct(
    "MI4-109",
    "coefficient is the theta1-theta1 pair identity's coefficient at "
    "relabelled shifts (r-s, -s)",
    rhs=[
        W(
            2
            * (
                -th(4, "r-s") * th(4, "s") / (th(1, "r-s") * th(1, "s"))
                + th(4, "r")
                * th(4)
                / (th(1, "r") * th(3))
                * (th(3, "r-s") / th(1, "r-s") + th(3, "s") / th(1, "s"))
            ),
            R24,
        )
    ],
)

correct(
    "MI4-112",
    "printed minus-branch pairs theta3(z_{j+r}) with theta4^2(z_{j-r}) (not a "
    "well-formed ratio product) and the printed coefficient does not match "
    "the symmetric-bracket sum either; the verified coefficient is "
    "-2[theta3^2(2r pi/p) + theta3^2(0) theta2(2r pi/p) theta4(2r pi/p)/"
    "(theta2(0) theta4(0))]/theta1^2(2r pi/p)",
    lhs=[
        S(F(2, 0, 2), F(1, "r"), F(3, "r")),
        S(F(2, 0, 2), F(1, "-r"), F(3, "-r")),
    ],
    rhs=[
        W(
            -2
            * (
                th(3, "r") ** 2
                + th(3) ** 2 * th(2, "r") * th(4, "r") / (th(2) * th(4))
            )
            / th(1, "r") ** 2,
            R13,
        )
    ],
)

correct(
    "MI4-113",
    "coefficient missing the factor (theta3(0)/theta2(0))^2",
    rhs=[
        W(
            -2
            * th(3)
            * th(3, "r")
            / th(1, "r") ** 2
            * (th(4, "r") / th(4) + th(2, "r") / th(2)),
            R13,
        )
    ],
)

correct(
    "MI4-114",
    "coefficient missing the factor (theta3(0)/theta2(0))^4",
    rhs=[W(2 * th(3) * th(2, "r") * th(3, "r") / (th(2) * th(1, "r") ** 2), R13)],
)

correct(
    "MI4-115",
    "coefficient needs the factor -(theta3(0)/theta2(0))^4 (sign and factor)",
    rhs=[
        W(
            -2
            * th(3) ** 4
            * th(2, "r") ** 2
            / (th(2) ** 2 * th(1, "r") ** 4)
            * (
                th(4, "r") ** 2 / th(4) ** 2
                + th(2) ** 2
                * th(3, "r") ** 2
                * th(4, "r") ** 2
                / (th(3) ** 2 * th(4) ** 2 * th(2, "r") ** 2)
                + th(3, "r") ** 2 / th(3) ** 2
                + 3
                * th(2)
                * th(4, "r")
                * th(3, "r") ** 2
                / (th(3) ** 2 * th(2, "r") * th(4))
            ),
            R13,
        )
    ],
)

correct(
    "MI4-116",
    "spurious factor theta2^4(0)/theta3^4(0)",
    rhs=[W(-2 * th(3, "r") * th(3, "s") / (th(1, "r") * th(1, "s")), R13)],
)

correct(
    "MI4-117",
    "spurious factor theta2^4(0)/theta3^4(0)",
    rhs=[W(-2 * th(2, "r") * th(2, "s") / (th(1, "r") * th(1, "s")), R13)],
)

correct(
    "MI4-118",
    "spurious factor theta2^4(0)/theta3^4(0)",
    rhs=[W(2 * th(4, "r") * th(4, "s") / (th(1, "r") * th(1, "s")), R13)],
)

correct(
    "MI4-119",
    "constant theta2^4(0) theta4(0)/theta3^5(0) should be theta3(0)/theta4(0)",
    rhs=[
        W(
            -2 * th(3) * th(4, "r") * th(3, "s") / (th(4) * th(1, "r") * th(1, "s")),
            R13,
        )
    ],
)

correct(
    "MI4-120",
    "first-term coefficient missing the factor theta2(0) theta4(0)/theta3^2(0)",
    rhs=[
        W(-2 * th(2) * th(4) * th(2, "r") * th(4, "r") / (th(3) ** 2 * th(1, "r") ** 2), R222),
        W(
            2
            * th(2) ** 3
            * th(2, "r")
            * th(4, "r")
            / (th(4) * th(3) ** 2 * th(1, "r") ** 2)
            * (
                1
                + th(3) ** 2 * th(4) ** 2 * th(2, "r") ** 2 / (th(1, "r") ** 2 * th(2) ** 4)
                - th(3) ** 2
                * th(4)
                * th(2, "r")
                * th(4, "r")
                / (th(1, "r") ** 2 * th(2) ** 3)
            ),
            R24,
        ),
    ],
)

correct(
    "MI4-121",
    "first-term coefficient carries a spurious theta4^2(0)/theta3^2(0); "
    "corrected it is -2 theta3^2(2r pi/p)/theta1^2(2r pi/p)",
    rhs=[
        W(-2 * th(3, "r") ** 2 / th(1, "r") ** 2, R222),
        W(
            2
            * th(3) ** 4
            * th(4, "r") ** 2
            / (th(4) ** 2 * th(1, "r") ** 4)
            * (
                th(2, "r") ** 2 / th(2) ** 2
                + th(3, "r") ** 2 / th(3) ** 2
                + th(4) ** 2
                * th(2, "r") ** 2
                * th(3, "r") ** 2
                / (th(4, "r") ** 2 * th(2) ** 2 * th(3) ** 2)
                - 3
                * th(2, "r")
                * th(4)
                * th(3, "r") ** 2
                / (th(3) ** 2 * th(2) * th(4, "r"))
            ),
            R24,
        ),
    ],
)

correct(
    "TR-123",
    "the third relation's printed -i prefactor is spurious (best-fit constant "
    "is exactly i); the correct prefactor is 1",
    transform=TransformSpec(
        "modular",
        map="minus_inverse",
        relations=(
            TransformRelation(1, 4, 1, 2, "-i"),
            TransformRelation(2, 4, 4, 2, "1"),
            TransformRelation(3, 4, 3, 2, "1"),
        ),
    ),
)

correct(
    "TR-129",
    "denominator theta3(0) should be theta4(0) (measured ratio exactly "
    "theta3(0)/theta4(0))",
    transform=TransformSpec("product_ratio", which=5, variant="corrected"),
)

BUILTIN = tuple(_ENTRIES)
