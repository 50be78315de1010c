"""Truncated Laurent series in q with exact integer coefficients.

A series knows its coefficients on a contiguous exponent window
[valuation, trunc]; exponents above trunc are unknown unless the series
is marked exact, in which case it is a genuine Laurent polynomial and
everything outside the stored window is zero. Coefficients below the
valuation are zero by convention. The zero series is stored with an
empty coefficient tuple and valuation = trunc + 1.
"""

from __future__ import annotations

from .errors import NotPolynomial, WindowUnknown


class QSeries:
    __slots__ = ("valuation", "coeffs", "trunc", "exact")

    def __init__(self, valuation: int, coeffs, trunc: int, exact: bool = False):
        coeffs = list(coeffs)
        while coeffs and coeffs[0] == 0:
            coeffs.pop(0)
            valuation += 1
        if trunc < valuation + len(coeffs) - 1 and not exact:
            del coeffs[trunc - valuation + 1 :]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if exact:
            trunc = valuation + len(coeffs) - 1 if coeffs else valuation - 1
        if not coeffs:
            valuation = trunc + 1
        self.valuation = valuation
        self.coeffs = tuple(int(c) for c in coeffs)
        self.trunc = trunc
        self.exact = exact

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self) -> int:
        """Largest stored exponent with nonzero coefficient; valuation-1 if zero."""
        return self.valuation + len(self.coeffs) - 1

    def coefficient(self, k: int) -> int:
        if k < self.valuation:
            return 0
        if k <= self.degree():
            return self.coeffs[k - self.valuation]
        if self.exact or k <= self.trunc:
            return 0
        raise WindowUnknown(f"coefficient of q^{k} lies beyond truncation {self.trunc}")

    def terms(self) -> dict[int, int]:
        return {
            self.valuation + i: c for i, c in enumerate(self.coeffs) if c != 0
        }

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return (
            self.valuation == other.valuation
            and self.coeffs == other.coeffs
            and self.trunc == other.trunc
            and self.exact == other.exact
        )

    def __hash__(self):
        return hash((self.valuation, self.coeffs, self.trunc, self.exact))

    def __repr__(self):
        if not self.coeffs:
            body = "0"
        else:
            bits = []
            for i, c in enumerate(self.coeffs):
                if c == 0:
                    continue
                e = self.valuation + i
                if e == 0:
                    bits.append(f"{c}")
                elif e == 1:
                    bits.append(f"{c}*q")
                else:
                    bits.append(f"{c}*q^{e}")
            body = " + ".join(bits)
        tail = "" if self.exact else f" + O(q^{self.trunc + 1})"
        return f"<{body}{tail}>"


def qs_zero(trunc: int = -1, exact: bool = False) -> QSeries:
    return QSeries(trunc + 1, (), trunc, exact)


def qs_one(trunc: int | None = None) -> QSeries:
    if trunc is None:
        return QSeries(0, (1,), 0, exact=True)
    return QSeries(0, (1,), trunc, exact=False)


def qs_monomial(k: int, coeff: int = 1) -> QSeries:
    return QSeries(k, (coeff,), k, exact=True)


def from_terms(terms: dict[int, int], trunc: int | None = None, exact: bool = False) -> QSeries:
    """Build a series from an exponent->coefficient mapping."""
    live = {e: c for e, c in terms.items() if c != 0}
    if not live:
        if exact:
            return qs_zero(exact=True)
        if trunc is None:
            raise ValueError("open zero series needs an explicit truncation")
        return qs_zero(trunc)
    lo = min(live)
    hi = max(live)
    if exact:
        trunc = hi
    elif trunc is None:
        raise ValueError("open series needs an explicit truncation")
    coeffs = [live.get(e, 0) for e in range(lo, min(hi, trunc) + 1)]
    return QSeries(lo, coeffs, trunc, exact)


def _etrunc(a: QSeries):
    """Effective truncation: None plays infinity for exact series."""
    return None if a.exact else a.trunc


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    ta, tb = _etrunc(a), _etrunc(b)
    if ta is None and tb is None:
        trunc = max(a.degree(), b.degree())
        exact = True
    else:
        trunc = min(t for t in (ta, tb) if t is not None)
        exact = False
    lo = min(a.valuation, b.valuation)
    hi = max(a.degree(), b.degree())
    if not a.coeffs and not b.coeffs:
        return qs_zero(trunc, exact)
    out = [0] * (hi - lo + 1)
    for i, c in enumerate(a.coeffs):
        out[a.valuation + i - lo] += c
    for i, c in enumerate(b.coeffs):
        out[b.valuation + i - lo] += c
    return QSeries(lo, out, trunc, exact)


def qs_neg(a: QSeries) -> QSeries:
    return QSeries(a.valuation, [-c for c in a.coeffs], a.trunc, a.exact)


def qs_sub(a: QSeries, b: QSeries) -> QSeries:
    return qs_add(a, qs_neg(b))


def qs_scalar(a: QSeries, n: int) -> QSeries:
    if n == 0:
        return qs_zero(a.trunc, a.exact)
    return QSeries(a.valuation, [n * c for c in a.coeffs], a.trunc, a.exact)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    ta, tb = _etrunc(a), _etrunc(b)
    if ta is None and tb is None:
        exact = True
        trunc = a.degree() + b.degree()
    else:
        exact = False
        cands = []
        if ta is not None:
            cands.append(ta + b.valuation)
        if tb is not None:
            cands.append(tb + a.valuation)
        trunc = min(cands)
    if not a.coeffs or not b.coeffs:
        return qs_zero(trunc, exact)
    lo = a.valuation + b.valuation
    out = [0] * (a.degree() + b.degree() - lo + 1)
    for i, ca in enumerate(a.coeffs):
        if ca == 0:
            continue
        for j, cb in enumerate(b.coeffs):
            if cb:
                out[i + j] += ca * cb
    return QSeries(lo, out, trunc, exact)


def scale_monomial(a: QSeries, k: int, coeff: int = 1) -> QSeries:
    """Multiply by coeff * q^k exactly (no truncation loss)."""
    if coeff == 0:
        return qs_zero(a.trunc + k, a.exact)
    return QSeries(a.valuation + k, [coeff * c for c in a.coeffs], a.trunc + k, a.exact)


def qs_truncate(a: QSeries, trunc: int) -> QSeries:
    """Forget coefficients above trunc; stays exact only if nothing is cut."""
    if a.exact and trunc >= a.degree():
        return a
    return QSeries(a.valuation, a.coeffs, min(trunc, a.trunc if not a.exact else trunc), False)


def as_polynomial(a: QSeries) -> QSeries:
    """Caller-asserted: every coefficient beyond the window is zero."""
    return QSeries(a.valuation, a.coeffs, a.trunc, exact=True)


def qs_invert_variable(a: QSeries) -> QSeries:
    """Substitute q -> 1/q. Needs a genuine Laurent polynomial."""
    if not a.exact:
        raise NotPolynomial("cannot invert the variable of a truncated-open series")
    return QSeries(-a.degree(), list(reversed(a.coeffs)), -a.valuation, exact=True)


def qs_eq_to_order(a: QSeries, b: QSeries, lo: int, hi: int) -> bool:
    """Compare coefficients on the closed exponent window [lo, hi]."""
    if hi < lo:
        raise ValueError("empty comparison window")
    for s, name in ((a, "left"), (b, "right")):
        if not s.exact and s.trunc < hi:
            raise WindowUnknown(
                f"{name} series truncated at {s.trunc}, window reaches {hi}"
            )
    return all(a.coefficient(k) == b.coefficient(k) for k in range(lo, hi + 1))


def qs_divide_exact(a: QSeries, b: QSeries) -> QSeries:
    """Exact polynomial division a / b; both must be exact with zero remainder."""
    if not (a.exact and b.exact):
        raise NotPolynomial("exact division needs closed polynomials")
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return qs_zero(exact=True)
    rem = list(a.coeffs)
    bc = list(b.coeffs)
    qlen = len(rem) - len(bc) + 1
    if qlen <= 0:
        raise ValueError("division is not exact: degree too small")
    quot = [0] * qlen
    lead = bc[-1]
    for k in range(qlen - 1, -1, -1):
        top = rem[k + len(bc) - 1]
        if top % lead != 0:
            raise ValueError("division is not exact: leading coefficient")
        f = top // lead
        quot[k] = f
        if f:
            for j, c in enumerate(bc):
                rem[k + j] -= f * c
    if any(rem):
        raise ValueError("division is not exact: nonzero remainder")
    return QSeries(a.valuation - b.valuation, quot, 0, exact=True)


def macmahon(trunc: int) -> QSeries:
    """The plane-partition generating series prod_i (1 - q^i)^(-i), truncated."""
    if trunc < 0:
        return qs_zero(trunc)
    coeffs = [1] + [0] * trunc
    for i in range(1, trunc + 1):
        # multiply i times by 1/(1 - q^i), each in place
        for _ in range(i):
            for k in range(i, trunc + 1):
                coeffs[k] += coeffs[k - i]
    return QSeries(0, coeffs, trunc, exact=False)


def to_json_dict(a: QSeries) -> dict:
    out = {
        "valuation": a.valuation,
        "trunc": a.trunc,
        "coeffs": [str(c) for c in a.coeffs],
    }
    if a.exact:
        out["exact"] = True
    return out


def from_json_dict(d: dict) -> QSeries:
    return QSeries(
        int(d["valuation"]),
        [int(c) for c in d["coeffs"]],
        int(d["trunc"]),
        bool(d.get("exact", False)),
    )
