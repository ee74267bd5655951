"""Residual bookkeeping shared by all verification scans."""

from __future__ import annotations


class Residual:
    """Worst violation found by a scan.

    ``zero`` is the exact verdict (tolerance-based on the float backend);
    ``magnitude`` is the complex-embedded absolute value of the worst entry
    and ``witness`` the first index tuple attaining it in scan order.
    """

    __slots__ = ("magnitude", "witness", "zero")

    def __init__(self):
        self.magnitude = 0.0
        self.witness = None
        self.zero = True

    def feed(self, witness, value):
        if value.is_zero():
            return
        self.zero = False
        m = value.mag()
        if m > self.magnitude:
            self.magnitude = m
            self.witness = witness

    def merge(self, other):
        if not other.zero:
            self.zero = False
            if other.magnitude > self.magnitude:
                self.magnitude = other.magnitude
                self.witness = other.witness

    @classmethod
    def of(cls, items):
        r = cls()
        for witness, value in items:
            r.feed(witness, value)
        return r

    def to_dict(self):
        return {
            "zero": self.zero,
            "magnitude": self.magnitude,
            "witness": list(self.witness) if self.witness is not None else None,
        }

    def __repr__(self):
        if self.zero:
            return "Residual(0)"
        return "Residual(%.3g at %r)" % (self.magnitude, self.witness)


class CheckReport:
    """Named residuals of one verification pass."""

    def __init__(self):
        self.residuals = {}

    def add(self, name, residual):
        self.residuals[name] = residual
        return residual

    def scan(self, name, items):
        return self.add(name, Residual.of(items))

    @property
    def ok(self):
        return all(r.zero for r in self.residuals.values())

    def failures(self):
        return [name for name, r in self.residuals.items() if not r.zero]

    def to_dict(self):
        return {
            "ok": self.ok,
            "residuals": {k: v.to_dict() for k, v in self.residuals.items()},
        }

    def __repr__(self):
        if self.ok:
            return "CheckReport(ok)"
        return "CheckReport(failed: %s)" % ", ".join(self.failures())
