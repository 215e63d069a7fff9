"""Run reports: assembly, exact-integer JSON, and a plain text rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .curves import curve_from_id
from .equation import Solution

REPORT_KEYS = ("solutions", "points", "verdicts", "exclusions", "bounds", "timings")


def _frac_str(v: Fraction) -> str:
    return f"{v.numerator}/{v.denominator}"


def _parse_frac(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


def _sol_out(sol: Solution) -> list[str]:
    return [str(v) for v in sol.as_tuple()]


def _sol_in(row) -> Solution:
    return Solution(*(int(v) for v in row))


@dataclass
class RunReport:
    """Everything a ``solve`` run produced.

    ``solutions`` maps a branch name (``n3``, ``n4``, ``n7``, ``union``,
    ``oracle``, ``expected``, ``missing``, ``unexpected``) to solutions;
    ``points`` maps a family name to ``(curve_id, x, y)`` rows.
    """

    solutions: dict = field(default_factory=dict)
    points: dict = field(default_factory=dict)
    verdicts: list = field(default_factory=list)
    exclusions: list = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)

    def verify(self) -> None:
        for rows in self.solutions.values():
            for sol in rows:
                Solution(*sol.as_tuple())
        for family, rows in self.points.items():
            for cid, x, y in rows:
                if not curve_from_id(cid).contains(x, y):
                    raise ValueError(f"{family} point ({x}, {y}) is not on {cid}")

    def to_dict(self) -> dict:
        self.verify()
        return {
            "solutions": {k: [_sol_out(s) for s in v] for k, v in self.solutions.items()},
            "points": {
                fam: [{"curve": cid, "x": _frac_str(x), "y": _frac_str(y)} for cid, x, y in rows]
                for fam, rows in self.points.items()
            },
            "verdicts": [dict(v) for v in self.verdicts],
            "exclusions": list(self.exclusions),
            "bounds": {k: str(v) for k, v in self.bounds.items()},
            "timings": {k: str(v) for k, v in self.timings.items()},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "RunReport":
        if set(data) != set(REPORT_KEYS):
            raise ValueError(f"report keys must be {REPORT_KEYS}, got {sorted(data)}")
        report = cls(
            solutions={k: [_sol_in(r) for r in v] for k, v in data["solutions"].items()},
            points={
                fam: [(r["curve"], _parse_frac(r["x"]), _parse_frac(r["y"])) for r in rows]
                for fam, rows in data["points"].items()
            },
            verdicts=[dict(v) for v in data["verdicts"]],
            exclusions=list(data["exclusions"]),
            bounds={k: int(v) for k, v in data["bounds"].items()},
            timings={k: int(v) for k, v in data["timings"].items()},
        )
        report.verify()
        return report

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = []
        b = self.bounds
        lines.append("bounded search; completeness is claimed only within these bounds:")
        for k in sorted(b):
            lines.append(f"  {k:<22} {b[k]}")
        lines.append("")
        for family, rows in self.points.items():
            lines.append(f"{family} points ({len(rows)}):")
            for cid, x, y in rows:
                lines.append(f"  {cid:<16} {_frac_str(x):>24} {_frac_str(y):>28}")
            lines.append("")
        if self.verdicts:
            lines.append("sieve verdicts (n >= 5) other than eliminated:")
            for v in self.verdicts:
                if not v["verdict"].startswith("eliminated"):
                    lines.append(f"  d={v['d']:<4} n={v['n']:<3} {v['verdict']} (q={v['candidate']})")
            n_elim = sum(v["verdict"].startswith("eliminated") for v in self.verdicts)
            lines.append(f"  {n_elim} of {len(self.verdicts)} (d, n) cells eliminated")
            lines.append("")
        lines.append("solutions (x, y, n, alpha, beta):")
        header = f"  {'x':>10} {'y':>7} {'n':>3} {'alpha':>5} {'beta':>4}"
        lines.append(header)
        for sol in self.solutions.get("union", []):
            x, y, n, a, be = sol.as_tuple()
            lines.append(f"  {x:>10} {y:>7} {n:>3} {a:>5} {be:>4}")
        for key in ("missing", "unexpected"):
            rows = self.solutions.get(key)
            if rows:
                lines.append(f"{key}: " + ", ".join(str(s) for s in rows))
        lines.append("")
        for note in self.exclusions:
            lines.append(f"NOTICE: {note}")
        if self.timings:
            lines.append("timings (ms): " + ", ".join(f"{k}={v // 1_000_000}" for k, v in self.timings.items()))
        return "\n".join(lines) + "\n"
