"""Game spec files, the reproduction suite, and report emission.

A game spec is a YAML (or JSON) mapping with a ``family`` tag::

    family: pd
    label: PD-informal
    T: 0.20
    R: 0.15
    P: 0.05
    S: 0

Families and their fields:

    pd             T, R, P, S
    chicken        T, R, S, P
    parametric-pd  k
    traveler       b, lo (default 180), hi (default 300)
    public-goods   N, y, alpha
    commons        N, h, k0
    matrix         strategies, payoffs

``payoffs`` of a matrix game is an n x n table whose cells are
``[row payoff, column payoff]`` pairs. Numbers may be written as decimals or
as quoted fractions such as ``"2/3"``; decimals are read exactly.
"""
import csv
import io
from dataclasses import dataclass
from fractions import Fraction

import yaml

from .exact import fmt_number, to_fraction
from .games import (Chicken, Commons, Game, InvalidGameError, ParametricPD, PD, PublicGoods,
                    Traveler, verify_symmetry)
from .solver import (cooperative_equilibrium, solve_chicken, solve_commons, solve_public_goods,
                     solve_traveler)

__all__ = [
    "GameSpecError",
    "SuiteRow",
    "load_game_spec",
    "load_game_spec_file",
    "run_paper_suite",
    "emit_report",
    "REPORT_FORMATS",
]

FAMILY_FIELDS = {
    "pd": (PD, ("T", "R", "P", "S"), {}),
    "chicken": (Chicken, ("T", "R", "S", "P"), {}),
    "parametric-pd": (ParametricPD, ("k",), {}),
    "traveler": (Traveler, ("b",), {"lo": 180, "hi": 300}),
    "public-goods": (PublicGoods, ("N", "y", "alpha"), {}),
    "commons": (Commons, ("N", "h", "k0"), {}),
}

REPORT_FORMATS = ("csv", "markdown", "text")
_FORMAT_ALIASES = {"markdown-table": "markdown", "md": "markdown", "structured-text": "text"}
COLUMNS = ("label", "prediction", "observed", "source", "class")


class GameSpecError(ValueError):
    """A game spec document is malformed or describes an invalid game."""


def _number(doc, key):
    try:
        return to_fraction(doc[key])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise GameSpecError(f"field {key!r}: not a number ({doc[key]!r})") from exc


def _parse(document):
    if isinstance(document, dict):
        return document
    try:
        doc = yaml.safe_load(document)
    except yaml.YAMLError as exc:
        raise GameSpecError(f"cannot parse game spec: {exc}") from exc
    if not isinstance(doc, dict):
        raise GameSpecError("game spec must be a mapping with a 'family' field")
    return doc


def _load_matrix(doc):
    for key in ("strategies", "payoffs"):
        if key not in doc:
            raise GameSpecError(f"field {key!r}: missing for family 'matrix'")
    labels = [str(s) for s in doc["strategies"]]
    table = doc["payoffs"]
    n = len(labels)
    if not isinstance(table, list) or len(table) != n or any(
            not isinstance(row, list) or len(row) != n for row in table):
        raise GameSpecError(f"field 'payoffs': expected a {n}x{n} table of payoff pairs")
    cells = {}
    for s, row in enumerate(table):
        for t, cell in enumerate(row):
            if not isinstance(cell, list) or len(cell) != 2:
                raise GameSpecError(f"field 'payoffs': cell ({s},{t}) is not a pair")
            cells[(s, t)] = tuple(_number({"payoffs": v}, "payoffs") for v in cell)
    try:
        game = Game(labels, 2, cells, name=doc.get("label"))
    except InvalidGameError as exc:
        raise GameSpecError(f"field 'payoffs': {exc}") from exc
    witness = verify_symmetry(game)
    if witness is not None:
        perm, prof = witness
        shown = tuple(labels[s] for s in prof)
        raise GameSpecError(f"field 'payoffs': not symmetric at profile {shown}")
    return game


def load_game_spec(document):
    """Parse a spec (text or mapping) into a game family or a matrix Game."""
    doc = _parse(document)
    tag = doc.get("family")
    if tag is None:
        raise GameSpecError("field 'family': missing")
    tag = str(tag).strip().lower()
    if tag == "matrix":
        return _load_matrix(doc)
    if tag not in FAMILY_FIELDS:
        known = ", ".join(sorted([*FAMILY_FIELDS, "matrix"]))
        raise GameSpecError(f"field 'family': unknown family {tag!r} (known: {known})")
    cls, required, optional = FAMILY_FIELDS[tag]
    unknown = set(doc) - set(required) - set(optional) - {"family", "label"}
    if unknown:
        raise GameSpecError(f"field {sorted(unknown)[0]!r}: not a parameter of {tag!r}")
    kwargs = {}
    for key in required:
        if key not in doc:
            raise GameSpecError(f"field {key!r}: missing for family {tag!r}")
        kwargs[key] = _number(doc, key)
    for key, default in optional.items():
        kwargs[key] = _number(doc, key) if key in doc else default
    for key in ("N", "lo", "hi"):
        if key in kwargs:
            if kwargs[key] != int(kwargs[key]):
                raise GameSpecError(f"field {key!r}: must be an integer")
            kwargs[key] = int(kwargs[key])
    try:
        return cls(**kwargs)
    except InvalidGameError as exc:
        raise GameSpecError(str(exc)) from exc


def load_game_spec_file(path):
    """Read a spec file; returns ``(label, family_or_game)``."""
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    doc = _parse(text)
    return str(doc.get("label") or path), load_game_spec(doc)


@dataclass(frozen=True)
class SuiteRow:
    label: str
    prediction: object
    observed: str
    source: str
    match_class: str
    expected: object = None
    ok: bool = None
    note: str = ""

    def prediction_text(self):
        text = fmt_number(self.prediction) if self.prediction is not None else ""
        return f"{text}; {self.note}" if self.note else text


def _exact(label, prediction, expected, observed, source, note=""):
    return SuiteRow(label, prediction, observed, source, "exact-assert",
                    expected=expected, ok=prediction == expected, note=note)


def run_paper_suite():
    """Model predictions for every quantitative case, with cited observations.

    Observed values are carried for reference and never asserted; the
    ``exact-assert`` rows compare the solver output with the closed forms.
    """
    rows = []
    c = cooperative_equilibrium(PD("0.20", "0.15", "0.05", 0)).cooperation
    rows.append(_exact("PD-informal", c, Fraction(1, 2),
                       "0.58 / 0.65 (two MTurk treatments)",
                       "one-shot PD on MTurk, two framings"))
    c = cooperative_equilibrium(PD(10, 7, 3, 0)).cooperation
    rows.append(_exact("PD-10-7-3-0", c, Fraction(1, 4),
                       "0.37 lab / 0.47 MTurk",
                       "one-shot PD, lab and MTurk samples"))
    for k in ("0.5", "1", "2", "5", "10"):
        kf = Fraction(k)
        c = cooperative_equilibrium(ParametricPD(kf)).cooperation
        want = (kf - 1) / kf if kf > 1 else Fraction(0)
        rows.append(_exact(f"ParametricPD-k{k}", c, want, "", "closed form (k-1)/k for k>1, else 0"))

    ce = solve_traveler(180)
    rows.append(_exact("TD-b180", ce.expected_label(), Fraction(180),
                       "about 80% played the Nash claim",
                       "one-shot TD, b=180, claims 180-300",
                       note=f"coincides with Nash: {ce.coincides_with_nash}"))
    ce = solve_traveler(5)
    support = tuple(ce.game.strategies[s] for s in ce.strategy.support)
    rows.append(SuiteRow("TD-b5", ce.guaranteed_value, "about 80% in 290-300, average 295",
                         "one-shot TD, b=5, claims 180-300", "exact-assert",
                         expected=(296, 297), ok=support == (296, 297),
                         note=f"support {{{','.join(map(str, support))}}}, "
                              f"mean claim {float(ce.expected_label()):.6f}"))
    ce = solve_traveler(2, 2, 100)
    rows.append(_exact("TD-b2", ce.guaranteed_value, Fraction("99.2"),
                       "38 of 45 game theorists chose 90-100",
                       "TD played by game theorists, b=2, claims 2-100",
                       note=f"mean claim {float(ce.expected_label()):.6f}"))

    rows.append(_exact("PG-a0.8", solve_public_goods(2, 1, "0.8"), Fraction(2, 3),
                       "mean 0.50, mode 0.60",
                       "one-shot PG, N=2, alpha=0.8, y normalised to 1"))
    rows.append(_exact("PG-a0.6", solve_public_goods(2, 1, "0.6"), Fraction(0), "",
                       "selfish regime: alpha <= 2/3"))
    rows.append(_exact("Commons-a0.6", solve_commons(1, "1.2"), Fraction(0), "",
                       "cooperation iff k/h > 2/3", note="Nash: keep the sheep"))
    rows.append(_exact("Commons-a0.8", solve_commons(1, "1.6"), Fraction(2, 3), "",
                       "cooperation iff k/h > 2/3"))

    pd_rate = cooperative_equilibrium(PD(400, 300, 0, -100)).cooperation
    rows.append(_exact("PD-400-300-0--100", pd_rate, Fraction(2, 3), "",
                       "PD used in the PD/Chicken comparison"))
    chicken = solve_chicken(300, 200, 100, 0)
    rows.append(SuiteRow("Chicken-vs-PD", chicken.cooperation,
                         "Chicken cooperation higher than PD (iterated play)",
                         "iterated PD vs Chicken, equal mean payoff", "exact-assert",
                         expected=f"> {fmt_number(pd_rate)}",
                         ok=chicken.cooperation > pd_rate,
                         note=f"PD rate {fmt_number(pd_rate)}"))
    rows.append(SuiteRow("Chicken-ESS-reference", chicken.symmetric_nash[0],
                         "6/7 (stated reference value)",
                         "mixed ESS value stated for this Chicken", "report-only",
                         note="computed symmetric mixed Nash"))
    return sorted(rows, key=lambda r: r.label)


def _cells(row):
    return (row.label, row.prediction_text(), row.observed, row.source, row.match_class)


def emit_report(rows, fmt="csv"):
    """Render suite rows as ``csv``, ``markdown`` or ``text``; deterministic."""
    rows = list(rows)
    if not rows:
        raise ValueError("no rows to report")
    fmt = _FORMAT_ALIASES.get(fmt, fmt)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(COLUMNS)
        writer.writerows(_cells(r) for r in rows)
        return buf.getvalue()
    if fmt == "markdown":
        def esc(x):
            return str(x).replace("|", "\\|")
        lines = ["| " + " | ".join(COLUMNS) + " |", "|" + "---|" * len(COLUMNS)]
        lines += ["| " + " | ".join(esc(c) for c in _cells(r)) + " |" for r in rows]
        return "\n".join(lines) + "\n"
    if fmt == "text":
        out = []
        for r in rows:
            status = "n/a" if r.ok is None else ("pass" if r.ok else "FAIL")
            expected = fmt_number(r.expected) if isinstance(r.expected, (int, Fraction)) \
                else ("" if r.expected is None else str(r.expected))
            out += [f"[{r.label}]",
                    f"  prediction: {r.prediction_text()}",
                    f"  expected: {expected}",
                    f"  observed: {r.observed}",
                    f"  source: {r.source}",
                    f"  class: {r.match_class}",
                    f"  status: {status}",
                    ""]
        return "\n".join(out)
    raise ValueError(f"unknown report format {fmt!r} (choose from {', '.join(REPORT_FORMATS)})")
