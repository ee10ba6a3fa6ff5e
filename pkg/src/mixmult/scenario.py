"""Scenario files: declarations of a ring, ideals, modules and extensions
followed by a list of checks, run in declaration order.

Example::

    {"schema": 1,
     "ring": {"vars": 2, "s": 1, "degrees": [[1], [1]]},
     "ideals": {"m": [[1, 0], [0, 1]], "I": [[2, 0], [0, 3]]},
     "modules": {"N": {"shifts": [[0], [0]], "relations": [[1, [1, 0]]]}},
     "checks": [{"kind": "thm3.4", "J": "m", "ideals": ["I"], "module": "N"}]}

Ideals and modules inside a check may be given by name or inline.
Generator indices in module relations count from 0; ``i`` in prop2.1
counts from 1 (it names ``I_i``).
"""
from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .core import GradedRing, compositions
from .errors import MixMultError, ScenarioError
from .extensions import MonomialExtension, check_thm_3_9, length_decompose
from .hilbert import GridSpec, graded_mixed_multiplicities, hilbert_polynomial
from .ideal_mixed import (
    FiberHilbertFunction,
    IdealSystem,
    check_cor_3_8,
    check_power_scaling,
    check_prop_2_1,
    check_sum_identity,
    check_thm_3_4,
    ideal_mixed_multiplicities,
    values_json,
)
from .ideals import MonomialIdeal
from .modules import MonomialModule
from .report import ERROR, FAIL, PASS, CheckResult, VerificationReport
from .verify import brute_force_fiber, check_thm_3_1

SCHEMA_VERSION = 1
CHECK_KINDS = ("thm3.1", "thm3.4", "prop2.1", "cor3.8", "thm3.9", "mixed", "ideal-mixed",
               "rank", "sum", "scaling", "length")
ORACLE_DEGREE = 2


@dataclass
class Scenario:
    ring: GradedRing
    ideals: dict[str, MonomialIdeal] = field(default_factory=dict)
    modules: dict[str, MonomialModule] = field(default_factory=dict)
    extensions: dict[str, MonomialExtension] = field(default_factory=dict)
    checks: list[dict[str, Any]] = field(default_factory=list)

    # name resolution ----------------------------------------------------

    def ideal(self, ref) -> MonomialIdeal:
        if isinstance(ref, str):
            if ref not in self.ideals:
                raise ScenarioError(f"undeclared ideal {ref!r}")
            return self.ideals[ref]
        try:
            return MonomialIdeal.from_json(self.ring, ref)
        except (TypeError, ValueError) as exc:
            raise ScenarioError(f"bad inline ideal {ref!r}: {exc}") from exc

    def module(self, ref) -> MonomialModule | None:
        if ref is None:
            return None
        if isinstance(ref, str):
            if ref not in self.modules:
                raise ScenarioError(f"undeclared module {ref!r}")
            return self.modules[ref]
        try:
            return MonomialModule.from_json(self.ring, ref)
        except (TypeError, ValueError, KeyError) as exc:
            raise ScenarioError(f"bad inline module {ref!r}: {exc}") from exc

    def extension(self, ref) -> MonomialExtension:
        if isinstance(ref, str):
            if ref not in self.extensions:
                raise ScenarioError(f"undeclared extension {ref!r}")
            return self.extensions[ref]
        return MonomialExtension.from_json(self.ring, ref)

    def system(self, check: dict) -> IdealSystem:
        spec = check.get("system", check)
        if "J" not in spec or "ideals" not in spec:
            raise ScenarioError(f"check {check.get('kind')!r} needs J and ideals")
        try:
            return IdealSystem(self.ideal(spec["J"]), tuple(self.ideal(r) for r in spec["ideals"]),
                               self.module(spec.get("module")))
        except ScenarioError:
            raise
        except (MixMultError, ValueError) as exc:
            raise ScenarioError(f"invalid ideal system in {check.get('kind')!r}: {exc}") from exc

    def resolve(self, check: dict) -> None:
        """Raise ``ScenarioError`` for unknown kinds or dangling names."""
        kind = check.get("kind")
        if kind not in CHECK_KINDS:
            raise ScenarioError(f"unknown check kind {kind!r}")
        if kind in ("thm3.1", "mixed", "rank") and "extension" not in check:
            if self.module(check.get("module")) is None:
                raise ScenarioError(f"{kind} needs a module")
        if kind in ("thm3.4", "prop2.1", "cor3.8", "thm3.9", "ideal-mixed", "sum", "scaling"):
            sys = self.system(check)
            if kind == "prop2.1" and not 1 <= int(check.get("i", 0)) <= sys.s:
                raise ScenarioError(f"prop2.1 index i must lie in 1..{sys.s}")
            if kind == "scaling" and len(check.get("u", [])) != sys.s:
                raise ScenarioError("scaling needs one exponent per ideal")
        if kind in ("thm3.9", "length") or (kind == "rank" and "extension" in check):
            self.extension(check.get("extension"))

    # io -----------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "ring": self.ring.to_json(),
            "ideals": {k: v.to_json() for k, v in sorted(self.ideals.items())},
            "modules": {k: v.to_json() for k, v in sorted(self.modules.items())},
            "extensions": {k: v.to_json() for k, v in sorted(self.extensions.items())},
            "checks": self.checks,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)


def parse_scenario(data: str | dict) -> Scenario:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise ScenarioError(f"parse error at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ScenarioError("scenario must be a JSON object")
    if data.get("schema") != SCHEMA_VERSION:
        raise ScenarioError(f"missing or unsupported schema version (expected {SCHEMA_VERSION})")
    if "ring" not in data:
        raise ScenarioError("scenario declares no ring")
    try:
        ring = GradedRing.from_json(data["ring"])
    except (KeyError, TypeError, ValueError) as exc:
        raise ScenarioError(f"bad ring declaration: {exc}") from exc
    sc = Scenario(ring)
    for name, gens in data.get("ideals", {}).items():
        sc.ideals[name] = sc.ideal(gens)
    for name, mod in data.get("modules", {}).items():
        sc.modules[name] = sc.module(mod)
    for name, ext in data.get("extensions", {}).items():
        try:
            sc.extensions[name] = MonomialExtension.from_json(ring, ext)
        except (KeyError, TypeError, ValueError, MixMultError) as exc:
            raise ScenarioError(f"bad extension {name!r}: {exc}") from exc
    checks = data.get("checks", [])
    if not isinstance(checks, list):
        raise ScenarioError("checks must be a list")
    for check in checks:
        if not isinstance(check, dict):
            raise ScenarioError("every check must be an object")
        sc.resolve(check)
    sc.checks = checks
    return sc


def load_scenario(path: str | Path) -> Scenario:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioError(f"cannot read {path}: {exc}") from exc
    return parse_scenario(text)


# execution --------------------------------------------------------------

def _expect_values(expect, values: dict) -> bool:
    for item in expect:
        if values.get(tuple(item["k"])) != item["e"]:
            return False
    return True


def _oracle_sample(sys: IdealSystem, degree: int = ORACLE_DEGREE) -> dict:
    """Compare the staircase fiber counts with raw enumeration on small points."""
    points = [p for t in range(degree + 1) for p in compositions(t, sys.s + 1)]
    engine = FiberHilbertFunction(sys).evaluate_many(points)
    J = [list(g) for g in sys.J.generators]
    ideals = [[list(g) for g in I.generators] for I in sys.ideals]
    agree = all(
        engine[p] == brute_force_fiber(J, ideals, p[0], p[1:], sys.module, sys.ring.variable_count)
        for p in points
    )
    return {"points": len(points), "agree": agree}


def _run_check(sc: Scenario, check: dict, grid: GridSpec | None, retries: int) -> VerificationReport:
    kind = check["kind"]
    if kind == "thm3.1":
        return check_thm_3_1(sc.ring, sc.module(check["module"]), grid, retries)
    if kind == "mixed":
        M = sc.module(check["module"])
        mm = graded_mixed_multiplicities(M, grid, retries)
        res = CheckResult("mixed", {"module": M.to_json()}, values_json(mm.values),
                          extra={"degree": mm.total_degree,
                                 "polynomial": hilbert_polynomial(M, grid, retries).to_json()})
        if "expect" in check:
            res.rhs = check["expect"]
            res.status = PASS if _expect_values(check["expect"], mm.values) else FAIL
        return VerificationReport.single(res)
    if kind == "rank":
        if "extension" in check:
            ext = sc.extension(check["extension"])
            res = CheckResult("rank", ext.to_json(), ext.rank_over_base())
        else:
            M = sc.module(check["module"])
            res = CheckResult("rank", {"module": M.to_json()}, M.rank())
        if "expect" in check:
            res.rhs = check["expect"]
            res.status = PASS if res.lhs == res.rhs else FAIL
        return VerificationReport.single(res)
    if kind == "length":
        ext = sc.extension(check["extension"])
        mods = [MonomialModule.from_json(c.target_ring, m)
                for c, m in zip(ext.components, check["modules"])]
        return length_decompose(ext, mods)
    sys = sc.system(check)
    if kind == "thm3.9":
        report = check_thm_3_9(sc.extension(check["extension"]), sys)
    elif kind == "thm3.4":
        report = check_thm_3_4(sys)
    elif kind == "prop2.1":
        report = check_prop_2_1(sys, int(check["i"]))
    elif kind == "cor3.8":
        report = check_cor_3_8(sys)
    elif kind == "sum":
        report = check_sum_identity(sys)
    elif kind == "scaling":
        report = check_power_scaling(sys, check["u"])
    else:  # ideal-mixed
        mm = ideal_mixed_multiplicities(sys, grid, retries)
        res = CheckResult("ideal-mixed", sys.to_json(), values_json(mm.values),
                          extra={"q": mm.q, "polynomial": mm.polynomial.to_json()})
        if "expect" in check:
            res.rhs = check["expect"]
            res.status = PASS if _expect_values(check["expect"], mm.values) else FAIL
        report = VerificationReport.single(res)
    oracle = _oracle_sample(sys)
    for res in report.checks:
        res.extra["oracle"] = oracle
        if not oracle["agree"]:
            res.status = FAIL
            res.detail = "engine fiber lengths disagree with raw enumeration"
    return report


def run_scenario(source: str | Path | dict | Scenario, grid: GridSpec | None = None,
                 retries: int = 4) -> VerificationReport:
    """Run every check in order.  ``source`` may be a path, JSON text, dict or Scenario."""
    if isinstance(source, Scenario):
        sc = source
    elif isinstance(source, dict):
        sc = parse_scenario(source)
    elif isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        sc = load_scenario(source)
    else:
        sc = parse_scenario(source)
    report = VerificationReport()
    for check in sc.checks:
        t0 = time.perf_counter()
        try:
            sub = _run_check(sc, check, grid, retries)
        except (MixMultError, ValueError) as exc:
            sub = VerificationReport.single(CheckResult(
                check["kind"], {k: v for k, v in check.items() if k != "kind"},
                status=ERROR, detail=f"{type(exc).__name__}: {exc}"))
        for res in sub.checks:
            res.seconds = time.perf_counter() - t0
            if "label" in check:
                res.inputs = {"label": check["label"], **res.inputs}
        report.extend(sub)
    return report
