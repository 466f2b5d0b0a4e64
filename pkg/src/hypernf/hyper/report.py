"""NormalFormReport and its JSON form."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Union

from ..liealg import THETA_LABEL, THETA_NAME, ComplexVF, GElement, SystemPR
from ..scalars import format_rational, format_scalar


def gelement_json(g: GElement) -> List[Dict[str, str]]:
    return [{"term": t.name(), "coeff": format_rational(c)} for t, c in g.items()]


def complex_json(v: ComplexVF) -> List[Dict[str, Any]]:
    return [{"exps": list(e), "component": j, "coeff": format_scalar(c)} for (e, j), c in v.items()]


def system_json(s: SystemPR) -> Dict[str, Any]:
    out: Dict[str, Any] = {"terms": gelement_json(s.body)}
    if s.includes_theta:
        out["theta"] = THETA_LABEL
    return out


def system_str(s: SystemPR) -> str:
    parts = [THETA_NAME] if s.includes_theta else []
    parts += [f"{format_rational(c)}*{t.name()}" for t, c in s.body.items()]
    return " + ".join(parts) if parts else "0"


@dataclass
class NormalFormReport:
    input: Any
    max_grade: int
    level: Union[int, str]
    style: str = "paper"
    case_tag: Any = None
    first_level: Any = None
    records: list = field(default_factory=list)
    chain: List[GElement] = field(default_factory=list)
    final: Optional[SystemPR] = None
    rank_table: Dict[int, int] = field(default_factory=dict)
    discrepancies: List[str] = field(default_factory=list)
    verification: Any = None

    def generators(self, level: int) -> Dict[int, tuple]:
        """grade -> generator tuple for one level."""
        return {r.grade: r.element for r in self.records if r.level == level}

    def records_at(self, level: int) -> list:
        return [r for r in self.records if r.level == level]

    def to_json(self) -> Dict[str, Any]:
        from .cases import partition_classify

        inp = self.input
        if isinstance(inp, SystemPR):
            inp_json: Any = {"mode": "pr", **system_json(inp)}
        elif inp is None:
            inp_json = None
        elif isinstance(inp, ComplexVF):
            inp_json = {"mode": "complex", "monomials": complex_json(inp)}
        else:
            inp_json = str(inp)
        grades = []
        for r in self.records:
            item = r.to_json()
            tag = self.case_tag
            if tag is not None and tag.variant == "I" and r.grade >= 1:
                item["partition"] = partition_classify(r.grade, *tag.params).to_json()
            grades.append(item)
        out: Dict[str, Any] = {
            "input": inp_json,
            "max_grade": self.max_grade,
            "level": self.level,
            "style": self.style,
            "case": self.case_tag.to_json() if self.case_tag is not None else None,
            "rank_table": {str(k): v for k, v in sorted(self.rank_table.items())},
            "records": grades,
            "final": system_json(self.final) if self.final is not None else None,
            "discrepancies": list(self.discrepancies),
            "verification": self.verification.to_json() if self.verification is not None else None,
        }
        if self.first_level is not None:
            out["first_level"] = self.first_level.to_json()
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)
