"""
Report records

A Report collects everything one CLI invocation computed. Serialization is
deterministic: no timestamps, fixed field order, lists in input order.
"""

import logging
from typing import Any, Dict, List

from pydantic import BaseModel, ConfigDict, Field, computed_field

from .. import __version__
from ..dell import DellRecord, Ext2Certificate, GlobalDellEstimate
from ..tautilt import ClassificationReport, TheoremVerdict

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
TOOL_NAME = "taucheck"


class EnumerationSummary(BaseModel):
    algebra: str
    max_dim: int
    complete: bool
    indecomposables: int
    tau_tilting: int
    support_tau_tilting: int
    modules: List[str] = Field(default_factory=list)


class Report(BaseModel):
    """Everything one run computed, ready for JSON output"""

    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    tool: str = TOOL_NAME
    version: str = __version__
    command: str
    suite: str = ""
    corpus: List[str] = Field(default_factory=list)
    seed: int = 0
    config: Dict[str, Any] = Field(default_factory=dict)
    classifications: List[ClassificationReport] = Field(default_factory=list)
    verdicts: List[TheoremVerdict] = Field(default_factory=list)
    dell: List[DellRecord] = Field(default_factory=list)
    global_dell: List[GlobalDellEstimate] = Field(default_factory=list)
    ext2: List[Ext2Certificate] = Field(default_factory=list)
    enumerations: List[EnumerationSummary] = Field(default_factory=list)
    notes: List[str] = Field(default_factory=list)

    @computed_field
    @property
    def inconsistent(self) -> List[TheoremVerdict]:
        """Theorem instances whose conditions disagree (a bug in this tool)"""
        out = [v for v in self.verdicts if v.kind == "theorem" and v.applicable and not v.consistent]
        out += [
            TheoremVerdict(theorem="ext2-vanishing", algebra="", note=c.note)
            for c in self.ext2
            if c.applicable and not c.consistent
        ]
        return out

    @computed_field
    @property
    def candidates(self) -> List[TheoremVerdict]:
        """Conjecture instances that failed: surfaced, never fatal"""
        return [v for v in self.verdicts if v.kind == "conjecture" and v.applicable and not v.consistent]

    @computed_field
    @property
    def uncertain(self) -> bool:
        """Some requested certification was blocked by a budget or horizon"""
        return (
            any(r.uncertain for r in self.classifications)
            or any(v.kind == "theorem" and v.applicable and not v.certified for v in self.verdicts)
            or any(d.status == "unknown" for d in self.dell)
        )

    def exit_code(self) -> int:
        if self.inconsistent:
            return 1
        if self.uncertain:
            return 3
        return 0

    def extend(self, other: "Report") -> None:
        self.classifications.extend(other.classifications)
        self.verdicts.extend(other.verdicts)
        self.dell.extend(other.dell)
        self.global_dell.extend(other.global_dell)
        self.ext2.extend(other.ext2)
        self.enumerations.extend(other.enumerations)
        self.notes.extend(other.notes)

    def to_json(self) -> str:
        return self.model_dump_json(indent=2, by_alias=True)

    @computed_field
    @property
    def summary(self) -> Dict[str, int]:
        return {
            "classifications": len(self.classifications),
            "verdicts": len(self.verdicts),
            "applicable": sum(v.applicable for v in self.verdicts),
            "inconsistent": len(self.inconsistent),
            "candidates": len(self.candidates),
            "dell_records": len(self.dell),
            "dell_unknown": sum(d.status == "unknown" for d in self.dell),
        }

    def to_text(self) -> str:
        lines = [f"{self.tool} {self.version} | {self.command} {self.suite}".rstrip()]
        if self.corpus:
            lines.append("corpus: " + ", ".join(self.corpus))
        lines.append(f"seed: {self.seed}")
        for r in self.classifications:
            lines.append("")
            lines.append(f"📝 {r.module} over {r.algebra} (dim {r.dim}, |T| = {r.summand_count}, |A| = {r.simple_count})")
            flags = [
                ("faithful", r.faithful),
                ("rigid", r.rigid),
                ("τ-rigid", r.tau_rigid),
                ("τ-tilting", r.tau_tilting),
                ("support τ-tilting", r.support_tau_tilting),
                ("partial 1-tilting", r.partial_one_tilting),
                ("1-tilting", r.one_tilting),
            ]
            lines.append("   " + "  ".join(f"{name}={'yes' if value else 'no'}" for name, value in flags))
            lines.append(
                f"   pd={r.projective_dimension}  self-orthogonal={r.self_orthogonal}  "
                f"dim Ann={r.ann_dim}  dim Ann⊗T={r.tensor_ann_dim}  dim Tor1(Ann,T)={r.tor1_ann_dim}"
            )
        for e in self.enumerations:
            lines.append("")
            lines.append(
                f"🌐 {e.algebra} (D = {e.max_dim}{', complete' if e.complete else ''}): "
                f"{e.indecomposables} indecomposables, {e.tau_tilting} τ-tilting, "
                f"{e.support_tau_tilting} support τ-tilting"
            )
            for m in e.modules:
                lines.append(f"   {m}")
        for d in self.dell:
            level = d.level if d.status == "bounded" else "?"
            lines.append(f"   dell({d.module}) in {d.context}: {d.status} {level}{' exact' if d.exact else ''}")
        for g in self.global_dell:
            lines.append(f"   gl.dell {g.context}: {g.bound if g.bound is not None else 'unknown'} ({g.scope})")
        s = self.summary
        lines.append("")
        lines.append(
            f"✨ {s['verdicts']} verdicts ({s['applicable']} applicable), "
            f"{s['inconsistent']} inconsistent, {s['candidates']} conjecture candidates"
        )
        for v in self.inconsistent:
            lines.append(f"❌ {v.theorem} {v.algebra} {v.module}: {v.conditions} {v.note}".rstrip())
        for v in self.candidates:
            lines.append(f"⚠️  candidate {v.theorem} {v.algebra} {v.module}: {v.conditions}")
        for note in self.notes:
            lines.append(f"⚠️  {note}")
        return "\n".join(lines) + "\n"
