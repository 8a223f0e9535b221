"""Pass/fail records for identity verification.

Report text is line oriented and deliberately timestamp-free so that two
runs of the same build produce byte-identical output:

    CASE <id> PASS|FAIL [tuple=(...)] [lhs=...] [rhs=...]
    NOTE <id> <free text>
    SUITE <name> cases=<n> passed=<n> failed=<n>

A passing case may still carry a tuple: negative checks (an identity that
must fail somewhere) report the witness tuple they found.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class CaseResult:
    """Outcome of one identity check.

    ``witness`` is a 1-based index tuple: the first counterexample for a
    failed equality, or the exhibited tuple for a negative check.
    """

    case_id: str
    passed: bool
    witness: tuple | None = None
    lhs: str | None = None
    rhs: str | None = None
    notes: tuple = ()

    def render_lines(self):
        parts = ["CASE", self.case_id, "PASS" if self.passed else "FAIL"]
        if self.witness is not None:
            parts.append("tuple=(%s)" % ",".join(str(t) for t in self.witness))
        if self.lhs is not None:
            parts.append("lhs=%s" % self.lhs)
        if self.rhs is not None:
            parts.append("rhs=%s" % self.rhs)
        yield " ".join(parts)
        for note in self.notes:
            yield "NOTE %s %s" % (self.case_id, note)


def case_pass(case_id, witness=None, notes=()):
    return CaseResult(case_id, True, witness=witness, notes=tuple(notes))


def case_fail(case_id, witness, lhs, rhs, notes=()):
    return CaseResult(
        case_id, False, witness=witness, lhs=str(lhs), rhs=str(rhs), notes=tuple(notes)
    )


@dataclass
class VerificationReport:
    """Per-suite collection of case results.

    ``elapsed`` is kept for interactive use but never rendered, to preserve
    byte-identical reports across runs.
    """

    suite: str
    results: list = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def all_passed(self):
        return all(r.passed for r in self.results)

    @property
    def failures(self):
        return [r for r in self.results if not r.passed]

    def render(self):
        lines = []
        for r in self.results:
            lines.extend(r.render_lines())
        lines.append(
            "SUITE %s cases=%d passed=%d failed=%d"
            % (
                self.suite,
                len(self.results),
                len(self.results) - len(self.failures),
                len(self.failures),
            )
        )
        return "\n".join(lines) + "\n"
