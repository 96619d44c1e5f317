"""Run every applicable structural/spectral consistency check on one input.

Each entry pairs an independent recomputation against the library's primary
path (degree formulas vs. constructed multigraphs, exact kernels vs.
floating spectra, closed forms vs. direct constructions), so a failing
entry means a genuine inconsistency rather than a tolerance artifact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .core import (
    Hypergraph,
    degree_profile,
    is_connected,
    is_uniform,
    multigraph_is_connected,
    rank_corank,
    validate,
)
from .line import line_degree_formula, line_edge_count, line_multigraph
from .matrices import adjacency_matrix, gram_identity_check, incidence_matrix, matrix_vector
from .power import PowerParams, power_line_invariance_check
from .spectra import (
    DEFAULT_TOLERANCE,
    certificate_minus_r,
    check_lower_bound,
    collar_certificate_vector,
    degree_sum_bounds,
    eigenvalues_symmetric,
    spectral_radius_sandwich,
)
from .structure import (
    collar_implies_bipartite_check,
    is_collar,
    regularity_report,
    skew_iff_line_regular_check,
)

# fixed threshold for deciding whether a bound is attained (the "iff" halves)
EQUALITY_TOLERANCE = 1e-6


@dataclass(frozen=True)
class CheckEntry:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)
    tolerance: float | None = None
    applicable: bool = True
    note: str = ""

    def to_json_dict(self) -> dict:
        out = {"name": self.name, "passed": self.passed, "details": self.details}
        if self.tolerance is not None:
            out["tolerance"] = self.tolerance
        if not self.applicable:
            out["applicable"] = False
        if self.note:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class CheckReport:
    context: dict[str, Any]
    entries: tuple[CheckEntry, ...]

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def to_json_dict(self) -> dict:
        return {
            "context": self.context,
            "passed": self.passed,
            "checks": [e.to_json_dict() for e in self.entries],
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for e in self.entries:
            status = "pass" if e.passed else "FAIL"
            if not e.applicable:
                status = "skip"
            note = f" ({e.note})" if e.note else ""
            lines.append(f"{status:4s}  {e.name}{note}")
        lines.append(f"overall: {'pass' if self.passed else 'FAIL'}")
        return lines


def run_all_checks(
    h: Hypergraph, tolerance: float = DEFAULT_TOLERANCE
) -> CheckReport:
    r, s = rank_corank(h)
    connected = is_connected(h)
    uniform = is_uniform(h)
    lm = line_multigraph(h).graph
    entries: list[CheckEntry] = []

    isolated = [v for v in validate(h) if v.rule == "isolated-vertex"]
    if isolated:
        entries.append(
            CheckEntry(
                "connectivity-correspondence",
                True,
                applicable=False,
                note="isolated vertices present; correspondence not asserted",
            )
        )
    else:
        line_conn = multigraph_is_connected(lm)
        entries.append(
            CheckEntry(
                "connectivity-correspondence",
                connected == line_conn,
                {"hypergraph_connected": connected, "line_connected": line_conn},
            )
        )

    linear = regularity_report(h).linear
    line_simple = all(mult <= 1 for _, _, mult in lm.pairs())
    entries.append(
        CheckEntry(
            "linearity-gives-simple-line",
            linear == line_simple,
            {"linear": linear, "line_is_simple_graph": line_simple},
        )
    )

    formula = [line_degree_formula(h, i) for i in range(h.m)]
    actual = [lm.degree(i) for i in range(h.m)]
    entries.append(
        CheckEntry(
            "line-degree-formula",
            formula == actual,
            {"formula": formula, "line_degrees": actual},
        )
    )

    predicted = line_edge_count(h)
    total = lm.total_multiplicity()
    entries.append(
        CheckEntry(
            "line-edge-count",
            predicted == total,
            {"predicted": predicted, "total_multiplicity": total},
        )
    )

    entries.append(
        CheckEntry(
            "skew-edge-regular-iff-line-regular", skew_iff_line_regular_check(h)
        )
    )

    entries.append(CheckEntry("gram-identity", gram_identity_check(h)))

    lb = check_lower_bound(h, tolerance)
    entries.append(
        CheckEntry(
            "line-eigenvalues-at-least-minus-rank",
            lb.passed,
            {"lambda_min": lb.lambda_min, "rank": lb.rank},
            tolerance,
        )
    )

    cert = certificate_minus_r(h)
    spec_line = eigenvalues_symmetric(adjacency_matrix(lm), tolerance)
    has_eig = spec_line.contains(-float(r), tolerance)
    details: dict[str, Any] = {"certificate": cert is not None, "eigenvalue_minus_r": has_eig}
    ok = (cert is not None) == has_eig
    if cert is not None:
        exact = matrix_vector(incidence_matrix(h), cert.vector).is_zero()
        details["incidence_kernel_exact"] = exact
        ok = ok and exact
    entries.append(CheckEntry("minus-rank-certificate-iff", ok, details, tolerance))

    witness = is_collar(h)
    if witness is None:
        entries.append(
            CheckEntry(
                "collar-line-bipartite",
                True,
                applicable=False,
                note="not a collar",
            )
        )
        entries.append(
            CheckEntry(
                "collar-minus-k-eigenvalue",
                True,
                applicable=False,
                note="not a collar",
            )
        )
    else:
        entries.append(
            CheckEntry("collar-line-bipartite", collar_implies_bipartite_check(h))
        )
        if uniform is None:
            entries.append(
                CheckEntry(
                    "collar-minus-k-eigenvalue",
                    True,
                    applicable=False,
                    note="collar host not uniform",
                )
            )
        else:
            cert_k = collar_certificate_vector(h, witness)
            ok = spec_line.contains(-float(uniform), tolerance)
            entries.append(
                CheckEntry(
                    "collar-minus-k-eigenvalue",
                    ok,
                    {"k": uniform, "certificate_entries": len(cert_k.vector)},
                    tolerance,
                )
            )

    sw = spectral_radius_sandwich(h, tolerance)
    ok = sw.passed
    details = {
        "rho_q": sw.rho_q,
        "rho_line": sw.rho_line,
        "rank": r,
        "corank": s,
        "uniform": sw.uniform,
    }
    if connected:
        tight = (
            abs(sw.rho_q - r - sw.rho_line) <= EQUALITY_TOLERANCE
            or abs(sw.rho_line - (sw.rho_q - s)) <= EQUALITY_TOLERANCE
        )
        details["equality"] = tight
        ok = ok and (tight == sw.uniform)
    entries.append(CheckEntry("spectral-radius-sandwich", ok, details, tolerance))

    ds = degree_sum_bounds(h, tolerance)
    ok = ds.passed
    details = {
        "lower": ds.lower_bound,
        "upper": ds.upper_bound,
        "rho_q": ds.rho_q,
        "uniform_and_edge_regular": ds.uniform and ds.edge_regular,
    }
    if connected:
        tight = (
            abs(ds.rho_q - ds.lower_bound) <= EQUALITY_TOLERANCE
            or abs(ds.rho_q - ds.upper_bound) <= EQUALITY_TOLERANCE
        )
        details["equality"] = tight
        ok = ok and (tight == (ds.uniform and ds.edge_regular))
    entries.append(CheckEntry("degree-sum-bounds", ok, details, tolerance))

    params = PowerParams(t=2, k=2 * r)
    entries.append(
        CheckEntry(
            "power-line-invariance",
            power_line_invariance_check(h, params),
            {"t": params.t, "k": params.k},
        )
    )

    context = {
        "n": h.n,
        "m": h.m,
        "rank": r,
        "corank": s,
        "connected": connected,
        "uniform": uniform,
    }
    return CheckReport(context, tuple(entries))
