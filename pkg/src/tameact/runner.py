"""Verdict runner: executes the requested checks on a case in dependency
order and assembles a deterministic, witness-carrying report.
"""
from __future__ import annotations

import hashlib
import json

from .actions import (inertia_at, inertia_subgroup, slice_decompose, tame_at,
                      trace_tame, transitivity_check)
from .catalog import CatalogCase
from .geometry import (galois_map, inertia_hopf, inertia_matches_group, is_torsor)
from .linalg import Matrix
from .schema import CHECK_NAMES
from .tameness import (equivalence_report, regular_ba_module, reynold,
                       tameness_refutation, total_integral)


def _matrix_json(m: Matrix):
    return m.to_json()


def _case_digest(case: CatalogCase) -> str:
    """Stable digest of the mathematical content of a case."""
    B = case.algebra
    payload = {
        "field": B.field.spec_to_json(),
        "hopf": {"mult": B.hopf.mult.to_json(), "unit": B.hopf.unit.to_json(),
                 "comult": B.hopf.comult.to_json(), "counit": B.hopf.counit.to_json(),
                 "antipode": B.hopf.antipode.to_json()},
        "algebra": {"mult": B.mult.to_json(), "unit": B.unit.to_json()},
        "coaction": B.coaction.to_json(),
        "points": [{"field": p.residue_field.spec_to_json(),
                    "residues": [p.residue_field.to_json(x) for x in p.residues]}
                   for p in case.points],
    }
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":")).encode()
    return hashlib.sha256(blob).hexdigest()


def _total_integral_section(case: CatalogCase) -> dict:
    B = case.algebra
    alpha = total_integral(B)
    section = {"tame": alpha is not None}
    if alpha is not None:
        section["integral"] = _matrix_json(alpha.matrix)
        pr = reynold(alpha, regular_ba_module(B))
        section["reynold_regular"] = _matrix_json(pr.matrix)
    else:
        cert = tameness_refutation(B)
        section["infeasibility_certificate"] = _matrix_json(cert)
    if case.gamma_action is not None:
        witness = trace_tame(case.gamma_action)
        section["trace_witness"] = None if witness is None else _matrix_json(witness)
    return section


def _torsor_section(case: CatalogCase) -> dict:
    B = case.algebra
    g = galois_map(B)
    cert = is_torsor(B)
    free = g.absolute.is_surjective()
    section = {
        "free": free,
        "torsor": cert.verdict,
        "absolute_rank": g.absolute.rank(),
        "target_dim": g.target_dim,
        "relative_source_dim": cert.relative_source_dim,
        "relative_bijective": cert.relative_bijective,
        "rank_over_invariants": cert.free_rank,
        "invariants_dim": B.invariant_basis.cols,
    }
    if not free:
        # left-kernel functional refuting surjectivity
        y = g.absolute.transpose().kernel().col(0).transpose()
        section["cokernel_certificate"] = _matrix_json(y)
    return section


def _inertia_section(case: CatalogCase) -> dict:
    entries = []
    for idx, pt in enumerate(case.points):
        ih = inertia_hopf(case.algebra, pt)
        entry = {"label": pt.label or f"p{idx}",
                 "residue_field": pt.residue_field.spec_to_json(),
                 "dimension": ih.dimension,
                 "presentation": {"mult": _matrix_json(ih.hopf.mult),
                                  "comult": _matrix_json(ih.hopf.comult)}}
        ga = case.gamma_action
        if ga is not None:
            g0 = inertia_at(ga, idx)
            entry["group_inertia_order"] = len(g0)
            entry["matches_group_inertia"] = inertia_matches_group(
                ih, inertia_subgroup(ga, idx))
            entry["tame_at"] = tame_at(ga, idx)
        entries.append(entry)
    return {"points": entries}


def _slice_section(case: CatalogCase) -> dict:
    ga = case.gamma_action
    if ga is None:
        return {"applicable": False, "reason": "no group action supplied"}
    if not transitivity_check(ga):
        return {"applicable": False, "reason": "factor orbit not transitive"}
    sl = slice_decompose(ga, 0)
    return {
        "applicable": True,
        "stabilizer_order": len(sl.stabilizer),
        "coset_count": len(sl.coset_reps),
        "local_dim": sl.local_dim,
        "isomorphism": _matrix_json(sl.phi),
        "algebra_isomorphism": sl.algebra_isomorphism,
        "equivariant": sl.equivariant,
        "invariants_isomorphism": sl.invariants_isomorphism,
    }


def _equivalence_section(case: CatalogCase) -> dict:
    inertia = [inertia_hopf(case.algebra, pt).hopf for pt in case.points]
    rep = equivalence_report(case.algebra, inertia)
    return {
        "total_integral": rep.total_integral_exists,
        "battery_exact": rep.battery_exact,
        "reynold_feasible": rep.reynold_feasible,
        "inertia_reductive": rep.inertia_reductive,
        "free_over_invariants": rep.free_over_invariants,
        "applicable": rep.applicable,
        "agree": rep.agree,
    }


_SECTIONS = {
    "total-integral": _total_integral_section,
    "torsor": _torsor_section,
    "inertia": _inertia_section,
    "slice": _slice_section,
    "equivalence": _equivalence_section,
}


def run_case(case: CatalogCase, checks=CHECK_NAMES) -> dict:
    """Execute the checks in the canonical order and return the report."""
    B = case.algebra
    report = {
        "name": case.name,
        "description": case.description,
        "digest": _case_digest(case),
        "field": B.field.spec_to_json(),
        "dims": {"hopf": B.hopf.dim, "algebra": B.dim,
                 "invariants": B.invariant_basis.cols},
        "checks": {},
    }
    for check in CHECK_NAMES:
        if check in checks:
            report["checks"][check] = _SECTIONS[check](case)
    return report
