"""Hypothesis ledgers and the certified two-sided bound.

For a curve E/Q and odd prime p of good reduction, the artifact evaluates
four ledgers (direct theorem, its corollary, the finiteness lemma, and the
converse theorem) and, where applicable, emits per-scenario bounds

    max(0, d - 1)  <=  dim Hom_G(Cl_K / p Cl_K, E[p])  <=  d + #T

with d running over the possible Selmer dimensions and K the p-division
field.  Everything lands in a deterministic, schema-versioned certificate.
"""

import json
from dataclasses import dataclass

from .curve import SUPERSINGULAR, compute_invariants, minimal_model
from .errors import InconsistentInputs, LedgerNotApplicable
from .galrep import ASSUMED_BY_USER, CM_CASE, SURJECTIVE_CERTIFIED, UNKNOWN, VACUOUS
from .localred import bad_primes

SCHEMA_VERSION = "shaclass-certificate/1"

MAIN = "Main"
COROLLARY = "Corollary"
LEMMA_FIN = "LemmaFin"
MAIN_CONV = "MainConv"
ALL_THEOREMS = (MAIN, COROLLARY, LEMMA_FIN, MAIN_CONV)

HOLDS = "Holds"
FAILS = "Fails"
UNKNOWN_STATUS = "Unknown"
ASSUMED = "Assumed"

YES = "Yes"
NO = "No"
UNKNOWN_ANSWER = "Unknown"

# Condition (b) is printed with a_p = 1 mod p in the direct theorem but with
# a_p != 1 mod p in the finiteness lemma and the converse theorem.  Those two
# forms cannot both be meant; the evaluation below treats the hypothesis as
# vacuous when a_p != 1 mod p (or supersingular), which is the reading every
# worked example relies on, and flags the discrepancy in the certificate.
B_DISCREPANCY_NOTE = (
    "condition (b) appears in two mutually inconsistent printed forms "
    "(wild ramification required when a_p = 1 mod p vs. when a_p != 1 mod p); "
    "all ledgers evaluate it as vacuous for a_p != 1 mod p or supersingular "
    "reduction, and require wild ramification only in the a_p = 1, non-CM case"
)

_B_TEXT_MAIN = (
    "(b) if reduction at p is ordinary with a_p = 1 mod p and the curve has "
    "no CM, then the mod-p representation is wildly ramified at p"
)
_B_TEXT_CONVERSE = (
    "(b) [as printed for this statement] if reduction at p is ordinary with "
    "a_p != 1 mod p, then E[p] is wildly ramified at p"
)


@dataclass(frozen=True)
class Condition:
    id: str
    statement: str
    status: str
    evidence: str


@dataclass(frozen=True)
class HypothesisLedger:
    theorem_id: str
    conditions: tuple
    notes: tuple = ()

    @property
    def applicable(self):
        return all(c.status in (HOLDS, ASSUMED) for c in self.conditions)

    def assumed_conditions(self):
        return tuple(c for c in self.conditions if c.status == ASSUMED)


@dataclass(frozen=True)
class ConclusionCertificate:
    label: str | None
    ainvs: tuple
    minimal_ainvs: tuple
    p: int
    a_p: int
    reduction_kind: str
    alpha_p_mod_p: int | None
    image_status: str
    image_witnesses: tuple
    wild_ramification: str
    local_data: dict
    tamagawa_unit_check: dict
    t_set_members: tuple
    t_set_provisional: tuple
    selmer_dims: tuple | None
    selmer_reasoning: tuple | None
    selmer_provenance: str | None
    ledgers: dict
    lower_bound_hom: dict | None
    upper_bound_hom: dict | None
    unramified_extension_exists: str
    equality_note: bool
    assumptions: tuple
    notes: tuple


def evaluate_hypotheses(model, p, image_cert, profile, wild_status, tamagawa_map):
    """Map each theorem's printed conditions to Holds/Fails/Unknown/Assumed."""
    if image_cert.p != p or profile.p != p:
        raise InconsistentInputs(
            f"certificates disagree on p: {image_cert.p}, {profile.p}, {p}"
        )

    bad = bad_primes(model)
    if p in bad:
        cond_a = Condition("a", "(a) good reduction at p", FAILS, f"p divides the minimal discriminant (bad primes {list(bad)})")
    else:
        cond_a = Condition("a", "(a) good reduction at p", HOLDS, f"p not among bad primes {list(bad)}")

    status_map = {
        VACUOUS: (HOLDS, "vacuous: supersingular or a_p != 1 mod p"),
        CM_CASE: (HOLDS, "curve has CM; wild ramification need not be assumed"),
        ASSUMED_BY_USER: (ASSUMED, "asserted via galrep.assume_wild_ramification"),
        UNKNOWN: (UNKNOWN_STATUS, "a_p = 1 mod p, no CM, and no certificate for wild ramification"),
    }
    b_status, b_evidence = status_map[wild_status.status]

    def cond_b(statement):
        return Condition("b", statement, b_status, b_evidence)

    if all(tamagawa_map.values()):
        detail = ", ".join(f"c_{q} prime to {p}" for q in sorted(tamagawa_map))
        cond_c = Condition("c", "(c) every Tamagawa number c_v, v != p, is prime to p", HOLDS, detail or "no bad primes besides p")
    else:
        offenders = sorted(q for q, ok in tamagawa_map.items() if not ok)
        cond_c = Condition("c", "(c) every Tamagawa number c_v, v != p, is prime to p", FAILS, f"p divides c_v for v in {offenders}")

    if image_cert.status == SURJECTIVE_CERTIFIED:
        cond_d = Condition("d", "(d) E[p] is an irreducible Galois module", HOLDS, "mod-p image certified surjective; the standard module is irreducible")
    else:
        cond_d = Condition("d", "(d) E[p] is an irreducible Galois module", UNKNOWN_STATUS, f"image certificate status: {image_cert.status}")

    main = HypothesisLedger(MAIN, (cond_a, cond_b(_B_TEXT_MAIN), cond_c, cond_d))
    corollary = HypothesisLedger(
        COROLLARY,
        (cond_a, cond_b(_B_TEXT_MAIN), cond_c, cond_d),
        notes=("conclusion clause (Sha[p] rank / Mordell-Weil rank) evaluated separately",),
    )
    conv_note = (B_DISCREPANCY_NOTE,)
    lemma_fin = HypothesisLedger(
        LEMMA_FIN, (cond_a, cond_b(_B_TEXT_CONVERSE), cond_c), notes=conv_note
    )
    main_conv = HypothesisLedger(
        MAIN_CONV, (cond_a, cond_b(_B_TEXT_CONVERSE), cond_c, cond_d), notes=conv_note
    )
    return {MAIN: main, COROLLARY: corollary, LEMMA_FIN: lemma_fin, MAIN_CONV: main_conv}


def apply_lower_bound(main_ledger, scenario):
    """Per-scenario lower bound max(0, d - 1) for dim Hom_G(Cl_K/pCl_K, E[p])."""
    if main_ledger.theorem_id != MAIN:
        raise InconsistentInputs("lower bound needs the Main ledger")
    if not main_ledger.applicable:
        raise LedgerNotApplicable("Main ledger has a failed or unknown condition")
    return {d: max(0, d - 1) for d in scenario.possible_dims}


def apply_corollary(main_ledger, record, scenario, assume_sha_finite=True):
    """Does an unramified abelian extension of K with group E[p] exist?"""
    if not main_ledger.applicable:
        raise LedgerNotApplicable("Main ledger has a failed or unknown condition")
    if record is None:
        return UNKNOWN_ANSWER
    p = scenario.p
    r = record.sha_p_rank(p)
    if r is not None and r > 1:
        return YES
    if r is not None and r >= 1 and assume_sha_finite:
        return YES
    if r is None and record.sha_order is not None and record.sha_order % p == 0 and assume_sha_finite:
        return YES  # Sha[p] != 0 plus finiteness forces rank >= 2
    if record.mw_rank >= 2:
        return YES
    return UNKNOWN_ANSWER


def apply_upper_bound(mainconv_ledger, scenario, t_set):
    """Per-scenario upper bound d + #T (provisional members counted)."""
    if mainconv_ledger.theorem_id != MAIN_CONV:
        raise InconsistentInputs("upper bound needs the MainConv ledger")
    if not mainconv_ledger.applicable:
        raise LedgerNotApplicable("MainConv ledger has a failed or unknown condition")
    size = t_set.size_for_bound()
    bounds = {d: d + size for d in scenario.possible_dims}
    equality = not t_set.members and not t_set.provisional_members
    return bounds, equality


def emit_certificate(
    model,
    p,
    profile,
    image_cert,
    wild_status,
    local,
    tamagawa_map,
    t_set,
    ledgers,
    scenario=None,
    record=None,
    assume_sha_finite=True,
    label=None,
    extra_assumptions=(),
):
    """Assemble the deterministic conclusion certificate."""
    assumptions = list(extra_assumptions)
    notes = [B_DISCREPANCY_NOTE]
    if wild_status.status == ASSUMED_BY_USER:
        assumptions.append("wild ramification at p assumed by user flag")
    if assume_sha_finite:
        assumptions.append("Sha[p^infinity] assumed finite (even Sha[p]-rank)")
    if t_set.provisional_members:
        notes.append(
            "provisional T members counted in the upper bound: "
            f"{sorted(t_set.provisional_members)} (p = 3 additive cases not decided)"
        )
    if scenario is not None:
        notes.extend(scenario.notes)

    lower = upper = None
    equality = False
    corollary_answer = UNKNOWN_ANSWER
    if scenario is not None:
        if ledgers[MAIN].applicable:
            lower = apply_lower_bound(ledgers[MAIN], scenario)
            corollary_answer = apply_corollary(
                ledgers[MAIN], record, scenario, assume_sha_finite
            )
        if ledgers[MAIN_CONV].applicable:
            upper, equality = apply_upper_bound(ledgers[MAIN_CONV], scenario, t_set)
    if lower is not None and upper is not None:
        for d in lower:
            assert lower[d] <= upper[d]

    mmodel = minimal_model(model)
    return ConclusionCertificate(
        label=label,
        ainvs=model.ainvs(),
        minimal_ainvs=mmodel.ainvs(),
        p=p,
        a_p=profile.a_p,
        reduction_kind=profile.reduction_kind,
        alpha_p_mod_p=profile.alpha_p_mod_p,
        image_status=image_cert.status,
        image_witnesses=image_cert.witnesses,
        wild_ramification=wild_status.status,
        local_data={
            q: {
                "kodaira": d.kodaira,
                "reduction_class": d.reduction_class,
                "c_v": d.c_v,
                "val_delta_min": d.val_delta_min,
                "conductor_exponent": d.conductor_exponent,
            }
            for q, d in sorted(local.items())
        },
        tamagawa_unit_check=dict(sorted(tamagawa_map.items())),
        t_set_members=tuple(sorted(t_set.members)),
        t_set_provisional=tuple(sorted(t_set.provisional_members)),
        selmer_dims=scenario.possible_dims if scenario else None,
        selmer_reasoning=scenario.reasoning if scenario else None,
        selmer_provenance=record.provenance if record else None,
        ledgers=ledgers,
        lower_bound_hom=lower,
        upper_bound_hom=upper,
        unramified_extension_exists=corollary_answer,
        equality_note=equality,
        assumptions=tuple(assumptions),
        notes=tuple(notes),
    )


def analyze(
    model,
    p,
    record=None,
    sample_bound=None,
    assume_wild_ramification=False,
    assume_sha_finite=True,
    label=None,
):
    """Full pipeline for one curve and prime; record may be None (degraded)."""
    from .curve import classify_good_prime, detect_cm
    from .galrep import DEFAULT_SAMPLE_BOUND, certify_image, wild_ramification_status
    from .localred import compute_t_set, local_data, tamagawa_unit_check
    from .selmerdata import selmer_rank_scenarios

    bound = sample_bound or DEFAULT_SAMPLE_BOUND
    profile = classify_good_prime(model, p)
    image_cert = certify_image(model, p, bound)
    cm = detect_cm(compute_invariants(model).j)
    wild = wild_ramification_status(model, profile, cm, assume_wild_ramification)
    local = local_data(model)
    tmap = tamagawa_unit_check(model, p)
    t_set = compute_t_set(model, p)
    ledgers = evaluate_hypotheses(model, p, image_cert, profile, wild, tmap)

    scenario = None
    if record is not None:
        from .errors import InsufficientData

        try:
            scenario = selmer_rank_scenarios(
                record, p, image_cert.status == SURJECTIVE_CERTIFIED, assume_sha_finite
            )
        except InsufficientData:
            scenario = None
    return emit_certificate(
        model,
        p,
        profile,
        image_cert,
        wild,
        local,
        tmap,
        t_set,
        ledgers,
        scenario=scenario,
        record=record,
        assume_sha_finite=assume_sha_finite,
        label=label,
    )


# --- serialization -------------------------------------------------------


def certificate_to_dict(cert):
    ledgers = {}
    for tid in ALL_THEOREMS:
        led = cert.ledgers[tid]
        ledgers[tid] = {
            "applicable": led.applicable,
            "conditions": [
                {
                    "id": c.id,
                    "statement": c.statement,
                    "status": c.status,
                    "evidence": c.evidence,
                }
                for c in led.conditions
            ],
            "notes": list(led.notes),
        }
    return {
        "schema_version": SCHEMA_VERSION,
        "label": cert.label,
        "ainvs": list(cert.ainvs),
        "minimal_ainvs": list(cert.minimal_ainvs),
        "p": cert.p,
        "a_p": cert.a_p,
        "reduction_kind": cert.reduction_kind,
        "alpha_p_mod_p": cert.alpha_p_mod_p,
        "image_status": cert.image_status,
        "image_witnesses": [list(w) for w in cert.image_witnesses],
        "wild_ramification": cert.wild_ramification,
        "local_data": {str(q): d for q, d in cert.local_data.items()},
        "tamagawa_unit_check": {str(q): v for q, v in cert.tamagawa_unit_check.items()},
        "t_set": {
            "members": list(cert.t_set_members),
            "provisional_members": list(cert.t_set_provisional),
        },
        "selmer": None
        if cert.selmer_dims is None
        else {
            "possible_dims": list(cert.selmer_dims),
            "reasoning": list(cert.selmer_reasoning),
            "provenance": cert.selmer_provenance,
        },
        "ledgers": ledgers,
        "bounds": None
        if cert.lower_bound_hom is None and cert.upper_bound_hom is None
        else {
            str(d): {
                "lower": None if cert.lower_bound_hom is None else cert.lower_bound_hom.get(d),
                "upper": None if cert.upper_bound_hom is None else cert.upper_bound_hom.get(d),
            }
            for d in (cert.selmer_dims or ())
        },
        "unramified_extension_exists": cert.unramified_extension_exists,
        "equality_note": cert.equality_note,
        "assumptions": list(cert.assumptions),
        "notes": list(cert.notes),
    }


def certificate_to_json(cert):
    return json.dumps(certificate_to_dict(cert), indent=2, sort_keys=False) + "\n"


def certificate_to_text(cert):
    doc = certificate_to_dict(cert)
    lines = []
    add = lines.append
    add(f"curve {doc['label'] or doc['ainvs']}  p = {doc['p']}")
    add(f"  model: {doc['ainvs']}   minimal: {doc['minimal_ainvs']}")
    add(
        f"  reduction at p: {doc['reduction_kind']}, a_p = {doc['a_p']}"
        + (
            f", unit root = {doc['alpha_p_mod_p']} mod {doc['p']}"
            if doc["alpha_p_mod_p"] is not None
            else ""
        )
    )
    add(f"  mod-p image: {doc['image_status']}")
    add(f"  wild ramification hypothesis: {doc['wild_ramification']}")
    add("  local data:")
    for q, d in doc["local_data"].items():
        add(
            f"    v = {q}: {d['kodaira']} ({d['reduction_class']}), c_v = {d['c_v']},"
            f" v(disc) = {d['val_delta_min']}, f = {d['conductor_exponent']}"
        )
    add(f"  Tamagawa unit check: {doc['tamagawa_unit_check']}")
    add(
        f"  T = {doc['t_set']['members']}"
        + (f" plus provisional {doc['t_set']['provisional_members']}" if doc["t_set"]["provisional_members"] else "")
    )
    if doc["selmer"]:
        add(
            f"  Selmer dim scenarios: {doc['selmer']['possible_dims']} "
            f"[{doc['selmer']['provenance']}]"
        )
        for dim, reason in zip(doc["selmer"]["possible_dims"], doc["selmer"]["reasoning"]):
            add(f"    dim {dim}: {reason}")
    else:
        add("  Selmer dim scenarios: unavailable (no arithmetic record)")
    add("  ledgers:")
    for tid in ALL_THEOREMS:
        led = doc["ledgers"][tid]
        flag = "applicable" if led["applicable"] else "NOT applicable"
        add(f"    {tid}: {flag}")
        for c in led["conditions"]:
            add(f"      ({c['id']}) {c['status']}: {c['evidence']}")
    if doc["bounds"]:
        add("  bounds on dim Hom_G(Cl_K/pCl_K, E[p]) per scenario:")
        for d, b in doc["bounds"].items():
            lo = "?" if b["lower"] is None else b["lower"]
            hi = "?" if b["upper"] is None else b["upper"]
            add(f"    Selmer dim {d}: {lo} <= dim Hom <= {hi}")
    else:
        add("  bounds: not emitted")
    add(f"  unramified abelian extension with group E[p]: {doc['unramified_extension_exists']}")
    if doc["equality_note"]:
        add("  T empty: dim Hom_G equals the dimension of the everywhere-unramified subgroup of Sel_p")
    if doc["assumptions"]:
        add("  assumptions:")
        for a in doc["assumptions"]:
            add(f"    - {a}")
    if doc["notes"]:
        add("  notes:")
        for nt in doc["notes"]:
            add(f"    - {nt}")
    return "\n".join(lines) + "\n"
