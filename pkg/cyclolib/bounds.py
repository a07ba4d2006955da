"""Upper bounds for A(pqr), each reported with the rule that produced it."""

from dataclasses import dataclass

from cyclolib.ntheory import mod_inverse

# Ties between rules resolve to the earliest entry
RULE_ORDER = ('kaplan_one', 'residue', 'bzdega', 'conditional', 'beiter_special', 'beiter_proved', 'bang')


@dataclass(frozen=True)
class BzdegaParams:
    alpha: int
    beta: int
    beta_star: int


@dataclass(frozen=True)
class BoundEntry:
    rule: str
    value: int
    applicable: bool


@dataclass(frozen=True)
class BoundCertificate:
    p: int
    q: int
    r: int
    entries: tuple
    best: int
    best_rule: str
    # Conjectured values of M(p); never part of best
    beiter_ref: int
    corrected_ref: int

    def entry(self, rule):
        for e in self.entries:
            if e.rule == rule:
                return e
        raise KeyError(rule)


def beiter_line(p):
    return (p + 1) // 2


def corrected_line(p):
    return (2 * p) // 3


def _bzdega_from_residues(p, q_mod, r_mod):
    q_star = mod_inverse(q_mod, p)
    r_star = mod_inverse(r_mod, p)

    alpha = min(q_star, r_star, p - q_star, p - r_star)
    beta = mod_inverse(alpha * q_mod * r_mod % p, p)

    return BzdegaParams(alpha, beta, min(beta, p - beta))


def bzdega_params(t):
    """alpha, beta, beta* of a triple; they depend only on q and r mod p."""
    return _bzdega_from_residues(t.p, t.q_bar_p, t.r_bar_p)


def residue_rules(p, q_mod, r_mod):
    """Bounds that only look at p, q mod p and r mod p."""
    bz = _bzdega_from_residues(p, q_mod, r_mod)
    b = bz.beta_star

    near_one = {1, p - 1}
    spread = min(q_mod, p - q_mod, r_mod, p - r_mod)

    return [
        BoundEntry('bzdega', min(2 * bz.alpha + b, p - b), True),
        # Exact integer form of spread > (p - 1) / 3
        BoundEntry('conditional', min(p - b, (p + b) // 2), 3 * spread > p - 1),
        BoundEntry('beiter_special', beiter_line(p), q_mod in near_one or r_mod in near_one),
        BoundEntry('beiter_proved', p - p // 4, True),
        BoundEntry('bang', p - 1, True),
    ]


def _pick_best(entries):
    best = min(e.value for e in entries if e.applicable)
    best_rule = next(e.rule for e in entries if e.applicable and e.value == best)
    return best, best_rule


def bound_certificate(t):
    """Evaluate every rule for a triple and keep the smallest applicable value."""
    pq = t.pq

    entries = [
        BoundEntry('kaplan_one', 1, t.r_bar in (1, pq - 1)),
        BoundEntry('residue', min(t.r_bar, pq - t.r_bar), True),
    ]
    entries.extend(residue_rules(t.p, t.q_bar_p, t.r_bar_p))
    entries.sort(key=lambda e: RULE_ORDER.index(e.rule))

    best, best_rule = _pick_best(entries)

    return BoundCertificate(t.p, t.q, t.r, tuple(entries), best, best_rule,
                            beiter_line(t.p), corrected_line(t.p))
