"""Independent oracles and random-instance generators shared by the tests.

The oracles work on plain frozensets of labels and dicts, never on the
package's mask or mass types, so agreement between the two routes is a real
cross-check and not a tautology.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from beliefkit import Code, EvidenceModel, Frame, MassFunction, PriorSpec


# ---------- set-of-labels oracles ----------

def powerset(labels):
    """All subsets of `labels` as frozensets, smallest first."""
    items = list(labels)
    for r in range(len(items) + 1):
        for combo in combinations(items, r):
            yield frozenset(combo)


def oracle_belief(mass_by_set, subset):
    """Eq-style summation: total mass of focal sets contained in `subset`."""
    return sum(
        (v for s, v in mass_by_set.items() if s <= subset),
        Fraction(0),
    )


def oracle_mobius(labels, belief_by_set):
    """Alternating-sign inversion of a dense belief table over frozensets."""
    mass = {}
    for a in powerset(labels):
        total = Fraction(0)
        for b in powerset(a):
            sign = -1 if (len(a) - len(b)) % 2 else 1
            total += sign * belief_by_set[b]
        if total != 0:
            mass[a] = total
    return mass


def oracle_derive(model: EvidenceModel, message):
    """Brute-force mass derivation over plain data structures.

    Enumerates every (code, plaintext) pair, filters the pairs whose
    encoding is `message`, pools code probability onto the union of each
    code's decoded plaintexts, and normalizes at the end.  Returns a dict
    frozenset -> Fraction, or None when no code can produce the message.
    """
    probs = {code.name: code.prob for code in model.codes}
    books = {
        code.name: {frozenset(mask.members): label for mask, label in code.codebook.items()}
        for code in model.codes
    }
    decoded = {}
    for name, book in books.items():
        hits = [plain for plain, label in book.items() if label == message]
        if hits:
            decoded[name] = frozenset().union(*hits)
    if not decoded:
        return None
    total = sum((probs[name] for name in decoded), Fraction(0))
    pooled = {}
    for name, union in decoded.items():
        pooled[union] = pooled.get(union, Fraction(0)) + probs[name]
    return {union: value / total for union, value in pooled.items()}


def oracle_combine(mass1_by_set, mass2_by_set):
    """Dempster's rule on frozenset-keyed mass dicts; returns (combined, conflict)."""
    pooled = {}
    conflict = Fraction(0)
    for a, va in mass1_by_set.items():
        for b, vb in mass2_by_set.items():
            meet = a & b
            if meet:
                pooled[meet] = pooled.get(meet, Fraction(0)) + va * vb
            else:
                conflict += va * vb
    if conflict == 1:
        return None, conflict
    return {s: v / (1 - conflict) for s, v in pooled.items()}, conflict


def as_set_dict(mass: MassFunction):
    """Read a MassFunction into the oracle's frozenset representation."""
    return {frozenset(mask.members): value for mask, value in mass.focal()}


# ---------- random instances ----------

LABEL_POOL = ("a", "b", "c", "d", "e", "f")


def random_fractions(rng, count):
    """`count` positive fractions summing exactly to 1."""
    weights = [rng.randint(1, 9) for _ in range(count)]
    total = sum(weights)
    return [Fraction(w, total) for w in weights]


def random_frame(rng, max_size, min_size=1):
    return Frame(LABEL_POOL[: rng.randint(min_size, max_size)])


def random_mask(rng, frame, nonempty=True):
    bits = rng.randint(1 if nonempty else 0, (1 << frame.size) - 1)
    return frame.subset(
        [label for i, label in enumerate(frame.labels) if bits >> i & 1]
    )


def random_mass(rng, frame, max_focal=4):
    count = rng.randint(1, min(max_focal, (1 << frame.size) - 1))
    masks = set()
    while len(masks) < count:
        masks.add(random_mask(rng, frame))
    masks = sorted(masks, key=lambda m: m.bits)
    return MassFunction(frame, list(zip(masks, random_fractions(rng, count))))


def random_model(rng, frame, max_codes=4, max_messages=5, max_plaintexts=4):
    messages = tuple(f"q{i}" for i in range(rng.randint(1, max_messages)))
    domain_size = rng.randint(1, min(max_plaintexts, (1 << frame.size) - 1))
    domain = set()
    while len(domain) < domain_size:
        domain.add(random_mask(rng, frame))
    domain = tuple(sorted(domain, key=lambda m: m.bits))
    count = rng.randint(1, max_codes)
    probs = random_fractions(rng, count)
    codes = tuple(
        Code(
            f"s{i}",
            probs[i],
            {mask: rng.choice(messages) for mask in domain},
        )
        for i in range(count)
    )
    return EvidenceModel(frame, messages, domain, codes)


def producible_message(rng, model):
    """A message some code actually emits, so derivation cannot fully conflict."""
    emitted = sorted({label for code in model.codes for label in code.codebook.values()})
    return rng.choice(emitted)


def random_prior(rng, plaintexts):
    values = random_fractions(rng, len(plaintexts))
    return PriorSpec(dict(zip(plaintexts, values)))
